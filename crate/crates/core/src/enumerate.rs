//! Exhaustive, budgeted enumeration of cliques and induced cycles.

use std::ops::ControlFlow;

use fixedbitset::FixedBitSet;

use crate::budget::Budget;
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// Visit every nonempty clique contained in `within`, in lexicographic order of the sorted
/// vertex lists. Returns `Break` if the visitor stopped early.
pub fn for_each_clique<F>(
    g: &Graph,
    within: &VertexSet,
    budget: &Budget,
    mut visit: F,
) -> Result<ControlFlow<()>>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let mut clique = Vec::new();
    clique_rec(g, &mut clique, within.clone(), budget, &mut visit)
}

fn clique_rec<F>(
    g: &Graph,
    clique: &mut Vec<usize>,
    candidates: FixedBitSet,
    budget: &Budget,
    visit: &mut F,
) -> Result<ControlFlow<()>>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    for v in candidates.ones() {
        budget.tick()?;
        clique.push(v);
        if visit(clique).is_break() {
            return Ok(ControlFlow::Break(()));
        }
        let mut next = candidates.clone();
        next.intersect_with(g.row(v));
        next.set_range(..v + 1, false);
        if !next.is_clear() && clique_rec(g, clique, next, budget, visit)?.is_break() {
            return Ok(ControlFlow::Break(()));
        }
        clique.pop();
    }
    Ok(ControlFlow::Continue(()))
}

/// All cliques inside `within`, grouped by size (index 0 holds the vertices).
pub fn cliques_by_size(g: &Graph, within: &VertexSet, budget: &Budget) -> Result<Vec<Vec<Vec<usize>>>> {
    let mut out: Vec<Vec<Vec<usize>>> = Vec::new();
    let _ = for_each_clique(g, within, budget, |c| {
        if out.len() < c.len() {
            out.resize_with(c.len(), Vec::new);
        }
        out[c.len() - 1].push(c.to_vec());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// Maximal cliques inside `within` (Bron–Kerbosch with Tomita pivoting), each sorted,
/// returned in lexicographic order.
pub fn maximal_cliques(g: &Graph, within: &VertexSet, budget: &Budget) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let mut r = Vec::new();
    let x = FixedBitSet::with_capacity(g.len());
    bron_kerbosch(g, &mut r, within.clone(), x, budget, &mut out)?;
    for c in out.iter_mut() {
        c.sort_unstable();
    }
    out.sort();
    Ok(out)
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut Vec<usize>,
    mut p: FixedBitSet,
    mut x: FixedBitSet,
    budget: &Budget,
    out: &mut Vec<Vec<usize>>,
) -> Result<()> {
    budget.tick()?;
    if p.is_clear() {
        if x.is_clear() && !r.is_empty() {
            out.push(r.clone());
        }
        return Ok(());
    }
    // pivot: vertex of P ∪ X with most neighbours in P
    let pivot = p
        .ones()
        .chain(x.ones())
        .max_by_key(|&u| p.intersection(g.row(u)).count())
        .expect("P nonempty");
    let mut todo = p.clone();
    todo.difference_with(g.row(pivot));
    for v in todo.ones() {
        let mut np = p.clone();
        np.intersect_with(g.row(v));
        let mut nx = x.clone();
        nx.intersect_with(g.row(v));
        r.push(v);
        bron_kerbosch(g, r, np, nx, budget, out)?;
        r.pop();
        p.set(v, false);
        x.insert(v);
    }
    Ok(())
}

/// Size of the largest clique inside `within`.
pub fn clique_number(g: &Graph, within: &VertexSet, budget: &Budget) -> Result<usize> {
    Ok(maximal_cliques(g, within, budget)?
        .iter()
        .map(Vec::len)
        .max()
        .unwrap_or(0))
}

/// Visit every induced (chordless) cycle of length in `min_len..=max_len` inside `within`.
///
/// Each cycle is reported once, starting at its smallest vertex and oriented so that the
/// second vertex is smaller than the last.
pub fn for_each_induced_cycle<F>(
    g: &Graph,
    within: &VertexSet,
    min_len: usize,
    max_len: usize,
    budget: &Budget,
    mut visit: F,
) -> Result<ControlFlow<()>>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let min_len = min_len.max(4);
    if max_len < min_len {
        return Ok(ControlFlow::Continue(()));
    }
    for s in within.ones() {
        let mut allowed = within.clone();
        allowed.set_range(..s + 1, false);
        let mut first = allowed.clone();
        first.intersect_with(g.row(s));
        for p1 in first.ones() {
            budget.tick()?;
            let mut path = vec![s, p1];
            // vertices adjacent to some interior path vertex (all but the last)
            let forbidden = FixedBitSet::with_capacity(g.len());
            let mut st = CycleSearch {
                g,
                allowed: &allowed,
                min_len,
                max_len,
                budget,
                visit: &mut visit,
            };
            if st.extend(&mut path, forbidden)?.is_break() {
                return Ok(ControlFlow::Break(()));
            }
        }
    }
    Ok(ControlFlow::Continue(()))
}

struct CycleSearch<'a, F> {
    g: &'a Graph,
    allowed: &'a FixedBitSet,
    min_len: usize,
    max_len: usize,
    budget: &'a Budget,
    visit: &'a mut F,
}

impl<F> CycleSearch<'_, F>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    fn extend(&mut self, path: &mut Vec<usize>, forbidden: FixedBitSet) -> Result<ControlFlow<()>> {
        let s = path[0];
        let last = *path.last().unwrap();
        let mut cand = self.allowed.clone();
        cand.intersect_with(self.g.row(last));
        cand.difference_with(&forbidden);
        for &p in path.iter() {
            cand.set(p, false);
        }
        for x in cand.ones() {
            self.budget.tick()?;
            let len = path.len() + 1;
            if self.g.adjacent(x, s) {
                // x closes the cycle; it cannot be extended without a chord at s
                if len >= self.min_len && len <= self.max_len && path[1] < x {
                    path.push(x);
                    let flow = (self.visit)(path);
                    path.pop();
                    if flow.is_break() {
                        return Ok(ControlFlow::Break(()));
                    }
                }
            } else if len < self.max_len {
                let mut next_forbidden = forbidden.clone();
                next_forbidden.union_with(self.g.row(last));
                path.push(x);
                let flow = self.extend(path, next_forbidden)?;
                path.pop();
                if flow.is_break() {
                    return Ok(ControlFlow::Break(()));
                }
            }
        }
        Ok(ControlFlow::Continue(()))
    }
}

/// First induced cycle of length in `min_len..=max_len` inside `within`, if any.
pub fn first_induced_cycle(
    g: &Graph,
    within: &VertexSet,
    min_len: usize,
    max_len: usize,
    budget: &Budget,
) -> Result<Option<Vec<usize>>> {
    let mut found = None;
    let _ = for_each_induced_cycle(g, within, min_len, max_len, budget, |c| {
        found = Some(c.to_vec());
        ControlFlow::Break(())
    })?;
    Ok(found)
}
