//! Graph isomorphism by colour refinement and backtracking.

use std::collections::{BTreeMap, BTreeSet};

use crate::budget::Budget;
use crate::error::Result;
use crate::graph::Graph;

/// Stable colouring of the disjoint union of `g` and `h` (colours are comparable across both).
fn refine(g: &Graph, h: &Graph) -> (Vec<usize>, Vec<usize>) {
    let n = g.len();
    let nbrs = |v: usize| -> &[usize] {
        if v < n {
            g.neighbors(v)
        } else {
            h.neighbors(v - n)
        }
    };
    let offset = |v: usize| if v < n { 0 } else { n };
    let total = n + h.len();
    let mut colour: Vec<usize> = (0..total).map(|v| nbrs(v).len()).collect();
    loop {
        let keys: Vec<(usize, Vec<usize>)> = (0..total)
            .map(|v| {
                let mut ns: Vec<usize> = nbrs(v).iter().map(|&w| colour[w + offset(v)]).collect();
                ns.sort_unstable();
                (colour[v], ns)
            })
            .collect();
        // number the signatures in sorted order so both graphs get the same colour names
        let rank: BTreeMap<&(usize, Vec<usize>), usize> =
            keys.iter().collect::<BTreeSet<_>>().into_iter().enumerate().map(|(i, k)| (k, i)).collect();
        let next: Vec<usize> = keys.iter().map(|k| rank[k]).collect();
        let before = colour.iter().collect::<BTreeSet<_>>().len();
        let after = rank.len();
        colour = next;
        if after == before {
            break;
        }
    }
    let hc = colour.split_off(n);
    (colour, hc)
}

/// An isomorphism `g → h` as a vertex map, if one exists.
pub fn find_isomorphism(g: &Graph, h: &Graph, budget: &Budget) -> Result<Option<Vec<usize>>> {
    if g.len() != h.len() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let (cg, ch) = refine(g, h);
    let mut a = cg.clone();
    let mut b = ch.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Ok(None);
    }
    // map vertices of g in order of rarest colour first, preferring neighbours of mapped ones
    let mut freq: BTreeMap<usize, usize> = BTreeMap::new();
    for &c in &cg {
        *freq.entry(c).or_default() += 1;
    }
    let mut order = Vec::with_capacity(g.len());
    let mut placed = vec![false; g.len()];
    while order.len() < g.len() {
        let next = (0..g.len())
            .filter(|&v| !placed[v])
            .max_by_key(|&v| {
                let touching = g.neighbors(v).iter().filter(|&&w| placed[w]).count();
                (touching, std::cmp::Reverse(freq[&cg[v]]), std::cmp::Reverse(v))
            })
            .expect("unplaced vertex exists");
        placed[next] = true;
        order.push(next);
    }
    let mut map = vec![usize::MAX; g.len()];
    let mut used = vec![false; h.len()];
    if extend(g, h, &cg, &ch, &order, 0, &mut map, &mut used, budget)? {
        Ok(Some(map))
    } else {
        Ok(None)
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    cg: &[usize],
    ch: &[usize],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
    budget: &Budget,
) -> Result<bool> {
    let Some(&v) = order.get(depth) else {
        return Ok(true);
    };
    for w in 0..h.len() {
        if used[w] || ch[w] != cg[v] {
            continue;
        }
        budget.tick()?;
        let consistent = order[..depth].iter().all(|&u| g.adjacent(u, v) == h.adjacent(map[u], w));
        if !consistent {
            continue;
        }
        map[v] = w;
        used[w] = true;
        if extend(g, h, cg, ch, order, depth + 1, map, used, budget)? {
            return Ok(true);
        }
        used[w] = false;
        map[v] = usize::MAX;
    }
    Ok(false)
}

pub fn are_isomorphic(g: &Graph, h: &Graph, budget: &Budget) -> Result<bool> {
    Ok(find_isomorphism(g, h, budget)?.is_some())
}
