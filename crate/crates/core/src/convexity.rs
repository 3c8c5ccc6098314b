//! Convexity, 3-convexity and local 3-convexity of full subcomplexes; convexity of balls;
//! convex neighbourhoods of quasi-convex subcomplexes.

use crate::budget::Budget;
use crate::complex::{DistanceMatrix, FlagComplex, Simplex, Subcomplex, INF};
use crate::conditions::{check_sd2_star_k, check_sdn, is_weakly_systolic};
use crate::error::{Error, Result};
use crate::graph::VertexSet;
use crate::verdict::{Certificate, Verdict};

fn require_full(y: &Subcomplex<'_>) -> Result<()> {
    if y.is_empty() {
        return Err(Error::EmptySubcomplex);
    }
    if !y.is_full() {
        return Err(Error::NotFull);
    }
    Ok(())
}

fn require_weakly_systolic(x: &FlagComplex) -> Result<()> {
    let ws = is_weakly_systolic(x)?;
    if !ws.holds {
        return Err(Error::precondition("weakly-systolic", ws));
    }
    Ok(())
}

/// Search the geodesics from `u` to `w` for one that leaves `inside`. Geodesic prefixes
/// ending at the same vertex have the same continuations, so each vertex is expanded once.
fn escaping_geodesic(
    x: &FlagComplex,
    dm: &DistanceMatrix,
    inside: &VertexSet,
    u: usize,
    w: usize,
    budget: &Budget,
) -> Result<Option<Vec<usize>>> {
    let g = x.skeleton();
    let mut parent = vec![usize::MAX; g.len()];
    let mut stack = vec![u];
    parent[u] = u;
    while let Some(p) = stack.pop() {
        let dp = dm.raw(p, w);
        for &q in g.neighbors(p) {
            if dm.raw(q, w) + 1 != dp || parent[q] != usize::MAX {
                continue;
            }
            budget.tick()?;
            parent[q] = p;
            if !inside.contains(q) {
                // u → q along parents, then greedily down to w
                let mut path = vec![q];
                let mut c = q;
                while c != u {
                    c = parent[c];
                    path.push(c);
                }
                path.reverse();
                let mut c = q;
                while c != w {
                    c = *g.neighbors(c).iter().find(|&&r| dm.raw(r, w) + 1 == dm.raw(c, w)).expect("geodesic continues");
                    path.push(c);
                }
                return Ok(Some(path));
            }
            stack.push(q);
        }
    }
    Ok(None)
}

fn convex_with(x: &FlagComplex, dm: &DistanceMatrix, y: &Subcomplex<'_>, budget: &Budget) -> Result<Verdict> {
    let mut v = Verdict::pass("convex");
    if !y.is_connected() {
        v.holds = false;
        v.certificate = Some(Certificate::Note("the subcomplex is disconnected".into()));
        return Ok(v);
    }
    let vs = y.vertices();
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i + 1..] {
            if dm.raw(a, b) < 2 {
                continue;
            }
            v.add_stat("pairs", 1);
            if let Some(path) = escaping_geodesic(x, dm, y.vertex_set(), a, b, budget)? {
                v.holds = false;
                v.certificate = Some(Certificate::Geodesic(path));
                return Ok(v);
            }
        }
    }
    Ok(v)
}

/// Convexity: `Y` is connected and contains every geodesic of `X` between its vertices.
/// Brute force over geodesics.
pub fn is_convex(x: &FlagComplex, y: &Subcomplex<'_>, budget: &Budget) -> Result<Verdict> {
    require_full(y)?;
    convex_with(x, &x.all_pairs(), y, budget)
}

/// 3-convexity: every geodesic of length 2 with both ends in `Y` has its middle in `Y`.
pub fn is_3_convex(x: &FlagComplex, y: &Subcomplex<'_>, budget: &Budget) -> Result<Verdict> {
    require_full(y)?;
    let g = x.skeleton();
    let vs = y.vertices();
    for (i, &a) in vs.iter().enumerate() {
        for &c in &vs[i + 1..] {
            budget.tick()?;
            if g.adjacent(a, c) {
                continue;
            }
            let mut mids = g.row(a).clone();
            mids.intersect_with(g.row(c));
            if let Some(m) = mids.ones().find(|&m| !y.contains(m)) {
                return Ok(Verdict::fail("3-convex", Certificate::Path { at: None, path: [a, m, c] }));
            }
        }
    }
    Ok(Verdict::pass("3-convex"))
}

/// Local 3-convexity: for every vertex `v ∈ Y` the link `Y_v` is 3-convex in `X_v`.
pub fn is_locally_3_convex(x: &FlagComplex, y: &Subcomplex<'_>, budget: &Budget) -> Result<Verdict> {
    require_full(y)?;
    let g = x.skeleton();
    for v in y.vertices() {
        let link = g.row(v);
        let zv: Vec<usize> = link.ones().filter(|&u| y.contains(u)).collect();
        for (i, &a) in zv.iter().enumerate() {
            for &c in &zv[i + 1..] {
                budget.tick()?;
                if g.adjacent(a, c) {
                    continue;
                }
                let mut mids = g.row(a).clone();
                mids.intersect_with(g.row(c));
                mids.intersect_with(link);
                if let Some(m) = mids.ones().find(|&m| !y.contains(m)) {
                    return Ok(Verdict::fail(
                        "locally-3-convex",
                        Certificate::Path {
                            at: Some(v),
                            path: [a, m, c],
                        },
                    ));
                }
            }
        }
    }
    Ok(Verdict::pass("locally-3-convex"))
}

/// Edges descend on balls: for every edge `zz'` in a sphere `S_i(σ)`, `i ≥ 1`, some
/// `v ∈ B_{i−1}(σ)` adjacent to both has `d(v, w) = i − 1` for some `w ∈ σ`.
pub fn check_edge_descent(x: &FlagComplex, sigma: &Simplex, budget: &Budget) -> Result<Verdict> {
    x.simplex(sigma.vertices())?;
    require_weakly_systolic(x)?;
    let g = x.skeleton();
    let dist = x.distances_from(sigma.vertices().iter().copied());
    let per: Vec<Vec<usize>> = sigma.vertices().iter().map(|&w| x.distances_from([w])).collect();
    let mut v = Verdict::pass("edge-descent");
    for (z, z2) in g.edges() {
        let i = dist[z];
        if i == 0 || i == INF || dist[z2] != i {
            continue;
        }
        budget.tick()?;
        v.add_stat("edges", 1);
        let ok = g.neighbors(z).iter().any(|&u| {
            g.adjacent(u, z2) && dist[u] + 1 <= i && per.iter().any(|d| d[u] == i - 1)
        });
        if !ok {
            v.holds = false;
            v.certificate = Some(Certificate::Edge { edge: [z, z2], radius: i });
            return Ok(v);
        }
    }
    Ok(v)
}

/// Convexity of `B_i(σ)`; for a maximal simplex also `SD_n(σ)` at every radius.
pub fn check_ball_convexity_sigma(x: &FlagComplex, sigma: &Simplex, i: usize, budget: &Budget) -> Result<Verdict> {
    x.simplex(sigma.vertices())?;
    require_weakly_systolic(x)?;
    let g = x.skeleton();
    let ball = Subcomplex::spanned(x, x.ball_set(&g.set_of(sigma.vertices().iter().copied()), i));
    let mut v = is_convex(x, &ball, budget)?;
    v.condition = format!("ball-convexity({i})");
    if !v.holds {
        return Ok(v);
    }
    let maximal = g.common_neighbors(sigma.vertices()).is_clear();
    if maximal {
        let a = Subcomplex::spanned(x, g.set_of(sigma.vertices().iter().copied()));
        let dist = x.distances_from(sigma.vertices().iter().copied());
        let top = dist.iter().copied().filter(|&d| d != INF).max().unwrap_or(0);
        let sd = check_sdn(x, &a, top.max(1), budget)?;
        v.add_stat("sd_checked", 1);
        if !sd.holds {
            v.holds = false;
            v.certificate = sd.certificate;
        }
    }
    Ok(v)
}

/// Smallest `K` such that every geodesic between vertices of `Y` stays within `K` of `Y`,
/// or `None` when `X` is disconnected.
pub fn quasi_convexity_constant(x: &FlagComplex, y: &Subcomplex<'_>) -> Result<Option<usize>> {
    if y.is_empty() {
        return Err(Error::EmptySubcomplex);
    }
    let dm = x.all_pairs();
    let to_y = x.distances_from(y.vertices());
    let vs = y.vertices();
    let mut k = 0;
    for (i, &a) in vs.iter().enumerate() {
        for &b in &vs[i..] {
            let Some(d) = dm.get(a, b) else { return Ok(None) };
            for z in x.skeleton().vertices() {
                if dm.raw(a, z) != INF && dm.raw(a, z) + dm.raw(z, b) == d {
                    k = k.max(to_y[z]);
                }
            }
        }
    }
    Ok(Some(k))
}

/// Smallest `n ≤ n_max` with `B_n(Y)` convex. Requires `X` weakly systolic with `SD₂*(7)`.
pub fn find_convex_neighborhood(
    x: &FlagComplex,
    y: &Subcomplex<'_>,
    n_max: usize,
    budget: &Budget,
) -> Result<Option<usize>> {
    require_full(y)?;
    require_weakly_systolic(x)?;
    let s7 = check_sd2_star_k(x, 7, budget)?;
    if !s7.holds {
        return Err(Error::precondition("sd2star(7)", s7));
    }
    let dm = x.all_pairs();
    for n in 0..=n_max {
        let ball = Subcomplex::spanned(x, x.ball_set(y.vertex_set(), n));
        if convex_with(x, &dm, &ball, budget)?.holds {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

/// For every `v` and `v1, v2 ∈ S_n(v)` with `g = d(v1, v2) ≤ n`, some `u` with `d(v, u) = n − g`
/// lies on geodesics from `v` to both, i.e. `d(u, v1) = d(u, v2) = g`.
pub fn check_y_lemma(x: &FlagComplex, budget: &Budget) -> Result<Verdict> {
    let dm = x.all_pairs();
    let n = x.len();
    let mut v = Verdict::pass("y-lemma");
    for c in 0..n {
        for a in 0..n {
            let na = dm.raw(c, a);
            if na == INF {
                continue;
            }
            for b in a + 1..n {
                if dm.raw(c, b) != na {
                    continue;
                }
                let g = dm.raw(a, b);
                if g > na {
                    continue;
                }
                budget.tick()?;
                v.add_stat("pairs", 1);
                let ok = (0..n).any(|u| dm.raw(c, u) == na - g && dm.raw(u, a) == g && dm.raw(u, b) == g);
                if !ok {
                    v.holds = false;
                    v.certificate = Some(Certificate::Vertex {
                        vertex: c,
                        detail: format!(
                            "no common geodesic prefix towards {} and {}",
                            x.skeleton().label(a),
                            x.skeleton().label(b)
                        ),
                    });
                    return Ok(v);
                }
            }
        }
    }
    Ok(v)
}

/// For geodesics `(v0, v1, …, vn)` and `(v0, v1', …, vn')` with `d(v1, v1') = 2`, checks
/// `n < 5 + d(vn, vn')`, over every origin, every pair of endpoints and every admissible pair
/// of first steps.
pub fn check_bigon_divergence(x: &FlagComplex, budget: &Budget) -> Result<Verdict> {
    let dm = x.all_pairs();
    let g = x.skeleton();
    let n = x.len();
    let mut v = Verdict::pass("bigon-divergence");
    for o in 0..n {
        let first = g.neighbors(o);
        for a in 0..n {
            let len = dm.raw(o, a);
            if len == INF || len < 2 {
                continue;
            }
            for b in 0..n {
                if dm.raw(o, b) != len || len < 5 + dm.raw(a, b) {
                    continue;
                }
                budget.tick()?;
                v.add_stat("pairs", 1);
                let starts_a = first.iter().filter(|&&s| dm.raw(s, a) + 1 == len);
                for &s in starts_a {
                    let bad = first.iter().find(|&&t| dm.raw(t, b) + 1 == len && dm.raw(s, t) == 2);
                    if let Some(&t) = bad {
                        v.holds = false;
                        v.certificate = Some(Certificate::Vertex {
                            vertex: o,
                            detail: format!(
                                "geodesics to {} and {} of length {len} start at distance 2 ({} and {}) but end {} apart",
                                g.label(a),
                                g.label(b),
                                g.label(s),
                                g.label(t),
                                dm.raw(a, b)
                            ),
                        });
                        return Ok(v);
                    }
                }
            }
        }
    }
    Ok(v)
}

/// For `v1, v2` with `d(v1, v2) ≤ d` and `d(v1, x) = d(v2, x) = n ≥ d + 5`, the projections of
/// `x` onto `S_{n−1}(v1)` and `S_{n−1}(v2)` together span a simplex.
pub fn check_projection_simplex(x: &FlagComplex, budget: &Budget) -> Result<Verdict> {
    let dm = x.all_pairs();
    let g = x.skeleton();
    let n = x.len();
    let mut v = Verdict::pass("projection-simplex");
    for p in 0..n {
        for a in 0..n {
            let len = dm.raw(a, p);
            if len == INF || len < 5 {
                continue;
            }
            for b in a + 1..n {
                if dm.raw(b, p) != len || len < dm.raw(a, b) + 5 {
                    continue;
                }
                budget.tick()?;
                v.add_stat("triples", 1);
                let proj: Vec<usize> = g
                    .neighbors(p)
                    .iter()
                    .copied()
                    .filter(|&u| dm.raw(a, u) + 1 == len || dm.raw(b, u) + 1 == len)
                    .collect();
                if !g.is_clique(&proj) {
                    v.holds = false;
                    v.certificate = Some(Certificate::Projection {
                        simplex: vec![p],
                        projection: proj,
                    });
                    return Ok(v);
                }
            }
        }
    }
    Ok(v)
}
