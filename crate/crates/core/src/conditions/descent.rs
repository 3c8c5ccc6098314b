//! Simple descent on balls: projections, `SD_n(A)`, `S̃D_n(A)`, weak systolicity and the
//! collapse schedule it yields.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use rayon::prelude::*;

use crate::budget::Budget;
use crate::complex::{FlagComplex, Simplex, Subcomplex, INF};
use crate::enumerate;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::verdict::{Certificate, Verdict};

/// `π_A(σ) = X_σ ∩ B_i(A)` for a simplex `σ ⊆ S_{i+1}(A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projection {
    /// `i`, so that `σ` lies in `S_{i+1}(A)`.
    pub radius: usize,
    pub vertices: Vec<usize>,
    pub is_simplex: bool,
}

impl Projection {
    pub fn is_nonempty(&self) -> bool {
        !self.vertices.is_empty()
    }

    /// The projection as a simplex, or the empty sentinel when it is empty or not a simplex.
    pub fn simplex(&self) -> Simplex {
        if self.is_nonempty() && self.is_simplex {
            Simplex::new(self.vertices.iter().copied())
        } else {
            Simplex::empty()
        }
    }

    pub fn is_good(&self) -> bool {
        self.is_nonempty() && self.is_simplex
    }
}

/// Projection given the distance vector from `A`.
pub(crate) fn project_with(g: &Graph, dist: &[usize], s: &[usize]) -> Result<Projection> {
    let Some(&first) = s.first() else {
        return Err(Error::NotASimplex(Vec::new()));
    };
    let d = dist[first];
    if d == 0 || d == INF || s.iter().any(|&v| dist[v] != d) {
        return Err(Error::MixedSphere(s.to_vec()));
    }
    let vertices: Vec<usize> = g.common_neighbors(s).ones().filter(|&w| dist[w] < d).collect();
    let is_simplex = g.is_clique(&vertices);
    Ok(Projection {
        radius: d - 1,
        vertices,
        is_simplex,
    })
}

/// Projection of `s` onto the ball around `a` one step closer.
pub fn project(x: &FlagComplex, a: &Subcomplex<'_>, s: &Simplex) -> Result<Projection> {
    x.simplex(s.vertices())?;
    if a.is_empty() {
        return Err(Error::EmptySubcomplex);
    }
    let dist = x.distances_from(a.vertex_set().ones());
    project_with(x.skeleton(), &dist, s.vertices())
}

fn sphere_of(g: &Graph, dist: &[usize], r: usize) -> VertexSet {
    g.set_of((0..g.len()).filter(|&v| dist[v] == r))
}

fn max_finite(dist: &[usize]) -> usize {
    dist.iter().copied().filter(|&d| d != INF).max().unwrap_or(0)
}

/// First simplex of `S_{i+1}` (for `1 ≤ i ≤ n`) whose projection is not a nonempty simplex.
fn sdn_failure(g: &Graph, dist: &[usize], n: usize, budget: &Budget, stats: &mut Verdict) -> Result<Option<Certificate>> {
    let top = max_finite(dist);
    for i in 1..=n.min(top.saturating_sub(1)) {
        let sphere = sphere_of(g, dist, i + 1);
        stats.add_stat("radii", 1);
        let mut failure = None;
        let mut count = 0;
        let _ = enumerate::for_each_clique(g, &sphere, budget, |c| {
            count += 1;
            let p = project_with(g, dist, c).expect("clique lies in one sphere");
            if p.is_good() {
                ControlFlow::Continue(())
            } else {
                failure = Some(Certificate::Projection {
                    simplex: c.to_vec(),
                    projection: p.vertices,
                });
                ControlFlow::Break(())
            }
        })?;
        stats.add_stat("simplices", count);
        if failure.is_some() {
            return Ok(failure);
        }
    }
    Ok(None)
}

/// `SD_n(A)`: for `i = 1, …, n` every simplex of `S_{i+1}(A)` projects to a nonempty simplex.
pub fn check_sdn(x: &FlagComplex, a: &Subcomplex<'_>, n: usize, budget: &Budget) -> Result<Verdict> {
    if a.is_empty() {
        return Err(Error::EmptySubcomplex);
    }
    let dist = x.distances_from(a.vertex_set().ones());
    let mut v = Verdict::pass(format!("sd{n}"));
    let failure = sdn_failure(x.skeleton(), &dist, n, budget, &mut v)?;
    v.holds = failure.is_none();
    v.certificate = failure;
    if x.len() <= 2 {
        v.vacuous = true;
    }
    Ok(v)
}

/// First violation of (E) or (V) for `i = 1, …, n`.
fn sdn_tilde_failure(g: &Graph, dist: &[usize], n: usize, stats: &mut Verdict) -> Option<Certificate> {
    let top = max_finite(dist);
    for i in 1..=n.min(top.saturating_sub(1)) {
        stats.add_stat("radii", 1);
        let sphere: Vec<usize> = (0..g.len()).filter(|&v| dist[v] == i + 1).collect();
        // (V): the downward neighbours of a vertex form a simplex
        for &w in &sphere {
            let down: Vec<usize> = g.neighbors(w).iter().copied().filter(|&u| dist[u] <= i).collect();
            if !g.is_clique(&down) {
                return Some(Certificate::Projection {
                    simplex: vec![w],
                    projection: down,
                });
            }
        }
        // (E): every edge of the sphere has a common downward neighbour
        for &w in &sphere {
            for &u in g.neighbors(w) {
                if u > w && dist[u] == i + 1 {
                    let has_down = g.neighbors(w).iter().any(|&z| dist[z] <= i && g.adjacent(z, u));
                    if !has_down {
                        return Some(Certificate::Projection {
                            simplex: vec![w, u],
                            projection: Vec::new(),
                        });
                    }
                }
            }
        }
    }
    None
}

/// `S̃D_n(A)`: edge condition (E) and vertex condition (V) for `i = 1, …, n`.
pub fn check_sdn_tilde(x: &FlagComplex, a: &Subcomplex<'_>, n: usize) -> Result<Verdict> {
    if a.is_empty() {
        return Err(Error::EmptySubcomplex);
    }
    let dist = x.distances_from(a.vertex_set().ones());
    let mut v = Verdict::pass(format!("sd{n}-tilde"));
    let failure = sdn_tilde_failure(x.skeleton(), &dist, n, &mut v);
    v.holds = failure.is_none();
    v.certificate = failure;
    if x.len() <= 2 {
        v.vacuous = true;
    }
    Ok(v)
}

/// Weak systolicity: `S̃D_n(v)` for every vertex, up to its eccentricity.
pub fn is_weakly_systolic(x: &FlagComplex) -> Result<Verdict> {
    if x.len() <= 2 {
        return Ok(Verdict::vacuous("weakly-systolic"));
    }
    if !x.is_connected() {
        return Err(Error::Disconnected);
    }
    let g = x.skeleton();
    let per_vertex: Vec<(Option<Certificate>, u64)> = (0..x.len())
        .into_par_iter()
        .map(|v| {
            let dist = x.distances_from([v]);
            let mut scratch = Verdict::pass("");
            let f = sdn_tilde_failure(g, &dist, max_finite(&dist), &mut scratch);
            (f, scratch.stats.get("radii").copied().unwrap_or(0))
        })
        .collect();
    let mut v = Verdict::pass("weakly-systolic");
    v.add_stat("vertices", x.len() as u64);
    for (f, radii) in per_vertex {
        v.add_stat("radii", radii);
        if f.is_some() && v.certificate.is_none() {
            v.holds = false;
            v.certificate = f;
        }
    }
    Ok(v)
}

/// Weak bridgedness of a graph: weak systolicity of its clique complex, refusing graphs
/// with cliques above `clique_bound`.
pub fn is_weakly_bridged(g: &Graph, clique_bound: usize, budget: &Budget) -> Result<Verdict> {
    let omega = enumerate::clique_number(g, &g.full_set(), budget)?;
    if omega > clique_bound {
        return Err(Error::CliqueBound {
            size: omega,
            bound: clique_bound,
        });
    }
    let x = FlagComplex::new(g.clone());
    let mut v = is_weakly_systolic(&x)?;
    v.condition = "weakly-bridged".into();
    Ok(v)
}

/// One elementary retraction: `σ` is pushed onto `π_v(σ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseStep {
    pub radius: usize,
    pub dim: usize,
    pub simplex: Simplex,
    pub projection: Simplex,
}

/// The retractions `B_{i+1}(v) → B_i(v)`, outermost radius first, each split by dimension
/// from the top down.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapseSchedule {
    pub base: usize,
    pub steps: Vec<CollapseStep>,
}

/// Collapse schedule of `X` onto `v`. Requires `SD_n(v)` for every `n`.
pub fn collapse_schedule(x: &FlagComplex, v: usize, budget: &Budget) -> Result<CollapseSchedule> {
    let g = x.skeleton();
    g.check_vertex(v)?;
    let dist = x.distances_from([v]);
    if dist.contains(&INF) {
        return Err(Error::Disconnected);
    }
    let ecc = max_finite(&dist);
    let mut pre = Verdict::pass(format!("sd{ecc}"));
    if let Some(c) = sdn_failure(g, &dist, ecc, budget, &mut pre)? {
        return Err(Error::precondition(format!("sd{ecc}"), Verdict::fail(format!("sd{ecc}"), c)));
    }
    let mut steps = Vec::new();
    for i in (0..ecc).rev() {
        let sphere = sphere_of(g, &dist, i + 1);
        let layers = enumerate::cliques_by_size(g, &sphere, budget)?;
        for (l, layer) in layers.iter().enumerate().rev() {
            for c in layer {
                let p = project_with(g, &dist, c)?;
                if !p.is_good() {
                    return Err(Error::Invariant(format!("projection of {c:?} is not a simplex")));
                }
                steps.push(CollapseStep {
                    radius: i,
                    dim: l,
                    simplex: Simplex::new(c.iter().copied()),
                    projection: p.simplex(),
                });
            }
        }
    }
    Ok(CollapseSchedule { base: v, steps })
}

/// Replay a schedule on the explicit simplex list of `X`: each step must remove the open star
/// of a face `σ` whose only cofaces lie in the simplex `σ ∪ π(σ)`. Ends at `{v}`.
pub fn replay_schedule(x: &FlagComplex, schedule: &CollapseSchedule, budget: &Budget) -> Result<()> {
    let mut alive: BTreeSet<Vec<usize>> = BTreeSet::new();
    let _ = enumerate::for_each_clique(x.skeleton(), &x.skeleton().full_set(), budget, |c| {
        alive.insert(c.to_vec());
        ControlFlow::Continue(())
    })?;
    for step in &schedule.steps {
        let sigma = &step.simplex;
        let top = sigma.union(&step.projection);
        if step.projection.is_empty() || !alive.contains(top.vertices()) {
            return Err(Error::Invariant(format!(
                "step {:?}: σ ∪ π(σ) is not a simplex of the current complex",
                sigma.vertices()
            )));
        }
        let star: Vec<Vec<usize>> = alive
            .iter()
            .filter(|c| sigma.vertices().iter().all(|v| c.binary_search(v).is_ok()))
            .cloned()
            .collect();
        for c in &star {
            if !c.iter().all(|v| top.contains(*v)) {
                return Err(Error::Invariant(format!(
                    "step {:?}: coface {c:?} escapes σ ∪ π(σ)",
                    sigma.vertices()
                )));
            }
            alive.remove(c);
        }
    }
    let expected: BTreeSet<Vec<usize>> = [vec![schedule.base]].into_iter().collect();
    if alive != expected {
        return Err(Error::Invariant(format!("replay ended at {} simplices, not at the base", alive.len())));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::span;
    use crate::corpus;

    fn vertex<'a>(x: &'a FlagComplex, v: usize) -> Subcomplex<'a> {
        span(x, &[v]).unwrap()
    }

    #[test]
    fn projection_examples() {
        let w = corpus::wheel(5);
        let p = project(&w, &vertex(&w, 0), &Simplex::vertex(3)).unwrap();
        assert_eq!(p.simplex(), Simplex::vertex(0));

        let oct = corpus::octahedron();
        let p = project(&oct, &vertex(&oct, 0), &Simplex::vertex(1)).unwrap();
        assert_eq!(p.vertices, vec![2, 3, 4, 5]);
        assert!(!p.is_simplex);
        assert!(p.simplex().is_empty());

        let err = project(&w, &vertex(&w, 1), &Simplex::new([0, 3])).unwrap_err();
        assert!(matches!(err, Error::MixedSphere(_)));
    }

    #[test]
    fn sdn_examples() {
        let w = corpus::wheel(5);
        assert!(check_sdn(&w, &vertex(&w, 0), 1, &Budget::default()).unwrap().holds);

        let oct = corpus::octahedron();
        let v = check_sdn(&oct, &vertex(&oct, 0), 1, &Budget::default()).unwrap();
        assert!(!v.holds);
        assert_eq!(
            v.certificate,
            Some(Certificate::Projection {
                simplex: vec![1],
                projection: vec![2, 3, 4, 5]
            })
        );

        let c4 = corpus::cycle(4);
        for a in 0..4 {
            assert!(!check_sdn(&c4, &vertex(&c4, a), 1, &Budget::default()).unwrap().holds);
        }
    }

    #[test]
    fn sdn_tilde_examples() {
        let c6 = corpus::cycle(6);
        assert!(check_sdn_tilde(&c6, &vertex(&c6, 0), 1).unwrap().holds);
        // at i = 2 the antipode has two non-adjacent downward neighbours
        assert!(!check_sdn_tilde(&c6, &vertex(&c6, 0), 2).unwrap().holds);

        let oct = corpus::octahedron();
        assert!(!check_sdn_tilde(&oct, &vertex(&oct, 0), 1).unwrap().holds);

        let s = corpus::simplex(3);
        for n in 0..4 {
            assert!(check_sdn_tilde(&s, &vertex(&s, 2), n).unwrap().holds);
        }
    }

    #[test]
    fn weak_systolicity_examples() {
        assert!(is_weakly_systolic(&corpus::wheel(5)).unwrap().holds);
        assert!(!is_weakly_systolic(&corpus::octahedron()).unwrap().holds);
        assert!(!is_weakly_systolic(&corpus::flag_torus(7, 7).unwrap()).unwrap().holds);
        let disc = corpus::hexpatch(3);
        assert!(is_weakly_systolic(&disc).unwrap().holds);
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert!(matches!(is_weakly_systolic(&FlagComplex::new(g)), Err(Error::Disconnected)));
    }

    #[test]
    fn weak_bridgedness_examples() {
        let b = Budget::default();
        assert!(is_weakly_bridged(corpus::hexpatch(2).skeleton(), 8, &b).unwrap().holds);
        assert!(!is_weakly_bridged(corpus::cycle(4).skeleton(), 8, &b).unwrap().holds);
        assert!(is_weakly_bridged(corpus::simplex(5).skeleton(), 8, &b).unwrap().holds);
        assert!(matches!(
            is_weakly_bridged(corpus::simplex(5).skeleton(), 4, &b),
            Err(Error::CliqueBound { size: 6, bound: 4 })
        ));
    }

    #[test]
    fn collapse_schedules() {
        let b = Budget::default();
        let w = corpus::wheel(5);
        let s = collapse_schedule(&w, 0, &b).unwrap();
        assert!(s.steps.iter().all(|st| st.radius == 0));
        assert_eq!(s.steps.len(), 10);
        assert!(s.steps.windows(2).all(|p| p[0].dim >= p[1].dim));
        replay_schedule(&w, &s, &b).unwrap();

        let e = corpus::path(2);
        let s = collapse_schedule(&e, 0, &b).unwrap();
        assert_eq!(s.steps.len(), 1);
        replay_schedule(&e, &s, &b).unwrap();

        let oct = corpus::octahedron();
        assert!(matches!(collapse_schedule(&oct, 0, &b), Err(Error::Precondition { .. })));
    }

    #[test]
    fn corrupted_schedules_are_rejected() {
        let b = Budget::default();
        let w = corpus::wheel(6);
        let mut s = collapse_schedule(&w, 0, &b).unwrap();
        s.steps.reverse();
        assert!(replay_schedule(&w, &s, &b).is_err());
    }
}
