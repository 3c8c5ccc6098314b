//! Flag simplicial complexes stored as their 1-skeleta, with the metric primitives
//! (distances, balls, spheres, links, spans) that the rest of the crate is built on.
//!
//! A vertex set spans a simplex exactly when it is a clique of the skeleton, so simplices are
//! never materialised globally.

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;

use crate::budget::Budget;
use crate::enumerate;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Marker for "unreachable" in distance vectors.
pub const INF: usize = usize::MAX;

/// A finite flag simplicial complex: the clique complex of its skeleton.
#[derive(Clone)]
pub struct FlagComplex {
    skeleton: Graph,
    dim_cache: OnceLock<usize>,
}

impl fmt::Debug for FlagComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FlagComplex")
            .field("vertices", &self.len())
            .field("edges", &self.skeleton.edge_count())
            .finish()
    }
}

impl From<Graph> for FlagComplex {
    fn from(g: Graph) -> Self {
        FlagComplex::new(g)
    }
}

impl FlagComplex {
    pub fn new(skeleton: Graph) -> Self {
        FlagComplex {
            skeleton,
            dim_cache: OnceLock::new(),
        }
    }

    pub fn skeleton(&self) -> &Graph {
        &self.skeleton
    }

    pub fn len(&self) -> usize {
        self.skeleton.len()
    }

    pub fn is_empty(&self) -> bool {
        self.skeleton.is_empty()
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.skeleton.adjacent(u, v)
    }

    /// Dimension: maximum clique size minus one (0 for the empty complex).
    pub fn dim(&self) -> usize {
        *self.dim_cache.get_or_init(|| {
            enumerate::clique_number(&self.skeleton, &self.skeleton.full_set(), &Budget::unlimited())
                .expect("unlimited budget")
                .saturating_sub(1)
        })
    }

    /// Validate `vs` as a simplex of this complex.
    pub fn simplex(&self, vs: &[usize]) -> Result<Simplex> {
        for &v in vs {
            self.skeleton.check_vertex(v)?;
        }
        let s = Simplex::new(vs.iter().copied());
        if s.is_empty() || !self.skeleton.is_clique(s.vertices()) {
            return Err(Error::NotASimplex(s.0));
        }
        Ok(s)
    }

    pub fn is_simplex(&self, vs: &[usize]) -> bool {
        self.skeleton.is_clique(vs)
    }

    /// Breadth-first distances from a set of sources (`INF` for unreachable vertices).
    pub fn distances_from(&self, sources: impl IntoIterator<Item = usize>) -> Vec<usize> {
        let mut dist = vec![INF; self.len()];
        let mut queue = VecDeque::new();
        for s in sources {
            if dist[s] != 0 {
                dist[s] = 0;
                queue.push_back(s);
            }
        }
        while let Some(v) = queue.pop_front() {
            let d = dist[v] + 1;
            for &w in self.skeleton.neighbors(v) {
                if dist[w] == INF {
                    dist[w] = d;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Largest finite distance from `v`.
    pub fn eccentricity(&self, v: usize) -> usize {
        self.distances_from([v]).into_iter().filter(|&d| d != INF).max().unwrap_or(0)
    }

    /// Diameter, or `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        if self.is_empty() {
            return Some(0);
        }
        let m = self.all_pairs();
        let mut best = 0;
        for u in 0..self.len() {
            for v in 0..self.len() {
                let d = m.get(u, v)?;
                best = best.max(d);
            }
        }
        Some(best)
    }

    pub fn is_connected(&self) -> bool {
        self.skeleton.is_connected()
    }

    /// All-pairs distance table.
    pub fn all_pairs(&self) -> DistanceMatrix {
        let n = self.len();
        let rows: Vec<Vec<usize>> = (0..n).into_par_iter().map(|v| self.distances_from([v])).collect();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            data.extend(r.into_iter().map(|d| if d == INF { u32::MAX } else { d as u32 }));
        }
        DistanceMatrix { n, data }
    }

    /// Vertex set of the ball of radius `i` around `sources`.
    pub fn ball_set(&self, sources: &VertexSet, i: usize) -> VertexSet {
        let dist = self.distances_from(sources.ones());
        self.skeleton.set_of((0..self.len()).filter(|&v| dist[v] <= i))
    }

    /// Vertex set of the sphere of radius `i` around `sources`.
    pub fn sphere_set(&self, sources: &VertexSet, i: usize) -> VertexSet {
        let dist = self.distances_from(sources.ones());
        self.skeleton.set_of((0..self.len()).filter(|&v| dist[v] == i))
    }

    /// Vertices of the link of a simplex: common neighbours of all its vertices.
    pub fn link_set(&self, s: &Simplex) -> VertexSet {
        self.skeleton.common_neighbors(s.vertices())
    }

    /// The full subcomplex on `vs` as a standalone complex, with the map back to ambient ids.
    pub fn induced(&self, vs: &VertexSet) -> (FlagComplex, Vec<usize>) {
        let (g, map) = self.skeleton.induced(vs);
        (FlagComplex::new(g), map)
    }

    /// Every simplex whose vertices all lie in `within`, grouped by dimension.
    pub fn simplices_in(&self, within: &VertexSet, budget: &Budget) -> Result<Vec<Vec<Simplex>>> {
        Ok(enumerate::cliques_by_size(&self.skeleton, within, budget)?
            .into_iter()
            .map(|layer| layer.into_iter().map(Simplex).collect())
            .collect())
    }

    /// Maximal simplices (maximal cliques).
    pub fn maximal_simplices(&self, budget: &Budget) -> Result<Vec<Simplex>> {
        Ok(enumerate::maximal_cliques(&self.skeleton, &self.skeleton.full_set(), budget)?
            .into_iter()
            .map(Simplex)
            .collect())
    }

    /// Number of simplices in each dimension.
    pub fn f_vector(&self, budget: &Budget) -> Result<Vec<usize>> {
        let mut f: Vec<usize> = Vec::new();
        let _ = enumerate::for_each_clique(&self.skeleton, &self.skeleton.full_set(), budget, |c| {
            if f.len() < c.len() {
                f.resize(c.len(), 0);
            }
            f[c.len() - 1] += 1;
            std::ops::ControlFlow::Continue(())
        })?;
        Ok(f)
    }
}

/// Dense all-pairs distances.
#[derive(Clone, Debug)]
pub struct DistanceMatrix {
    n: usize,
    data: Vec<u32>,
}

impl DistanceMatrix {
    /// Distance, `None` if the vertices lie in different components.
    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Option<usize> {
        let d = self.data[u * self.n + v];
        (d != u32::MAX).then_some(d as usize)
    }

    /// Distance with unreachable pairs mapped to `INF`.
    #[inline]
    pub fn raw(&self, u: usize, v: usize) -> usize {
        self.get(u, v).unwrap_or(INF)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }
}

/// A simplex as a strictly increasing vertex list. The empty simplex is used only as a
/// failure marker.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    pub fn new(vs: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = vs.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Simplex(v)
    }

    pub fn empty() -> Self {
        Simplex(Vec::new())
    }

    pub fn vertex(v: usize) -> Self {
        Simplex(vec![v])
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension (`None` for the empty marker).
    pub fn dim(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_face_of(&self, other: &Simplex) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        Simplex::new(self.0.iter().chain(other.0.iter()).copied())
    }
}

impl From<Vec<usize>> for Simplex {
    fn from(v: Vec<usize>) -> Self {
        Simplex::new(v)
    }
}

/// A subcomplex of a flag complex, given by a vertex set and optionally an explicit list of
/// simplices. Vertex-set handles are always full (they denote the span).
#[derive(Clone, Debug)]
pub struct Subcomplex<'a> {
    ambient: &'a FlagComplex,
    vertices: VertexSet,
    faces: Option<Vec<Simplex>>,
    full: bool,
}

impl<'a> Subcomplex<'a> {
    /// The span of a vertex set.
    pub fn spanned(ambient: &'a FlagComplex, vertices: VertexSet) -> Self {
        Subcomplex {
            ambient,
            vertices,
            faces: None,
            full: true,
        }
    }

    /// A subcomplex given by its simplices (closed downward implicitly). It is full iff every
    /// simplex of the ambient complex on its vertices is a face of a listed simplex.
    pub fn from_simplices(ambient: &'a FlagComplex, simplices: Vec<Simplex>) -> Result<Self> {
        let mut vertices = ambient.skeleton().empty_set();
        for s in &simplices {
            ambient.simplex(s.vertices())?;
            for &v in s.vertices() {
                vertices.insert(v);
            }
        }
        let full = enumerate::maximal_cliques(ambient.skeleton(), &vertices, &Budget::unlimited())?
            .into_iter()
            .all(|c| {
                let c = Simplex(c);
                simplices.iter().any(|s| c.is_face_of(s))
            });
        Ok(Subcomplex {
            ambient,
            vertices,
            faces: Some(simplices),
            full,
        })
    }

    pub fn ambient(&self) -> &'a FlagComplex {
        self.ambient
    }

    pub fn vertex_set(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn vertices(&self) -> Vec<usize> {
        self.vertices.ones().collect()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(v)
    }

    pub fn len(&self) -> usize {
        self.vertices.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_clear()
    }

    pub fn is_full(&self) -> bool {
        self.full
    }

    /// Explicitly listed simplices, if this handle was built from a list.
    pub fn listed_simplices(&self) -> Option<&[Simplex]> {
        self.faces.as_deref()
    }

    pub fn is_connected(&self) -> bool {
        self.ambient.skeleton().components(Some(&self.vertices)).len() <= 1
    }

    /// The subcomplex as a standalone flag complex (its span).
    pub fn to_complex(&self) -> (FlagComplex, Vec<usize>) {
        self.ambient.induced(&self.vertices)
    }
}

/// An ordered cycle `v0, …, v_{k-1}` with `k ≥ 4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleWitness {
    pub cycle: Vec<usize>,
    pub chordless: bool,
}

impl CycleWitness {
    /// Re-check the witness against a complex.
    pub fn validate(&self, x: &FlagComplex) -> bool {
        let k = self.cycle.len();
        if k < 4 || self.cycle.iter().any(|&v| v >= x.len()) {
            return false;
        }
        let consecutive = (0..k).all(|i| x.adjacent(self.cycle[i], self.cycle[(i + 1) % k]));
        let chordless = (0..k).all(|i| {
            (i + 2..k).all(|j| (i == 0 && j == k - 1) || !x.adjacent(self.cycle[i], self.cycle[j]))
        });
        consecutive && (!self.chordless || chordless)
    }
}

/// The span `⟨vs⟩`: the full subcomplex on `vs`.
pub fn span<'a>(ambient: &'a FlagComplex, vs: &[usize]) -> Result<Subcomplex<'a>> {
    for &v in vs {
        ambient.skeleton().check_vertex(v)?;
    }
    Ok(Subcomplex::spanned(ambient, ambient.skeleton().set_of(vs.iter().copied())))
}

/// The link of a simplex as a full subcomplex.
pub fn link<'a>(x: &'a FlagComplex, s: &Simplex) -> Result<Subcomplex<'a>> {
    x.simplex(s.vertices())?;
    Ok(Subcomplex::spanned(x, x.link_set(s)))
}

/// Combinatorial distance; `None` stands for infinity.
pub fn distance(x: &FlagComplex, u: usize, v: usize) -> Option<usize> {
    let d = x.distances_from([u])[v];
    (d != INF).then_some(d)
}

/// `B_i(A, X)`.
pub fn ball<'a>(x: &'a FlagComplex, a: &Subcomplex<'_>, i: usize) -> Result<Subcomplex<'a>> {
    if a.is_empty() {
        return Err(Error::EmptySubcomplex);
    }
    Ok(Subcomplex::spanned(x, x.ball_set(a.vertex_set(), i)))
}

/// `S_i(A, X)`.
pub fn sphere<'a>(x: &'a FlagComplex, a: &Subcomplex<'_>, i: usize) -> Result<Subcomplex<'a>> {
    if a.is_empty() {
        return Err(Error::EmptySubcomplex);
    }
    Ok(Subcomplex::spanned(x, x.sphere_set(a.vertex_set(), i)))
}

/// Some induced cycle of length in `4..=max_len`, found by exhaustive search.
pub fn find_chordless_cycle(x: &FlagComplex, max_len: usize, budget: &Budget) -> Result<Option<CycleWitness>> {
    let g = x.skeleton();
    Ok(enumerate::first_induced_cycle(g, &g.full_set(), 4, max_len, budget)?
        .map(|cycle| CycleWitness { cycle, chordless: true }))
}

/// Whether the declared subcomplex equals the induced one.
pub fn is_full(y: &Subcomplex<'_>) -> bool {
    y.is_full()
}
