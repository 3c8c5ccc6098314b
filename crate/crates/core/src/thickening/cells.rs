//! Simple cell complexes given as intersection-closed families of vertex sets.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::io::Document;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CellKind {
    Cubical,
    Simplicial,
    Generic,
}

/// A finite cell complex: its 1-skeleton and every nonempty cell as a sorted vertex list.
///
/// The family contains all vertices and edges, the faces of every declared cell, and is closed
/// under intersection.
#[derive(Clone, Debug)]
pub struct CellComplex {
    graph: Graph,
    cells: Vec<Vec<usize>>,
    sets: Vec<VertexSet>,
    dims: Vec<usize>,
    maximal: Vec<usize>,
    kind: CellKind,
}

/// The `3^d` faces of a cube, or `None` when `cell` does not induce a hypercube graph.
pub fn cube_faces(g: &Graph, cell: &[usize]) -> Option<Vec<Vec<usize>>> {
    let n = cell.len();
    if n == 0 || !n.is_power_of_two() {
        return None;
    }
    let d = n.trailing_zeros() as usize;
    let inside = g.set_of(cell.iter().copied());
    let local = |v: usize| cell.binary_search(&v).ok();
    let degree_ok = cell
        .iter()
        .all(|&v| g.neighbors(v).iter().filter(|&&w| inside.contains(w)).count() == d);
    if !degree_ok {
        return None;
    }
    let bfs = |s: usize| {
        let mut dist = vec![usize::MAX; n];
        let mut q = VecDeque::from([s]);
        dist[local(s)?] = 0;
        while let Some(v) = q.pop_front() {
            let dv = dist[local(v)?];
            for &w in g.neighbors(v) {
                if let Some(i) = local(w) {
                    if dist[i] == usize::MAX {
                        dist[i] = dv + 1;
                        q.push_back(w);
                    }
                }
            }
        }
        Some(dist)
    };
    let base = cell[0];
    let from_base = bfs(base)?;
    let axes: Vec<usize> = g.neighbors(base).iter().copied().filter(|&w| inside.contains(w)).collect();
    let from_axes: Vec<Vec<usize>> = axes.iter().map(|&a| bfs(a)).collect::<Option<_>>()?;
    let mut coord = vec![0usize; n];
    let mut seen = vec![false; n];
    for i in 0..n {
        if from_base[i] == usize::MAX {
            return None;
        }
        let mut c = 0;
        for (bit, fa) in from_axes.iter().enumerate() {
            if fa[i] < from_base[i] {
                c |= 1 << bit;
            }
        }
        if seen[c] {
            return None;
        }
        seen[c] = true;
        coord[i] = c;
    }
    for (i, &v) in cell.iter().enumerate() {
        for &w in g.neighbors(v) {
            if let Some(j) = local(w) {
                if (coord[i] ^ coord[j]).count_ones() != 1 {
                    return None;
                }
            }
        }
    }
    // faces: each axis fixed to 0, fixed to 1, or free
    let mut faces = Vec::new();
    for pattern in 0..3usize.pow(d as u32) {
        let mut p = pattern;
        let (mut mask, mut value) = (0usize, 0usize);
        for bit in 0..d {
            match p % 3 {
                0 => mask |= 1 << bit,
                1 => {
                    mask |= 1 << bit;
                    value |= 1 << bit;
                }
                _ => {}
            }
            p /= 3;
        }
        let face: Vec<usize> = (0..n).filter(|&i| coord[i] & mask == value).map(|i| cell[i]).collect();
        faces.push(face);
    }
    Some(faces)
}

fn sorted(c: &[usize]) -> Vec<usize> {
    let mut c = c.to_vec();
    c.sort_unstable();
    c.dedup();
    c
}

impl CellComplex {
    /// Cubical complex: each declared cell must induce a hypercube in `graph`.
    pub fn cubical(graph: Graph, declared: &[Vec<usize>]) -> Result<Self> {
        let mut family = BTreeSet::new();
        for c in declared {
            let c = sorted(c);
            let faces = cube_faces(&graph, &c)
                .ok_or_else(|| Error::NonSimple(format!("cell {} is not a cube of the graph", show(&graph, &c))))?;
            family.extend(faces);
        }
        Self::finish(graph, family, CellKind::Cubical, false)
    }

    /// Simplicial complex: each declared cell must be a clique of `graph`.
    pub fn simplicial(graph: Graph, declared: &[Vec<usize>]) -> Result<Self> {
        let mut family = BTreeSet::new();
        for c in declared {
            let c = sorted(c);
            if !graph.is_clique(&c) {
                return Err(Error::NonSimple(format!("cell {} is not a simplex of the graph", show(&graph, &c))));
            }
            if c.len() > 20 {
                return Err(Error::InvalidParams(format!("simplex with {} vertices is too large", c.len())));
            }
            for mask in 1..(1u32 << c.len()) {
                family.insert((0..c.len()).filter(|&i| mask & (1 << i) != 0).map(|i| c[i]).collect());
            }
        }
        Self::finish(graph, family, CellKind::Simplicial, false)
    }

    /// Arbitrary cells; pairwise intersections are added until the family is closed.
    pub fn generic(graph: Graph, declared: &[Vec<usize>]) -> Result<Self> {
        let family = declared.iter().map(|c| sorted(c)).filter(|c| !c.is_empty()).collect();
        Self::finish(graph, family, CellKind::Generic, true)
    }

    /// Cubical if every declared cell is a cube, else simplicial if every cell is a clique,
    /// else generic.
    pub fn from_document(doc: Document) -> Result<Self> {
        let Document { graph, cells, .. } = doc;
        if cells.iter().all(|c| cube_faces(&graph, c).is_some()) {
            Self::cubical(graph, &cells)
        } else if cells.iter().all(|c| graph.is_clique(c)) {
            Self::simplicial(graph, &cells)
        } else {
            Self::generic(graph, &cells)
        }
    }

    fn finish(graph: Graph, mut family: BTreeSet<Vec<usize>>, kind: CellKind, close: bool) -> Result<Self> {
        for v in graph.vertices() {
            family.insert(vec![v]);
        }
        for (u, v) in graph.edges() {
            family.insert(vec![u, v]);
        }
        for c in &family {
            if c.len() > 1 && graph.components(Some(&graph.set_of(c.iter().copied()))).len() != 1 {
                return Err(Error::NonSimple(format!("cell {} is disconnected", show(&graph, c))));
            }
        }
        let mut cells: Vec<Vec<usize>> = family.into_iter().collect();
        let mut known: HashSet<Vec<usize>> = cells.iter().cloned().collect();
        let mut i = 0;
        while i < cells.len() {
            let a = graph.set_of(cells[i].iter().copied());
            let mut fresh = Vec::new();
            for (j, cj) in cells.iter().enumerate().take(i) {
                let common: Vec<usize> = cj.iter().copied().filter(|&v| a.contains(v)).collect();
                if common.is_empty() || known.contains(&common) {
                    continue;
                }
                if !close {
                    return Err(Error::NonSimple(format!(
                        "cells {} and {} meet in {}, which is not a cell",
                        show(&graph, &cells[i]),
                        show(&graph, &cells[j]),
                        show(&graph, &common)
                    )));
                }
                fresh.push(common);
            }
            for c in fresh {
                if known.insert(c.clone()) {
                    cells.push(c);
                }
            }
            i += 1;
        }
        cells.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        let sets: Vec<VertexSet> = cells.iter().map(|c| graph.set_of(c.iter().copied())).collect();
        let dims = match kind {
            CellKind::Cubical => cells.iter().map(|c| c.len().trailing_zeros() as usize).collect(),
            CellKind::Simplicial => cells.iter().map(|c| c.len() - 1).collect(),
            CellKind::Generic => {
                // rank in the face poset; cells are sorted by size so faces come first
                let mut dims = vec![0usize; cells.len()];
                for i in 0..cells.len() {
                    dims[i] = (0..i)
                        .filter(|&j| cells[j].len() < cells[i].len() && sets[j].is_subset(&sets[i]))
                        .map(|j| dims[j] + 1)
                        .max()
                        .unwrap_or(0);
                }
                dims
            }
        };
        let maximal = (0..cells.len())
            .filter(|&i| {
                !(i + 1..cells.len()).any(|j| cells[j].len() > cells[i].len() && sets[i].is_subset(&sets[j]))
            })
            .collect();
        Ok(CellComplex {
            graph,
            cells,
            sets,
            dims,
            maximal,
            kind,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Number of vertices.
    pub fn len(&self) -> usize {
        self.graph.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_empty()
    }

    pub fn kind(&self) -> CellKind {
        self.kind
    }

    /// All nonempty cells, ordered by size.
    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn cell_set(&self, i: usize) -> &VertexSet {
        &self.sets[i]
    }

    pub fn cell_dim(&self, i: usize) -> usize {
        self.dims[i]
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().copied().max().unwrap_or(0)
    }

    /// Indices of the maximal cells.
    pub fn maximal(&self) -> &[usize] {
        &self.maximal
    }

    pub fn maximal_cells(&self) -> Vec<Vec<usize>> {
        self.maximal.iter().map(|&i| self.cells[i].clone()).collect()
    }

    /// Whether some cell contains all of `vs`.
    pub fn in_common_cell(&self, vs: &[usize]) -> bool {
        self.maximal.iter().any(|&i| vs.iter().all(|&v| self.sets[i].contains(v)))
    }

    /// Indices of the cells containing `v`.
    pub fn cells_containing(&self, v: usize) -> Vec<usize> {
        (0..self.cells.len()).filter(|&i| self.sets[i].contains(v)).collect()
    }

    /// Smallest cell containing all of `vs`.
    pub fn carrier(&self, vs: &[usize]) -> Option<usize> {
        (0..self.cells.len()).find(|&i| vs.iter().all(|&v| self.sets[i].contains(v)))
    }

    /// `Σ (−1)^dim` over all cells.
    pub fn euler_characteristic(&self) -> i64 {
        self.dims.iter().map(|&d| if d % 2 == 0 { 1 } else { -1 }).sum()
    }
}

pub(crate) fn show(g: &Graph, c: &[usize]) -> String {
    let labels: Vec<String> = c.iter().map(|&v| g.label(v).to_string()).collect();
    format!("{{{}}}", labels.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn square_faces() {
        let y = corpus::square_grid(1, 1).unwrap();
        assert_eq!(y.kind(), CellKind::Cubical);
        assert_eq!(y.cells().len(), 9);
        assert_eq!(y.maximal().len(), 1);
        assert_eq!(y.euler_characteristic(), 1);
    }

    #[test]
    fn cube_has_27_faces() {
        let y = corpus::cube(3).unwrap();
        assert_eq!(y.cells().len(), 27);
        assert_eq!(y.dim(), 3);
        assert_eq!(y.euler_characteristic(), 1);
    }

    #[test]
    fn non_cubes_are_rejected() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(matches!(CellComplex::cubical(g, &[vec![0, 1, 2, 3]]), Err(Error::NonSimple(_))));
    }

    #[test]
    fn squares_meeting_in_a_non_face_are_not_simple() {
        // two squares sharing a diagonal pair of vertices but no edge
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 2), (2, 5), (5, 0)]).unwrap();
        let err = CellComplex::cubical(g, &[vec![0, 1, 2, 3], vec![0, 4, 2, 5]]).unwrap_err();
        assert!(matches!(err, Error::NonSimple(_)));
    }

    #[test]
    fn generic_cells_close_under_intersection() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let y = CellComplex::generic(g, &[vec![0, 1, 2, 3, 4]]).unwrap();
        assert_eq!(y.kind(), CellKind::Generic);
        assert_eq!(y.dim(), 2);
        assert_eq!(y.euler_characteristic(), 1);
    }

    #[test]
    fn four_cycle_has_zero_euler_characteristic() {
        let g = corpus::cycle(4).skeleton().clone();
        let y = CellComplex::cubical(g, &[]).unwrap();
        assert_eq!(y.cells().len(), 8);
        assert_eq!(y.euler_characteristic(), 0);
    }
}
