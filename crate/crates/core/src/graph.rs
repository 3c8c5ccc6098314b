//! Finite simple graphs with dense vertex ids and byte-string labels.

use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// Set of vertex ids, sized to the ambient vertex count.
pub type VertexSet = FixedBitSet;

/// A vertex label from an input file: an arbitrary non-whitespace byte string.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Label(Vec<u8>);

impl Label {
    pub fn new(bytes: impl Into<Vec<u8>>) -> Self {
        Label(bytes.into())
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&String::from_utf8_lossy(&self.0))
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Self {
        Label(s.as_bytes().to_vec())
    }
}

impl From<String> for Label {
    fn from(s: String) -> Self {
        Label(s.into_bytes())
    }
}

/// Finite simple graph. Vertex ids are `0..n`, adjacency is symmetric and loop-free.
#[derive(Clone)]
pub struct Graph {
    neighbors: Vec<Vec<usize>>,
    rows: Vec<FixedBitSet>,
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.len())
            .field("edges", &self.edge_count())
            .finish()
    }
}

impl Graph {
    /// Graph on `n` vertices labelled `0..n` with the given edges.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut b = GraphBuilder::with_numeric_labels(n);
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    pub fn len(&self) -> usize {
        self.neighbors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.neighbors.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.len()
    }

    /// Sorted neighbour list.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.neighbors[v]
    }

    /// Neighbourhood of `v` as a bit set (open neighbourhood).
    #[inline]
    pub fn row(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    /// Closed neighbourhood `N[v]`.
    pub fn closed_row(&self, v: usize) -> FixedBitSet {
        let mut r = self.rows[v].clone();
        r.insert(v);
        r
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors[v].len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.neighbors
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    pub fn edge_count(&self) -> usize {
        self.neighbors.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn label(&self, v: usize) -> &Label {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn id_of(&self, label: &Label) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownVertex(label.to_string()))
    }

    pub fn id_of_str(&self, label: &str) -> Result<usize> {
        self.id_of(&Label::from(label))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.len() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(v))
        }
    }

    pub fn empty_set(&self) -> VertexSet {
        FixedBitSet::with_capacity(self.len())
    }

    pub fn full_set(&self) -> VertexSet {
        let mut s = self.empty_set();
        s.insert_range(..);
        s
    }

    pub fn set_of(&self, vs: impl IntoIterator<Item = usize>) -> VertexSet {
        let mut s = self.empty_set();
        for v in vs {
            s.insert(v);
        }
        s
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&w| u != w && self.adjacent(u, w)))
    }

    /// Vertices adjacent to every vertex of `vs` (excluding `vs` itself).
    pub fn common_neighbors(&self, vs: &[usize]) -> VertexSet {
        let mut s = self.full_set();
        for &v in vs {
            s.intersect_with(&self.rows[v]);
        }
        for &v in vs {
            s.set(v, false);
        }
        s
    }

    /// Subgraph induced on `vs`. Returns the graph and the map from new ids to old ids.
    pub fn induced(&self, vs: &VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = vs.ones().collect();
        let mut new_id = vec![usize::MAX; self.len()];
        for (i, &v) in old.iter().enumerate() {
            new_id[v] = i;
        }
        let mut b = GraphBuilder::new();
        for &v in &old {
            b.add_vertex(self.labels[v].clone()).expect("labels are unique");
        }
        for (i, &v) in old.iter().enumerate() {
            for &w in &self.neighbors[v] {
                let j = new_id[w];
                if j != usize::MAX && i < j {
                    b.add_edge(i, j).expect("ids in range");
                }
            }
        }
        (b.build(), old)
    }

    /// Connected components inside `within` (all vertices when `None`).
    pub fn components(&self, within: Option<&VertexSet>) -> Vec<Vec<usize>> {
        let inside = |v: usize| within.map_or(true, |s| s.contains(v));
        let mut seen = self.empty_set();
        let mut out = Vec::new();
        for s in self.vertices().filter(|&v| inside(v)) {
            if seen.contains(s) {
                continue;
            }
            seen.insert(s);
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.neighbors[v] {
                    if inside(w) && !seen.contains(w) {
                        seen.insert(w);
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components(None).len() <= 1
    }

    /// Same graph with every vertex label replaced.
    pub fn relabeled(&self, labels: Vec<Label>) -> Result<Graph> {
        if labels.len() != self.len() {
            return Err(Error::InvalidParams("label count mismatch".into()));
        }
        let mut b = GraphBuilder::new();
        for l in labels {
            b.add_vertex(l)?;
        }
        for (u, v) in self.edges() {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }
}

/// Incremental construction of a [`Graph`].
#[derive(Default)]
pub struct GraphBuilder {
    neighbors: Vec<Vec<usize>>,
    labels: Vec<Label>,
    index: HashMap<Label, usize>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_numeric_labels(n: usize) -> Self {
        let mut b = Self::new();
        for i in 0..n {
            b.add_vertex(Label::from(i.to_string())).expect("distinct");
        }
        b
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn add_vertex(&mut self, label: impl Into<Label>) -> Result<usize> {
        let label = label.into();
        if self.index.contains_key(&label) {
            return Err(Error::InvalidParams(format!("duplicate vertex label `{label}`")));
        }
        let id = self.labels.len();
        self.index.insert(label.clone(), id);
        self.labels.push(label);
        self.neighbors.push(Vec::new());
        Ok(id)
    }

    /// Id of `label`, declaring it if new.
    pub fn vertex(&mut self, label: impl Into<Label>) -> usize {
        let label = label.into();
        match self.index.get(&label) {
            Some(&id) => id,
            None => self.add_vertex(label).expect("checked absent"),
        }
    }

    pub fn id_of(&self, label: &Label) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.labels.len();
        if u >= n {
            return Err(Error::VertexOutOfRange(u));
        }
        if v >= n {
            return Err(Error::VertexOutOfRange(v));
        }
        if u == v {
            return Err(Error::InvalidParams(format!("loop at vertex `{}`", self.labels[u])));
        }
        self.neighbors[u].push(v);
        self.neighbors[v].push(u);
        Ok(())
    }

    pub fn build(self) -> Graph {
        let n = self.labels.len();
        let mut neighbors = self.neighbors;
        let mut rows = Vec::with_capacity(n);
        for ns in neighbors.iter_mut() {
            ns.sort_unstable();
            ns.dedup();
            let mut row = FixedBitSet::with_capacity(n);
            for &w in ns.iter() {
                row.insert(w);
            }
            rows.push(row);
        }
        Graph {
            neighbors,
            rows,
            labels: self.labels,
            index: self.index,
        }
    }
}
