//! Pass/fail results with re-checkable certificates.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;

use crate::complex::FlagComplex;
use crate::conditions::{Wheel, WheelWithPendant};
use crate::graph::Graph;

/// A witness explaining why a condition fails. Vertex ids refer to the complex the check ran on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Certificate {
    /// A 4-wheel (or any wheel that is forbidden outright).
    Wheel(Wheel),
    /// A wheel with a pendant triangle that no vertex dominates (or that is full).
    PendantWheel(WheelWithPendant),
    /// A simplex in `S_{i+1}(A)` whose projection `X_σ ∩ B_i(A)` is empty or not a simplex.
    Projection {
        simplex: Vec<usize>,
        projection: Vec<usize>,
    },
    /// A chordless cycle found in the link of `simplex` (empty simplex: in the complex itself).
    Cycle { simplex: Vec<usize>, cycle: Vec<usize> },
    /// A clique that should span a simplex / lie in a common cell but does not.
    Clique(Vec<usize>),
    /// A geodesic with both endpoints in the subcomplex that leaves it.
    Geodesic(Vec<usize>),
    /// A length-2 geodesic `(v1, v2, v3)`, optionally inside the link of `at`.
    Path { at: Option<usize>, path: [usize; 3] },
    /// Two geodesics with common endpoints that separate at `index`.
    Bigon {
        first: Vec<usize>,
        second: Vec<usize>,
        index: usize,
        width: usize,
    },
    /// Two adjacent vertices with their (incomparable) second projections.
    Pair {
        first: usize,
        second: usize,
        first_image: Vec<usize>,
        second_image: Vec<usize>,
    },
    /// An edge `zz'` with no common neighbour closer to `σ` realising the descent.
    Edge { edge: [usize; 2], radius: usize },
    /// Cells given as vertex lists.
    Cells(Vec<Vec<usize>>),
    /// A single offending vertex with a description.
    Vertex { vertex: usize, detail: String },
    /// A free-form explanation.
    Note(String),
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::Wheel(_) => "wheel",
            Certificate::PendantWheel(_) => "wheel-with-pendant",
            Certificate::Projection { .. } => "projection",
            Certificate::Cycle { .. } => "cycle",
            Certificate::Clique(_) => "clique",
            Certificate::Geodesic(_) => "geodesic",
            Certificate::Path { .. } => "path",
            Certificate::Bigon { .. } => "bigon",
            Certificate::Pair { .. } => "pair",
            Certificate::Edge { .. } => "edge",
            Certificate::Cells(_) => "cells",
            Certificate::Vertex { .. } => "vertex",
            Certificate::Note(_) => "note",
        }
    }

    /// Structural re-validation against the complex the certificate was produced on.
    ///
    /// Checks only what can be checked from the certificate alone: wheels are wheels, cycles
    /// are chordless, geodesics are paths, and so on.
    pub fn validate(&self, x: &FlagComplex) -> bool {
        let n = x.len();
        let in_range = |vs: &[usize]| vs.iter().all(|&v| v < n);
        match self {
            Certificate::Wheel(w) => w.validate(x),
            Certificate::PendantWheel(w) => w.validate(x),
            Certificate::Projection { simplex, projection } => {
                in_range(simplex)
                    && in_range(projection)
                    && !simplex.is_empty()
                    && x.is_simplex(simplex)
                    && (projection.is_empty() || !x.is_simplex(projection))
            }
            Certificate::Cycle { simplex, cycle } => {
                if !in_range(simplex) || !in_range(cycle) || cycle.len() < 4 || !x.is_simplex(simplex) {
                    return false;
                }
                let k = cycle.len();
                let link = x.skeleton().common_neighbors(simplex);
                cycle.iter().all(|&v| simplex.is_empty() || link.contains(v))
                    && (0..k).all(|i| {
                        (i + 1..k).all(|j| {
                            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                            x.adjacent(cycle[i], cycle[j]) == consecutive
                        })
                    })
            }
            Certificate::Clique(c) => in_range(c) && x.is_simplex(c),
            Certificate::Geodesic(p) => in_range(p) && p.windows(2).all(|w| x.adjacent(w[0], w[1])),
            Certificate::Path { at, path } => {
                in_range(path)
                    && x.adjacent(path[0], path[1])
                    && x.adjacent(path[1], path[2])
                    && path[0] != path[2]
                    && !x.adjacent(path[0], path[2])
                    && at.map_or(true, |a| path.iter().all(|&p| a < n && x.adjacent(a, p)))
            }
            Certificate::Bigon {
                first,
                second,
                index,
                ..
            } => {
                in_range(first)
                    && in_range(second)
                    && first.len() == second.len()
                    && *index < first.len()
                    && first.first() == second.first()
                    && first.last() == second.last()
                    && first.windows(2).all(|w| x.adjacent(w[0], w[1]))
                    && second.windows(2).all(|w| x.adjacent(w[0], w[1]))
            }
            Certificate::Pair { first, second, .. } => *first < n && *second < n && x.adjacent(*first, *second),
            Certificate::Edge { edge, .. } => in_range(edge) && x.adjacent(edge[0], edge[1]),
            Certificate::Cells(cs) => cs.iter().all(|c| in_range(c)),
            Certificate::Vertex { vertex, .. } => *vertex < n,
            Certificate::Note(_) => true,
        }
    }

    /// Key/value rendering with vertex labels from `g`.
    pub fn fields(&self, g: &Graph) -> Vec<(String, String)> {
        let l = |v: usize| g.label(v).to_string();
        let ls = |vs: &[usize]| vs.iter().map(|&v| l(v)).join(" ");
        let mut out = vec![("certificate.kind".to_string(), self.kind().to_string())];
        let mut put = |k: &str, v: String| out.push((format!("certificate.{k}"), v));
        match self {
            Certificate::Wheel(w) => {
                put("hub", l(w.hub));
                put("rim", ls(&w.rim));
            }
            Certificate::PendantWheel(w) => {
                put("hub", l(w.wheel.hub));
                put("rim", ls(&w.wheel.rim));
                put("pendant", l(w.pendant));
            }
            Certificate::Projection { simplex, projection } => {
                put("simplex", ls(simplex));
                put("projection", ls(projection));
            }
            Certificate::Cycle { simplex, cycle } => {
                put("simplex", ls(simplex));
                put("cycle", ls(cycle));
            }
            Certificate::Clique(c) => put("clique", ls(c)),
            Certificate::Geodesic(p) => put("geodesic", ls(p)),
            Certificate::Path { at, path } => {
                if let Some(a) = at {
                    put("at", l(*a));
                }
                put("path", ls(path));
            }
            Certificate::Bigon {
                first,
                second,
                index,
                width,
            } => {
                put("first", ls(first));
                put("second", ls(second));
                put("index", index.to_string());
                put("width", width.to_string());
            }
            Certificate::Pair {
                first,
                second,
                first_image,
                second_image,
            } => {
                put("first", l(*first));
                put("second", l(*second));
                put("first_image", ls(first_image));
                put("second_image", ls(second_image));
            }
            Certificate::Edge { edge, radius } => {
                put("edge", ls(edge));
                put("radius", radius.to_string());
            }
            Certificate::Cells(cs) => {
                for (i, c) in cs.iter().enumerate() {
                    put(&format!("cell{i}"), ls(c));
                }
            }
            Certificate::Vertex { vertex, detail } => {
                put("vertex", l(*vertex));
                put("detail", detail.clone());
            }
            Certificate::Note(s) => put("note", s.clone()),
        }
        out
    }
}

/// Outcome of a named condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub condition: String,
    pub holds: bool,
    /// The input was degenerate (at most two vertices, or nothing to check).
    pub vacuous: bool,
    pub certificate: Option<Certificate>,
    pub stats: BTreeMap<String, u64>,
}

impl Verdict {
    pub fn pass(condition: impl Into<String>) -> Self {
        Verdict {
            condition: condition.into(),
            holds: true,
            vacuous: false,
            certificate: None,
            stats: BTreeMap::new(),
        }
    }

    pub fn fail(condition: impl Into<String>, certificate: Certificate) -> Self {
        Verdict {
            condition: condition.into(),
            holds: false,
            vacuous: false,
            certificate: Some(certificate),
            stats: BTreeMap::new(),
        }
    }

    pub fn vacuous(condition: impl Into<String>) -> Self {
        Verdict {
            vacuous: true,
            ..Verdict::pass(condition)
        }
    }

    pub fn from_option(condition: impl Into<String>, failure: Option<Certificate>) -> Self {
        match failure {
            None => Verdict::pass(condition),
            Some(c) => Verdict::fail(condition, c),
        }
    }

    pub fn with_stat(mut self, key: &str, value: u64) -> Self {
        self.stats.insert(key.to_string(), value);
        self
    }

    pub fn add_stat(&mut self, key: &str, value: u64) {
        *self.stats.entry(key.to_string()).or_insert(0) += value;
    }

    /// Fold another verdict's stats into this one.
    pub fn absorb_stats(&mut self, other: &Verdict) {
        for (k, v) in &other.stats {
            self.add_stat(k, *v);
        }
    }

    /// Key/value rendering in input-label space.
    pub fn fields(&self, g: &Graph) -> Vec<(String, String)> {
        let mut out = vec![
            ("condition".to_string(), self.condition.clone()),
            ("holds".to_string(), self.holds.to_string()),
        ];
        if self.vacuous {
            out.push(("vacuous".to_string(), "true".to_string()));
        }
        if let Some(c) = &self.certificate {
            out.extend(c.fields(g));
        }
        for (k, v) in &self.stats {
            out.push((format!("stats.{k}"), v.to_string()));
        }
        out
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.condition, if self.holds { "holds" } else { "fails" })?;
        if let Some(c) = &self.certificate {
            write!(f, " ({})", c.kind())?;
        }
        Ok(())
    }
}
