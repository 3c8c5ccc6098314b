//! Balls in the Davis complex of a right-angled Coxeter group.

use std::collections::{HashMap, HashSet};

use crate::budget::Budget;
use crate::complex::FlagComplex;
use crate::enumerate;
use crate::error::Result;
use crate::graph::{GraphBuilder, VertexSet};

use super::cells::CellComplex;
use super::coxeter::CoxeterNerve;
use super::thicken;

/// The radius-`R` word ball of `W` with its cubulation: vertices are normal forms of length
/// `≤ R`, `w ~ ws` for generators `s`, and the coset `wW_T` of every clique `T` of the nerve is
/// a cube whenever all of its vertices lie in the ball.
#[derive(Clone, Debug)]
pub struct DavisComplex {
    pub complex: CellComplex,
    pub words: Vec<Vec<usize>>,
    pub radius: usize,
    /// Size of the largest clique of the nerve (the dimension of the complex).
    pub max_spherical: usize,
}

pub fn davis_complex(nerve: &CoxeterNerve, radius: usize, budget: &Budget) -> Result<DavisComplex> {
    let mut words: Vec<Vec<usize>> = vec![Vec::new()];
    let mut index: HashMap<Vec<usize>, usize> = HashMap::from([(Vec::new(), 0)]);
    let mut edges = Vec::new();
    let mut i = 0;
    while i < words.len() {
        budget.tick()?;
        let w = words[i].clone();
        for s in 0..nerve.rank() {
            let ws = nerve.normal_form(&nerve.multiply(&w, s));
            if ws.len() > radius {
                continue;
            }
            let j = match index.get(&ws) {
                Some(&j) => j,
                None => {
                    let j = words.len();
                    index.insert(ws.clone(), j);
                    words.push(ws);
                    j
                }
            };
            if i < j {
                edges.push((i, j));
            }
        }
        i += 1;
    }
    let mut b = GraphBuilder::new();
    for w in &words {
        b.add_vertex(nerve.word_label(w))?;
    }
    for (u, v) in edges {
        b.add_edge(u, v)?;
    }
    let graph = b.build();

    let cliques = enumerate::cliques_by_size(nerve.graph(), &nerve.graph().full_set(), budget)?;
    let max_spherical = cliques.len();
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let mut cubes = Vec::new();
    for w in &words {
        for t in cliques.iter().skip(1).flatten() {
            budget.tick()?;
            let mut cube = Vec::with_capacity(1 << t.len());
            for mask in 0..1usize << t.len() {
                let mut u = w.clone();
                for (bit, &s) in t.iter().enumerate() {
                    if mask >> bit & 1 == 1 {
                        u = nerve.multiply(&u, s);
                    }
                }
                match index.get(&nerve.normal_form(&u)) {
                    Some(&id) => cube.push(id),
                    None => break,
                }
            }
            if cube.len() == 1 << t.len() {
                cube.sort_unstable();
                if seen.insert(cube.clone()) {
                    cubes.push(cube);
                }
            }
        }
    }
    let complex = CellComplex::cubical(graph, &cubes)?;
    Ok(DavisComplex {
        complex,
        words,
        radius,
        max_spherical,
    })
}

impl DavisComplex {
    /// Vertices whose whole star is present: word length at most `R − d`, `d` the dimension.
    pub fn interior(&self) -> VertexSet {
        let r = self.radius.saturating_sub(self.max_spherical);
        self.complex
            .graph()
            .set_of(self.words.iter().enumerate().filter(|(_, w)| w.len() <= r).map(|(i, _)| i))
    }

    /// The thickening restricted to the interior, as a full subcomplex.
    pub fn thickened_interior(&self, budget: &Budget) -> Result<FlagComplex> {
        let th = thicken(&self.complex, budget)?;
        Ok(th.complex.induced(&self.interior()).0)
    }
}
