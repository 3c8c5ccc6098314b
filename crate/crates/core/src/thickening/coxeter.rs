//! Right-angled Coxeter groups: nerves and normal forms.

use std::ops::ControlFlow;

use crate::budget::Budget;
use crate::complex::FlagComplex;
use crate::enumerate;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::Document;
use crate::verdict::{Certificate, Verdict};

/// Nerve of a right-angled Coxeter system: generators are vertices, adjacent generators
/// commute, all other pairs generate an infinite dihedral group.
#[derive(Clone, Debug)]
pub struct CoxeterNerve {
    graph: Graph,
}

impl CoxeterNerve {
    pub fn new(graph: Graph) -> Self {
        CoxeterNerve { graph }
    }

    /// From a parsed file. Declared simplices, if any, must cover every clique.
    pub fn from_document(doc: Document) -> Result<Self> {
        let nerve = CoxeterNerve::new(doc.graph);
        if !doc.cells.is_empty() {
            let v = check_declared_flag(&nerve, &doc.cells, &Budget::default())?;
            if let Some(Certificate::Clique(c)) = v.certificate {
                return Err(Error::NerveNotFlag(c));
            }
        }
        Ok(nerve)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn rank(&self) -> usize {
        self.graph.len()
    }

    pub fn commute(&self, s: usize, t: usize) -> bool {
        s == t || self.graph.adjacent(s, t)
    }

    /// `w · s` for a reduced word `w`, reduced. The product is shorter exactly when some
    /// occurrence of `s` in `w` commutes with every later letter; that occurrence cancels.
    pub fn multiply(&self, w: &[usize], s: usize) -> Vec<usize> {
        let mut out = w.to_vec();
        for p in (0..w.len()).rev() {
            if w[p] == s {
                out.remove(p);
                return out;
            }
            if !self.commute(w[p], s) {
                break;
            }
        }
        out.push(s);
        out
    }

    /// Reduce an arbitrary word.
    pub fn reduce(&self, word: &[usize]) -> Vec<usize> {
        word.iter().fold(Vec::new(), |w, &s| self.multiply(&w, s))
    }

    /// Lexicographically least reduced word representing `word`: repeatedly take the smallest
    /// letter that can be moved to the front.
    pub fn normal_form(&self, word: &[usize]) -> Vec<usize> {
        let mut rest = self.reduce(word);
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let (pos, _) = rest
                .iter()
                .enumerate()
                .filter(|&(p, &s)| rest[..p].iter().all(|&t| t != s && self.commute(t, s)))
                .min_by_key(|&(_, &s)| s)
                .expect("the first letter is always movable");
            out.push(rest.remove(pos));
        }
        out
    }

    /// Label of a word: generator labels joined by `.`, the identity is `e`.
    pub fn word_label(&self, w: &[usize]) -> String {
        if w.is_empty() {
            return "e".into();
        }
        w.iter().map(|&s| self.graph.label(s).to_string()).collect::<Vec<_>>().join(".")
    }
}

fn check_declared_flag(nerve: &CoxeterNerve, declared: &[Vec<usize>], budget: &Budget) -> Result<Verdict> {
    let x = FlagComplex::new(nerve.graph.clone());
    crate::conditions::check_flag(&x, declared, budget)
}

/// Moussong's criterion: the Davis complex is hyperbolic iff the nerve is 5-large, i.e. flag
/// with no induced 4-cycle. `declared` lists the nerve's simplices when it is not meant to be
/// the clique complex of its graph.
pub fn moussong_check(nerve: &CoxeterNerve, declared: Option<&[Vec<usize>]>, budget: &Budget) -> Result<Verdict> {
    if let Some(cells) = declared {
        let v = check_declared_flag(nerve, cells, budget)?;
        if let Some(Certificate::Clique(c)) = v.certificate {
            return Err(Error::NerveNotFlag(c));
        }
    }
    let g = &nerve.graph;
    let mut found = None;
    let _ = enumerate::for_each_induced_cycle(g, &g.full_set(), 4, 4, budget, |c| {
        found = Some(c.to_vec());
        ControlFlow::Break(())
    })?;
    Ok(Verdict::from_option(
        "moussong",
        found.map(|cycle| Certificate::Cycle {
            simplex: Vec::new(),
            cycle,
        }),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    fn pentagon() -> CoxeterNerve {
        CoxeterNerve::new(corpus::cycle(5).skeleton().clone())
    }

    #[test]
    fn squares_cancel() {
        let n = pentagon();
        assert_eq!(n.reduce(&[0, 0]), Vec::<usize>::new());
        // 0 and 1 commute, so 0 1 0 = 1
        assert_eq!(n.reduce(&[0, 1, 0]), vec![1]);
        // 0 and 2 do not
        assert_eq!(n.reduce(&[0, 2, 0]), vec![0, 2, 0]);
    }

    #[test]
    fn normal_form_is_lex_least() {
        let n = pentagon();
        assert_eq!(n.normal_form(&[1, 0]), vec![0, 1]);
        assert_eq!(n.normal_form(&[2, 1, 0]), vec![1, 2, 0]);
        assert_eq!(n.normal_form(&[3, 2, 0]), vec![2, 3, 0]);
        assert_eq!(n.normal_form(&[1, 0]), n.normal_form(&[0, 1]));
    }

    #[test]
    fn moussong_on_cycles() {
        let b = Budget::default();
        assert!(moussong_check(&pentagon(), None, &b).unwrap().holds);
        let square = CoxeterNerve::new(corpus::cycle(4).skeleton().clone());
        assert!(!moussong_check(&square, None, &b).unwrap().holds);
        // a chord 0-2 in the pentagon leaves the induced 4-cycle 0 2 3 4
        let chord = CoxeterNerve::new(
            crate::graph::Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap(),
        );
        let v = moussong_check(&chord, None, &b).unwrap();
        assert!(!v.holds);
        assert!(v.certificate.unwrap().validate(&FlagComplex::new(chord.graph().clone())));
    }

    #[test]
    fn hollow_declared_nerve_is_rejected() {
        let tri = CoxeterNerve::new(corpus::cycle(3).skeleton().clone());
        let edges = [vec![0, 1], vec![1, 2], vec![0, 2]];
        assert!(matches!(
            moussong_check(&tri, Some(&edges), &Budget::default()),
            Err(Error::NerveNotFlag(_))
        ));
    }
}
