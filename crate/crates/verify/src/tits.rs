//! The Tits representation of a right-angled Coxeter group: `s ↦ σ_s` with
//! `σ_s(e_t) = e_t − 2B(e_s, e_t) e_s`, where `B(e_s, e_s) = 1`, `B(e_s, e_t) = 0` for commuting
//! generators and `−1` otherwise. It is faithful, so integer matrices decide the word problem
//! independently of any rewriting.

use std::collections::HashMap;

use wsc_core::graph::Graph;

pub type Matrix = Vec<i128>;

#[derive(Clone, Debug)]
pub struct TitsRepresentation {
    n: usize,
    generators: Vec<Matrix>,
}

impl TitsRepresentation {
    /// Generators are the vertices of `nerve`; adjacent vertices commute.
    pub fn new(nerve: &Graph) -> Self {
        let n = nerve.len();
        let generators = (0..n)
            .map(|s| {
                let mut m = vec![0i128; n * n];
                for t in 0..n {
                    m[t * n + t] = 1;
                    let b = if s == t {
                        1
                    } else if nerve.adjacent(s, t) {
                        0
                    } else {
                        -1
                    };
                    // column t gains −2B(s,t) in row s
                    m[s * n + t] -= 2 * b;
                }
                m
            })
            .collect();
        TitsRepresentation { n, generators }
    }

    pub fn identity(&self) -> Matrix {
        let mut m = vec![0; self.n * self.n];
        for i in 0..self.n {
            m[i * self.n + i] = 1;
        }
        m
    }

    /// `m · σ_s`.
    pub fn times(&self, m: &Matrix, s: usize) -> Matrix {
        let n = self.n;
        let g = &self.generators[s];
        let mut out = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = m[i * n + k];
                if a != 0 {
                    for j in 0..n {
                        out[i * n + j] += a * g[k * n + j];
                    }
                }
            }
        }
        out
    }

    pub fn of_word(&self, word: &[usize]) -> Matrix {
        word.iter().fold(self.identity(), |m, &s| self.times(&m, s))
    }

    /// Breadth-first ball of the Cayley graph, whole spheres only, with at most `max_elements`
    /// elements. Each element carries a geodesic word; returns the elements and the radius.
    pub fn ball(&self, max_elements: usize) -> (Vec<(Vec<usize>, Matrix)>, usize) {
        let mut seen: HashMap<Matrix, usize> = HashMap::from([(self.identity(), 0)]);
        let mut elements = vec![(Vec::new(), self.identity())];
        let mut layer = vec![0usize];
        let mut radius = 0;
        loop {
            let mut next = Vec::new();
            let mut fresh = Vec::new();
            for &i in &layer {
                for s in 0..self.n {
                    let m = self.times(&elements[i].1, s);
                    if !seen.contains_key(&m) && !fresh.iter().any(|(_, f)| f == &m) {
                        let mut w = elements[i].0.clone();
                        w.push(s);
                        fresh.push((w, m));
                    }
                }
            }
            if fresh.is_empty() || elements.len() + fresh.len() > max_elements {
                return (elements, radius);
            }
            for (w, m) in fresh {
                seen.insert(m.clone(), elements.len());
                next.push(elements.len());
                elements.push((w, m));
            }
            layer = next;
            radius += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generators_are_involutions_and_commute_exactly_when_adjacent() {
        let nerve = Graph::from_edges(3, [(0, 1)]).unwrap();
        let t = TitsRepresentation::new(&nerve);
        for s in 0..3 {
            assert_eq!(t.of_word(&[s, s]), t.identity());
        }
        assert_eq!(t.of_word(&[0, 1]), t.of_word(&[1, 0]));
        assert_ne!(t.of_word(&[0, 2]), t.of_word(&[2, 0]));
    }

    #[test]
    fn free_product_of_two_involutions_is_infinite_dihedral() {
        let t = TitsRepresentation::new(&Graph::from_edges(2, []).unwrap());
        let (ball, r) = t.ball(9);
        assert_eq!(r, 4);
        assert_eq!(ball.len(), 9);
    }

    mod normal_forms {
        use super::*;
        use proptest::prelude::*;
        use wsc_core::corpus;
        use wsc_core::thickening::CoxeterNerve;

        fn nerve(which: usize) -> Graph {
            match which {
                0 => corpus::cycle(5).skeleton().clone(),
                1 => corpus::cycle(4).skeleton().clone(),
                _ => Graph::from_edges(4, [(0, 1), (1, 2)]).unwrap(),
            }
        }

        proptest! {
            #[test]
            fn normal_forms_represent_the_same_element(which in 0usize..3, word in proptest::collection::vec(0usize..4, 0..14)) {
                let g = nerve(which);
                let t = TitsRepresentation::new(&g);
                let nf = CoxeterNerve::new(g).normal_form(&word);
                prop_assert_eq!(t.of_word(&nf), t.of_word(&word));
                prop_assert_eq!(nf.is_empty(), t.of_word(&word) == t.identity());
            }
        }

        #[test]
        fn normal_forms_are_geodesic() {
            for which in 0..3 {
                let g = nerve(which);
                let t = TitsRepresentation::new(&g);
                let nerve = CoxeterNerve::new(g);
                let (ball, _) = t.ball(2000);
                for (w, _) in &ball {
                    // breadth-first words are geodesic
                    assert_eq!(nerve.normal_form(w).len(), w.len());
                }
            }
        }
    }
}
