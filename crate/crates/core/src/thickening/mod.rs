//! Cell complexes, thickenings, the no-Δ property and Davis complexes.

mod cells;
mod coxeter;
mod davis;

use itertools::Itertools;

use crate::budget::Budget;
use crate::complex::FlagComplex;
use crate::enumerate;
use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};
use crate::iso;
use crate::verdict::{Certificate, Verdict};

pub use cells::{cube_faces, CellComplex, CellKind};
pub use coxeter::{moussong_check, CoxeterNerve};
pub use davis::{davis_complex, DavisComplex};

/// The thickening `Th(Y)` as a flag complex, with the verdict on whether every clique of its
/// graph really lies in a common cell (i.e. whether `Th(Y)` itself is flag).
#[derive(Clone, Debug)]
pub struct Thickening {
    pub complex: FlagComplex,
    pub flag: Verdict,
}

/// `u ~ v` iff some cell contains both.
pub fn thicken(y: &CellComplex, budget: &Budget) -> Result<Thickening> {
    let g = y.graph();
    let mut b = GraphBuilder::new();
    for v in g.vertices() {
        b.add_vertex(g.label(v).clone())?;
    }
    for &c in y.maximal() {
        let cell = &y.cells()[c];
        budget.spend((cell.len() * cell.len()) as u64)?;
        for (i, &u) in cell.iter().enumerate() {
            for &v in &cell[i + 1..] {
                b.add_edge(u, v)?;
            }
        }
    }
    let complex = FlagComplex::new(b.build());
    let th = complex.skeleton();
    let mut flag = Verdict::pass("thickening-flag");
    for c in enumerate::maximal_cliques(th, &th.full_set(), budget)? {
        flag.add_stat("maximal_cliques", 1);
        if !y.in_common_cell(&c) {
            flag.holds = false;
            flag.certificate = Some(Certificate::Clique(c));
            break;
        }
    }
    Ok(Thickening { complex, flag })
}

fn delta_among(y: &CellComplex, cells: &[usize], name: &str, budget: &Budget) -> Result<Verdict> {
    let mut v = Verdict::pass(name);
    for (a, &i) in cells.iter().enumerate() {
        for (b, &j) in cells.iter().enumerate().skip(a + 1) {
            let mut ij = y.cell_set(i).clone();
            ij.intersect_with(y.cell_set(j));
            if ij.is_clear() {
                continue;
            }
            for &k in &cells[b + 1..] {
                budget.tick()?;
                v.add_stat("triples", 1);
                let ck = y.cell_set(k);
                if y.cell_set(i).is_disjoint(ck) || y.cell_set(j).is_disjoint(ck) || !ij.is_disjoint(ck) {
                    continue;
                }
                v.holds = false;
                v.certificate = Some(Certificate::Cells(vec![
                    y.cells()[i].clone(),
                    y.cells()[j].clone(),
                    y.cells()[k].clone(),
                ]));
                return Ok(v);
            }
        }
    }
    Ok(v)
}

/// No-Δ: any three pairwise intersecting cells have a common vertex.
///
/// For cubical complexes the triples range over maximal cells only. Faces of a single cube
/// already satisfy the Helly property, and [`check_no_delta_all_cells`] cross-checks the
/// restriction. Other kinds are checked over the whole family.
pub fn check_no_delta(y: &CellComplex, budget: &Budget) -> Result<Verdict> {
    if y.kind() == CellKind::Cubical {
        delta_among(y, y.maximal(), "no-delta", budget)
    } else {
        check_no_delta_all_cells(y, budget)
    }
}

/// No-Δ over the whole cell family (oracle).
pub fn check_no_delta_all_cells(y: &CellComplex, budget: &Budget) -> Result<Verdict> {
    let all: Vec<usize> = (0..y.cells().len()).collect();
    delta_among(y, &all, "no-delta", budget)
}

/// The link of `v` in a cell complex: its vertices are the neighbours of `v`, its faces are
/// the sets of neighbours of `v` inside each cell containing `v`.
#[derive(Clone, Debug)]
pub struct CellLink {
    pub vertex: usize,
    /// Link vertex `i` is the neighbour `neighbors[i]` of `vertex` in `Y`.
    pub neighbors: Vec<usize>,
    /// Graph on link vertices: adjacent iff they lie in a common face.
    pub graph: Graph,
    /// Maximal faces, in link ids.
    pub faces: Vec<Vec<usize>>,
}

pub fn cell_link(y: &CellComplex, v: usize) -> Result<CellLink> {
    let g = y.graph();
    g.check_vertex(v)?;
    let neighbors = g.neighbors(v).to_vec();
    let local = |u: usize| neighbors.binary_search(&u).ok();
    let mut faces: Vec<Vec<usize>> = y
        .cells_containing(v)
        .into_iter()
        .map(|c| y.cells()[c].iter().filter_map(|&u| local(u)).collect::<Vec<_>>())
        .filter(|f| !f.is_empty())
        .collect();
    faces.sort();
    faces.dedup();
    let maximal: Vec<Vec<usize>> = faces
        .iter()
        .filter(|f| !faces.iter().any(|h| h.len() > f.len() && f.iter().all(|x| h.contains(x))))
        .cloned()
        .collect();
    let mut b = GraphBuilder::new();
    for &u in &neighbors {
        b.add_vertex(g.label(u).clone())?;
    }
    for f in &maximal {
        for (i, &a) in f.iter().enumerate() {
            for &c in &f[i + 1..] {
                b.add_edge(a, c)?;
            }
        }
    }
    Ok(CellLink {
        vertex: v,
        neighbors,
        graph: b.build(),
        faces: maximal,
    })
}

impl CellLink {
    /// First clique of the link graph not contained in a face.
    pub fn non_flag_clique(&self, budget: &Budget) -> Result<Option<Vec<usize>>> {
        Ok(enumerate::maximal_cliques(&self.graph, &self.graph.full_set(), budget)?
            .into_iter()
            .find(|c| !self.faces.iter().any(|f| c.iter().all(|x| f.contains(x)))))
    }
}

/// Local `k`-largeness of a cell complex: every vertex link is flag and has no full cycle of
/// length `4..k`.
pub fn check_locally_k_large_cell(y: &CellComplex, k: usize, budget: &Budget) -> Result<Verdict> {
    if k < 4 {
        return Err(Error::InvalidParams(format!("k must be at least 4, got {k}")));
    }
    let name = format!("locally-{k}-large");
    let mut v = Verdict::pass(&name);
    for u in y.graph().vertices() {
        v.add_stat("links", 1);
        let link = cell_link(y, u)?;
        if let Some(c) = link.non_flag_clique(budget)? {
            let labels = c.iter().map(|&i| y.graph().label(link.neighbors[i]).to_string()).join(" ");
            v.holds = false;
            v.certificate = Some(Certificate::Vertex {
                vertex: u,
                detail: format!("link is not flag: {{{labels}}} spans no face"),
            });
            return Ok(v);
        }
        if let Some(c) = enumerate::first_induced_cycle(&link.graph, &link.graph.full_set(), 4, k - 1, budget)? {
            let labels = c.iter().map(|&i| y.graph().label(link.neighbors[i]).to_string()).join(" ");
            v.holds = false;
            v.certificate = Some(Certificate::Vertex {
                vertex: u,
                detail: format!("link has a full {}-cycle: {labels}", c.len()),
            });
            return Ok(v);
        }
    }
    Ok(v)
}

fn face_graph(g: &Graph, cells: &[Vec<usize>], tops: &[Vec<usize>]) -> Result<FlagComplex> {
    let mut b = GraphBuilder::new();
    for c in cells {
        b.add_vertex(c.iter().map(|&v| g.label(v).to_string()).join("+"))?;
    }
    let sets: Vec<_> = cells.iter().map(|c| g.set_of(c.iter().copied())).collect();
    let top_sets: Vec<_> = tops.iter().map(|c| g.set_of(c.iter().copied())).collect();
    for i in 0..cells.len() {
        for j in i + 1..cells.len() {
            if top_sets.iter().any(|t| sets[i].is_subset(t) && sets[j].is_subset(t)) {
                b.add_edge(i, j)?;
            }
        }
    }
    Ok(FlagComplex::new(b.build()))
}

/// Face complex of a cell complex: vertices are the cells, adjacent iff contained in a common
/// cell. Vertex labels join the cell's labels with `+`.
pub fn face_complex(y: &CellComplex) -> Result<FlagComplex> {
    face_graph(y.graph(), y.cells(), &y.maximal_cells())
}

/// Face complex of a flag complex (cells are its simplices).
pub fn face_complex_of_flag(x: &FlagComplex, budget: &Budget) -> Result<FlagComplex> {
    let tops: Vec<Vec<usize>> = x.maximal_simplices(budget)?.into_iter().map(|s| s.into_vertices()).collect();
    let y = CellComplex::simplicial(x.skeleton().clone(), &tops)?;
    face_complex(&y)
}

/// Whether the link of `v` in `Th(Y)` is isomorphic to the face complex of the link `Y_v`.
pub fn link_matches_face_complex(y: &CellComplex, th: &FlagComplex, v: usize, budget: &Budget) -> Result<bool> {
    let link = cell_link(y, v)?;
    let yv = CellComplex::simplicial(link.graph.clone(), &link.faces)?;
    let faces = face_complex(&yv)?;
    let (th_link, _) = th.skeleton().induced(th.skeleton().row(v));
    Ok(iso::find_isomorphism(faces.skeleton(), &th_link, budget)?.is_some())
}

/// Euler characteristic of a flag complex from its f-vector.
pub fn euler_characteristic(x: &FlagComplex, budget: &Budget) -> Result<i64> {
    Ok(x.f_vector(budget)?
        .iter()
        .enumerate()
        .map(|(d, &f)| if d % 2 == 0 { f as i64 } else { -(f as i64) })
        .sum())
}

/// Euler characteristic of a cell complex: `Σ (−1)^dim` over cells.
pub fn euler_characteristic_cells(y: &CellComplex) -> i64 {
    y.euler_characteristic()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conditions::{check_locally_k_large, is_weakly_systolic};
    use crate::corpus;

    #[test]
    fn cube_thickens_to_a_simplex() {
        let b = Budget::default();
        let th = thicken(&corpus::cube(3).unwrap(), &b).unwrap();
        assert_eq!(th.complex.len(), 8);
        assert_eq!(th.complex.skeleton().edge_count(), 28);
        assert!(th.flag.holds);
    }

    #[test]
    fn two_squares_thicken_to_two_tetrahedra() {
        let b = Budget::default();
        let th = thicken(&corpus::two_squares().unwrap(), &b).unwrap();
        assert_eq!(th.complex.skeleton().edge_count(), 6 + 6 - 1);
        assert!(th.flag.holds);
        let max = th.complex.maximal_simplices(&b).unwrap();
        assert_eq!(max.len(), 2);
        assert!(max.iter().all(|s| s.len() == 4));
    }

    #[test]
    fn hollow_triangle_of_squares() {
        let b = Budget::default();
        let y = corpus::three_squares().unwrap();
        let nd = check_no_delta(&y, &b).unwrap();
        assert!(!nd.holds);
        assert!(!check_no_delta_all_cells(&y, &b).unwrap().holds);
        let th = thicken(&y, &b).unwrap();
        assert!(!th.flag.holds);
        assert_eq!(th.flag.certificate.unwrap().kind(), "clique");
    }

    #[test]
    fn cube_corner_is_no_delta_but_not_locally_flag() {
        let b = Budget::default();
        let y = corpus::cube_corner().unwrap();
        assert!(check_no_delta(&y, &b).unwrap().holds);
        assert!(check_no_delta_all_cells(&y, &b).unwrap().holds);
        let v = check_locally_k_large_cell(&y, 4, &b).unwrap();
        assert!(!v.holds);
        // the three side neighbours of the corner are pairwise in a square, but not all three
        let th = thicken(&y, &b).unwrap();
        assert!(!th.flag.holds);
    }

    #[test]
    fn link_of_a_grid_vertex_is_a_square() {
        let b = Budget::default();
        let y = corpus::square_grid(2, 2).unwrap();
        let centre = y.graph().id_of_str("1,1").unwrap();
        let link = cell_link(&y, centre).unwrap();
        assert_eq!(link.graph.len(), 4);
        assert_eq!(link.graph.edge_count(), 4);
        assert!(check_locally_k_large_cell(&y, 4, &b).unwrap().holds);
        assert!(!check_locally_k_large_cell(&y, 5, &b).unwrap().holds);
    }

    #[test]
    fn square_links_are_arcs() {
        let b = Budget::default();
        let y = corpus::square_grid(1, 1).unwrap();
        for k in 4..10 {
            assert!(check_locally_k_large_cell(&y, k, &b).unwrap().holds);
        }
    }

    #[test]
    fn face_complexes() {
        let b = Budget::default();
        let edge = face_complex_of_flag(&corpus::path(2), &b).unwrap();
        assert_eq!(edge.len(), 3);
        assert_eq!(edge.skeleton().edge_count(), 3);
        let square = CellComplex::cubical(corpus::cycle(4).skeleton().clone(), &[]).unwrap();
        let f = face_complex(&square).unwrap();
        assert_eq!(f.len(), 8);
        assert_eq!(f.skeleton().edge_count(), 12);
    }

    #[test]
    fn thickening_preserves_euler_characteristic() {
        let b = Budget::default();
        for y in [corpus::cube(3).unwrap(), corpus::square_grid(3, 3).unwrap(), corpus::cube_block(2).unwrap()] {
            let th = thicken(&y, &b).unwrap();
            assert_eq!(euler_characteristic(&th.complex, &b).unwrap(), euler_characteristic_cells(&y));
        }
        assert_eq!(euler_characteristic(&corpus::cycle(6), &b).unwrap(), 0);
        assert_eq!(euler_characteristic(&corpus::simplex(4), &b).unwrap(), 1);
    }

    #[test]
    fn weksej_links() {
        let b = Budget::default();
        let y = corpus::square_grid(2, 2).unwrap();
        let th = thicken(&y, &b).unwrap();
        for v in y.graph().vertices() {
            assert!(link_matches_face_complex(&y, &th.complex, v, &b).unwrap());
        }
    }

    #[test]
    fn davis_pentagon_thickening_is_weakly_systolic() {
        let b = Budget::default();
        let y = corpus::davis_cycle(5, 3).unwrap();
        assert!(check_locally_k_large_cell(&y, 5, &b).unwrap().holds);
        assert!(check_no_delta(&y, &b).unwrap().holds);
        let th = thicken(&y, &b).unwrap();
        assert!(th.flag.holds);
        assert!(check_locally_k_large(&th.complex, 5, &b).unwrap().holds);
        assert!(is_weakly_systolic(&th.complex).unwrap().holds);
    }
}
