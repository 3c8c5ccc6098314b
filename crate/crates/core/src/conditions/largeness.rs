//! Flagness and (local) `k`-largeness.

use std::ops::ControlFlow;

use crate::budget::Budget;
use crate::complex::{FlagComplex, Simplex};
use crate::enumerate;
use crate::error::{Error, Result};
use crate::verdict::{Certificate, Verdict};

fn check_k(k: usize) -> Result<()> {
    if k < 4 {
        return Err(Error::InvalidParams(format!("k must be at least 4, got {k}")));
    }
    Ok(())
}

/// `k`-largeness of the complex itself: no full cycle of length `4..k`.
pub fn check_k_large(x: &FlagComplex, k: usize, budget: &Budget) -> Result<Verdict> {
    check_k(k)?;
    let g = x.skeleton();
    let cycle = enumerate::first_induced_cycle(g, &g.full_set(), 4, k - 1, budget)?;
    Ok(Verdict::from_option(
        format!("{k}-large"),
        cycle.map(|cycle| Certificate::Cycle {
            simplex: Vec::new(),
            cycle,
        }),
    ))
}

/// Local `k`-largeness: no vertex link contains a full cycle of length `4..k`. Links of
/// larger simplices are full subcomplexes of vertex links, so vertex links suffice.
pub fn check_locally_k_large(x: &FlagComplex, k: usize, budget: &Budget) -> Result<Verdict> {
    check_k(k)?;
    let g = x.skeleton();
    let mut v = Verdict::pass(format!("locally-{k}-large"));
    if x.len() <= 2 {
        v.vacuous = true;
        return Ok(v);
    }
    for hub in g.vertices() {
        v.add_stat("links", 1);
        if let Some(cycle) = enumerate::first_induced_cycle(g, g.row(hub), 4, k - 1, budget)? {
            v.holds = false;
            v.certificate = Some(Certificate::Cycle {
                simplex: vec![hub],
                cycle,
            });
            break;
        }
    }
    Ok(v)
}

/// Local `k`-largeness checked on the link of every simplex.
pub fn check_locally_k_large_exhaustive(x: &FlagComplex, k: usize, budget: &Budget) -> Result<Verdict> {
    check_k(k)?;
    let g = x.skeleton();
    let mut failure = None;
    let mut err = None;
    let _ = enumerate::for_each_clique(g, &g.full_set(), budget, |s| {
        let link = x.link_set(&Simplex::new(s.iter().copied()));
        match enumerate::first_induced_cycle(g, &link, 4, k - 1, budget) {
            Ok(None) => ControlFlow::Continue(()),
            Ok(Some(cycle)) => {
                failure = Some(Certificate::Cycle {
                    simplex: s.to_vec(),
                    cycle,
                });
                ControlFlow::Break(())
            }
            Err(e) => {
                err = Some(e);
                ControlFlow::Break(())
            }
        }
    })?;
    if let Some(e) = err {
        return Err(e);
    }
    Ok(Verdict::from_option(format!("locally-{k}-large"), failure))
}

/// Flagness of a complex given by its graph and an explicit list of simplices: every clique
/// must lie in a declared simplex. With no declared simplices the clique complex is meant and
/// the property holds by construction.
pub fn check_flag(x: &FlagComplex, declared: &[Vec<usize>], budget: &Budget) -> Result<Verdict> {
    let mut v = Verdict::pass("flag");
    if declared.is_empty() {
        v.vacuous = true;
        return Ok(v);
    }
    let cells: Vec<Simplex> = declared.iter().map(|c| Simplex::new(c.iter().copied())).collect();
    for c in enumerate::maximal_cliques(x.skeleton(), &x.skeleton().full_set(), budget)? {
        let c = Simplex::new(c);
        if !cells.iter().any(|s| c.is_face_of(s)) {
            return Ok(Verdict::fail("flag", Certificate::Clique(c.into_vertices())));
        }
    }
    Ok(v)
}
