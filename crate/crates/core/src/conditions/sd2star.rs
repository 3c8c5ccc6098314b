//! `SD₂*`, `SD₂*(k)` and the wheel-based characterisation of complexes whose links and full
//! subcomplexes all satisfy `SD₂*(k)`.

use std::ops::ControlFlow;

use crate::budget::Budget;
use crate::complex::FlagComplex;
use crate::error::{Error, Result};
use crate::verdict::{Certificate, Verdict};

use super::wheels::{for_each_pendant_wheel, for_each_wheel, WheelWithPendant};

/// Which wheels with a pendant triangle count as obstructions in [`check_sd2_star_links`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PendantMode {
    /// Every wheel with a pendant triangle.
    Any,
    /// Those whose apex is not adjacent to the hub. Exactly the obstructions that survive in
    /// the span of the configuration, so this gives the full-subcomplex characterisation.
    #[default]
    NonAdjacentApex,
    /// Only full configurations (the apex sees nothing of the wheel beyond its base edge).
    Full,
}

impl PendantMode {
    fn admits(self, x: &FlagComplex, pw: &WheelWithPendant) -> bool {
        match self {
            PendantMode::Any => true,
            PendantMode::NonAdjacentApex => !x.adjacent(pw.pendant, pw.wheel.hub),
            PendantMode::Full => pw.is_full(x),
        }
    }
}

fn first_four_wheel(x: &FlagComplex, budget: &Budget, v: &mut Verdict) -> Result<Option<Certificate>> {
    let mut found = None;
    let mut count = 0;
    let _ = for_each_wheel(x, 4, budget, |w| {
        count += 1;
        found = Some(Certificate::Wheel(w.clone()));
        ControlFlow::Break(())
    })?;
    v.add_stat("wheels", count);
    Ok(found)
}

/// `SD₂*(k)`: no 4-wheel, and every `l`-wheel with a pendant triangle, `5 ≤ l < k`, lies in
/// `B_1(u)` for some vertex `u`.
pub fn check_sd2_star_k(x: &FlagComplex, k: usize, budget: &Budget) -> Result<Verdict> {
    if k < 5 {
        return Err(Error::InvalidParams(format!("SD2*(k) needs k >= 5, got {k}")));
    }
    sd2_star(x, k, format!("sd2star({k})"), budget)
}

/// `SD₂*`, i.e. `SD₂*(6)`.
pub fn check_sd2_star(x: &FlagComplex, budget: &Budget) -> Result<Verdict> {
    sd2_star(x, 6, "sd2star".into(), budget)
}

fn sd2_star(x: &FlagComplex, k: usize, name: String, budget: &Budget) -> Result<Verdict> {
    let mut v = Verdict::pass(name);
    if x.len() <= 2 {
        v.vacuous = true;
        return Ok(v);
    }
    if let Some(c) = first_four_wheel(x, budget, &mut v)? {
        v.holds = false;
        v.certificate = Some(c);
        return Ok(v);
    }
    for l in 5..k {
        let mut found = None;
        let mut count = 0;
        let _ = for_each_pendant_wheel(x, l, budget, |pw| {
            count += 1;
            if pw.dominator(x).is_some() {
                ControlFlow::Continue(())
            } else {
                found = Some(Certificate::PendantWheel(pw.clone()));
                ControlFlow::Break(())
            }
        })?;
        v.add_stat("pendant_wheels", count);
        if found.is_some() {
            v.holds = false;
            v.certificate = found;
            break;
        }
    }
    Ok(v)
}

/// No 4-wheel and no `l`-wheel with a pendant triangle admitted by `mode`, `5 ≤ l < k`.
///
/// With [`PendantMode::NonAdjacentApex`] this holds iff every full subcomplex of `X`
/// satisfies `SD₂*(k)`, iff `X` and all of its vertex links do.
pub fn check_sd2_star_links(x: &FlagComplex, k: usize, mode: PendantMode, budget: &Budget) -> Result<Verdict> {
    if k < 6 {
        return Err(Error::InvalidParams(format!("k must be at least 6, got {k}")));
    }
    let mut v = Verdict::pass(format!("sd2star-links({k})"));
    if x.len() <= 2 {
        v.vacuous = true;
        return Ok(v);
    }
    if let Some(c) = first_four_wheel(x, budget, &mut v)? {
        v.holds = false;
        v.certificate = Some(c);
        return Ok(v);
    }
    for l in 5..k {
        let mut found = None;
        let _ = for_each_pendant_wheel(x, l, budget, |pw| {
            if mode.admits(x, pw) {
                found = Some(Certificate::PendantWheel(pw.clone()));
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        })?;
        if found.is_some() {
            v.holds = false;
            v.certificate = found;
            break;
        }
    }
    Ok(v)
}
