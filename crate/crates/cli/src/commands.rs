use anyhow::{Context, Result};
use wsc_core::budget::Budget;
use wsc_core::complex::{span, FlagComplex, Subcomplex};
use wsc_core::conditions::{
    check_flag, check_locally_k_large, check_sd2_star, check_sd2_star_k, check_sd2_star_links, check_sdn,
    check_sdn_tilde, is_weakly_bridged, is_weakly_systolic, PendantMode,
};
use wsc_core::convexity::{find_convex_neighborhood, is_3_convex, is_convex, is_locally_3_convex};
use wsc_core::corpus::{self, Generated};
use wsc_core::cover::{build_cover, validate_cover};
use wsc_core::error::Error;
use wsc_core::graph::{Graph, GraphBuilder};
use wsc_core::hyperbolic::{check_strict_contraction, check_thin_bigons, export_boundary_system, find_flat_triangle};
use wsc_core::io;
use wsc_core::thickening::{
    check_no_delta, davis_complex, euler_characteristic, euler_characteristic_cells, moussong_check, thicken,
    CoxeterNerve,
};
use wsc_core::verdict::{Certificate, Verdict};

use crate::input::{self, Input};
use crate::report::Outcome;
use crate::{Command, ConvexityMode, Pendant, Property};

pub struct Ctx<'a> {
    pub budget: &'a Budget,
    pub input_name: String,
    pub input_sha256: String,
    /// Labels for certificates raised as errors.
    labels: Option<Graph>,
    pub outcome: Outcome,
}

impl<'a> Ctx<'a> {
    pub fn new(budget: &'a Budget) -> Self {
        Ctx {
            budget,
            input_name: String::new(),
            input_sha256: String::new(),
            labels: None,
            outcome: Outcome::default(),
        }
    }

    fn load(&mut self, spec: &str) -> Result<Input> {
        let input = input::load(spec)?;
        self.input_name = input.name.clone();
        self.input_sha256 = input.sha256.clone();
        self.labels = Some(input.graph().clone());
        Ok(input)
    }

    fn verdict(&mut self, v: &Verdict, g: &Graph) {
        self.outcome.verdict(v, g);
    }
}

/// Budget exhaustion and failed preconditions still produce a report; anything else is an
/// input or usage error.
pub fn classify(e: anyhow::Error, ctx: &mut Ctx) -> Result<()> {
    match e.downcast_ref::<Error>() {
        Some(Error::BudgetExceeded { .. }) => {
            ctx.outcome.inconclusive = Some(e.to_string());
            Ok(())
        }
        Some(Error::Precondition { condition, verdict }) => {
            let v = verdict.as_deref().cloned().unwrap_or_else(|| {
                Verdict::fail(condition.clone(), Certificate::Note(format!("precondition {condition} fails")))
            });
            let g = ctx.labels.clone().unwrap_or_else(|| GraphBuilder::new().build());
            ctx.outcome.result("precondition", condition);
            ctx.verdict(&v, &g);
            Ok(())
        }
        _ => Err(e),
    }
}

fn write_out(path: &Option<String>, bytes: &[u8]) -> Result<()> {
    if let Some(p) = path {
        std::fs::write(p, bytes).with_context(|| format!("writing {p}"))?;
    }
    Ok(())
}

fn join(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

/// Runs a command; `false` when it printed its own output instead of a report.
pub fn run(cmd: &Command, ctx: &mut Ctx) -> Result<bool> {
    let budget = ctx.budget;
    match cmd {
        Command::Check {
            input,
            property,
            k,
            base,
            n,
            clique_bound,
            pendant,
        } => {
            let inp = ctx.load(input)?;
            let x = inp.flag();
            let need_k = || k.context("--k is required for this property");
            let v = match property {
                Property::Flag => check_flag(&x, &inp.doc.cells, budget)?,
                Property::Sd2star => check_sd2_star(&x, budget)?,
                Property::Sd2starK => check_sd2_star_k(&x, need_k()?, budget)?,
                Property::LocKLarge => check_locally_k_large(&x, need_k()?, budget)?,
                Property::Sdn | Property::SdnTilde => {
                    let labels = base.as_deref().context("--base is required for this property")?;
                    let n = n.context("--n is required for this property")?;
                    let s = inp.simplex(&x, labels)?;
                    let a = span(&x, s.vertices())?;
                    if matches!(property, Property::Sdn) {
                        check_sdn(&x, &a, n, budget)?
                    } else {
                        check_sdn_tilde(&x, &a, n)?
                    }
                }
                Property::WeaklySystolic => is_weakly_systolic(&x)?,
                Property::WeaklyBridged => is_weakly_bridged(x.skeleton(), *clique_bound, budget)?,
                Property::Sd2starLinks => {
                    let mode = match pendant {
                        Pendant::Any => PendantMode::Any,
                        Pendant::NonAdjacentApex => PendantMode::NonAdjacentApex,
                        Pendant::Full => PendantMode::Full,
                    };
                    check_sd2_star_links(&x, k.unwrap_or(6), mode, budget)?
                }
            };
            ctx.verdict(&v, inp.graph());
        }
        Command::Cover {
            input,
            base,
            radius,
            out,
        } => {
            let inp = ctx.load(input)?;
            let x = inp.flag();
            let pc = build_cover(&x, inp.vertex(base)?, *radius, budget)?;
            ctx.outcome.result("sphere_sizes", join(&pc.sphere_sizes));
            ctx.outcome.result("cover_vertices", pc.cover.len());
            ctx.outcome.result("cover_edges", pc.cover.skeleton().edge_count());
            let v = validate_cover(&pc, budget)?;
            ctx.verdict(&v, pc.cover.skeleton());
            let mut bytes = Vec::new();
            io::write_graph(pc.cover.skeleton(), &mut bytes);
            io::write_map(pc.cover.skeleton(), x.skeleton(), &pc.map, &mut bytes);
            write_out(out, &bytes)?;
        }
        Command::Convexity {
            input,
            subcomplex,
            mode,
            nmax,
        } => {
            let inp = ctx.load(input)?;
            let x = inp.flag();
            let ids = input::read_label_list(subcomplex, inp.graph())?;
            let y = span(&x, &ids)?;
            match mode {
                ConvexityMode::Convex => {
                    let v = is_convex(&x, &y, budget)?;
                    ctx.verdict(&v, inp.graph());
                }
                ConvexityMode::ThreeConvex | ConvexityMode::LocalThreeConvex => {
                    let v = if matches!(mode, ConvexityMode::ThreeConvex) {
                        is_3_convex(&x, &y, budget)?
                    } else {
                        is_locally_3_convex(&x, &y, budget)?
                    };
                    ctx.verdict(&v, inp.graph());
                    ctx.outcome.result("connected", y.is_connected());
                }
                ConvexityMode::Neighborhood => neighborhood(ctx, &x, &y, *nmax, inp.graph())?,
            }
        }
        Command::Thicken { input, out } => {
            let inp = ctx.load(input)?;
            let y = inp.cells()?;
            let th = thicken(&y, budget)?;
            ctx.outcome.result("vertices", th.complex.len());
            ctx.outcome.result("edges", th.complex.skeleton().edge_count());
            ctx.outcome.result("dimension", th.complex.dim());
            ctx.verdict(&th.flag, inp.graph());
            write_out(out, &io::graph_to_bytes(th.complex.skeleton()))?;
        }
        Command::Davis { nerve, radius, out } => {
            let inp = ctx.load(nerve)?;
            let cells = (!inp.doc.cells.is_empty()).then(|| inp.doc.cells.clone());
            let nerve = CoxeterNerve::new(inp.graph().clone());
            let m = moussong_check(&nerve, cells.as_deref(), budget)?;
            ctx.verdict(&m, inp.graph());
            let d = davis_complex(&nerve, *radius, budget)?;
            let g = d.complex.graph();
            ctx.outcome.result("vertices", g.len());
            ctx.outcome.result("cells", d.complex.cells().len());
            ctx.outcome.result("maximal_cells", d.complex.maximal().len());
            let interior = d.thickened_interior(budget)?;
            ctx.outcome.result("interior_vertices", interior.len());
            let mut v = check_sd2_star(&interior, budget)?;
            v.condition = "sd2star(thickened-interior)".into();
            ctx.verdict(&v, interior.skeleton());
            let mut bytes = Vec::new();
            io::write_graph(g, &mut bytes);
            io::write_cells(g, &d.complex.maximal_cells(), &mut bytes);
            write_out(out, &bytes)?;
        }
        Command::Nodelta { input } => {
            let inp = ctx.load(input)?;
            let y = inp.cells()?;
            let v = check_no_delta(&y, budget)?;
            ctx.verdict(&v, inp.graph());
        }
        Command::Chi { input } => {
            let inp = ctx.load(input)?;
            if inp.doc.cells.is_empty() {
                let chi = euler_characteristic(&inp.flag(), budget)?;
                ctx.outcome.result("chi", chi);
            } else {
                let y = inp.cells()?;
                let th = thicken(&y, budget)?;
                let (cy, ct) = (euler_characteristic_cells(&y), euler_characteristic(&th.complex, budget)?);
                ctx.outcome.result("chi", cy);
                ctx.outcome.result("chi_thickening", ct);
                let v = Verdict::from_option(
                    "euler-characteristic-preserved",
                    (cy != ct).then(|| Certificate::Note(format!("chi(Y) = {cy}, chi(Th(Y)) = {ct}"))),
                );
                ctx.verdict(&v, inp.graph());
            }
        }
        Command::Bigons { input, maxdist } => {
            let inp = ctx.load(input)?;
            let x = inp.flag();
            let d = match maxdist {
                Some(d) => *d,
                None => x.diameter().ok_or(Error::Disconnected)?,
            };
            ctx.outcome.result("maxdist", d);
            let v = check_thin_bigons(&x, d, budget)?;
            ctx.verdict(&v, inp.graph());
        }
        Command::Flats { input, side } => {
            let inp = ctx.load(input)?;
            let x = inp.flag();
            let name = format!("no-flat-triangle({side})");
            match find_flat_triangle(&x, *side, budget)? {
                None => ctx.verdict(&Verdict::pass(name), inp.graph()),
                Some(t) => {
                    ctx.outcome.result("strategy", t.strategy);
                    for (&(j, m), &z) in t.coords.iter().zip(&t.embedding) {
                        ctx.outcome.result(&format!("z.{j}.{m}"), inp.graph().label(z));
                    }
                    let v = Verdict::fail(name, Certificate::Note(format!("isometric triangle of side {side} found")));
                    ctx.verdict(&v, inp.graph());
                }
            }
        }
        Command::Contraction { input, base } => {
            let inp = ctx.load(input)?;
            let v = check_strict_contraction(&inp.flag(), inp.vertex(base)?, budget)?;
            ctx.verdict(&v, inp.graph());
        }
        Command::Boundary {
            input,
            base,
            levels,
            out,
        } => {
            let inp = ctx.load(input)?;
            let x = inp.flag();
            let sys = export_boundary_system(&x, inp.vertex(base)?, *levels, budget)?;
            let sizes: Vec<usize> = sys.levels.iter().map(|l| l.simplices.len()).collect();
            ctx.outcome.result("level_sizes", join(&sizes));
            for v in &sys.simplicial {
                ctx.verdict(v, inp.graph());
            }
            let f = sys.check_functoriality(&x)?;
            ctx.verdict(&f, inp.graph());
            write_out(out, &sys.to_bytes())?;
        }
        Command::Corpus { name, out } => {
            let Some(name) = name else {
                for e in corpus::catalogue() {
                    println!("{}", e.name);
                }
                return Ok(false);
            };
            let generated: Generated = corpus::resolve(name)?;
            let bytes = generated.to_bytes();
            match out {
                Some(_) => write_out(out, &bytes)?,
                None => {
                    use std::io::Write;
                    std::io::stdout().write_all(&bytes)?;
                }
            }
            return Ok(false);
        }
    }
    Ok(true)
}

fn neighborhood(ctx: &mut Ctx, x: &FlagComplex, y: &Subcomplex<'_>, nmax: usize, g: &Graph) -> Result<()> {
    match find_convex_neighborhood(x, y, nmax, ctx.budget)? {
        Some(n) => {
            ctx.outcome.result("n", n);
            ctx.verdict(&Verdict::pass(format!("convex-neighborhood(<={nmax})")), g);
        }
        None => {
            let v = Verdict::fail(
                format!("convex-neighborhood(<={nmax})"),
                Certificate::Note(format!("no convex ball B_n(Y) with n <= {nmax}")),
            );
            ctx.verdict(&v, g);
        }
    }
    Ok(())
}
