//! `wsc`: checks and constructions for weakly systolic flag complexes.

mod commands;
mod input;
mod report;

use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use crate::report::{Report, RunInfo};

#[derive(Parser, Debug)]
#[command(name = "wsc", version, about = "Weakly systolic flag complexes: checks and constructions")]
pub struct Cli {
    /// Search-node budget for exhaustive searches; running out exits with code 2.
    #[arg(long, global = true, env = "WSC_BUDGET", default_value_t = wsc_core::budget::DEFAULT_BUDGET)]
    budget: u64,

    /// Worker threads (0: one per core).
    #[arg(long, global = true, env = "WSC_THREADS", default_value_t = 0)]
    threads: usize,

    /// Seed for randomized sampling, recorded in the report.
    #[arg(long, global = true, env = "WSC_SEED", default_value_t = 0)]
    seed: u64,

    #[arg(long, global = true, env = "WSC_FORMAT", value_enum, default_value_t = Format::Text)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Property {
    Flag,
    Sd2star,
    Sd2starK,
    LocKLarge,
    Sdn,
    SdnTilde,
    WeaklySystolic,
    WeaklyBridged,
    Sd2starLinks,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ConvexityMode {
    Convex,
    #[value(name = "3convex")]
    ThreeConvex,
    #[value(name = "local3convex")]
    LocalThreeConvex,
    Neighborhood,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum Pendant {
    Any,
    NonAdjacentApex,
    Full,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check a local condition on the clique complex of the input graph.
    Check {
        input: String,
        #[arg(long, value_enum)]
        property: Property,
        #[arg(long)]
        k: Option<usize>,
        /// Comma-separated labels of a base simplex (for `sdn`, `sdn-tilde`).
        #[arg(long)]
        base: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        /// Largest clique allowed for `weakly-bridged`.
        #[arg(long, default_value_t = 16)]
        clique_bound: usize,
        /// Which wheels with a pendant triangle obstruct `sd2star-links`.
        #[arg(long, value_enum, default_value_t = Pendant::NonAdjacentApex)]
        pendant: Pendant,
    },
    /// Build the radius-R ball of the universal cover and validate it.
    Cover {
        input: String,
        #[arg(long)]
        base: String,
        #[arg(long)]
        radius: usize,
        /// Write the cover with `m <cover> <base>` lines for the covering map.
        #[arg(long)]
        out: Option<String>,
    },
    /// Convexity of a full subcomplex given by a file of vertex labels.
    Convexity {
        input: String,
        #[arg(long)]
        subcomplex: String,
        #[arg(long, value_enum, default_value_t = ConvexityMode::Convex)]
        mode: ConvexityMode,
        #[arg(long, default_value_t = 8)]
        nmax: usize,
    },
    /// Thicken a cell complex (`c` lines declare maximal cells).
    Thicken {
        input: String,
        #[arg(long)]
        out: Option<String>,
    },
    /// Ball of the Davis complex of the right-angled Coxeter group with the given nerve.
    Davis {
        #[arg(long)]
        nerve: String,
        #[arg(long)]
        radius: usize,
        #[arg(long)]
        out: Option<String>,
    },
    /// The no-Δ property of a cell complex.
    Nodelta { input: String },
    /// Euler characteristic (of the cell complex and its thickening when cells are declared).
    Chi { input: String },
    /// Thin bigons up to a distance (default: the diameter).
    Bigons {
        input: String,
        #[arg(long)]
        maxdist: Option<usize>,
    },
    /// Search for an isometrically embedded flat triangle of the given side.
    Flats {
        input: String,
        #[arg(long)]
        side: usize,
    },
    /// Strict contraction of second projections towards a base vertex.
    Contraction {
        input: String,
        #[arg(long)]
        base: String,
    },
    /// The inverse system of subdivided even spheres with the maps π².
    Boundary {
        input: String,
        #[arg(long)]
        base: String,
        #[arg(long)]
        levels: usize,
        #[arg(long)]
        out: Option<String>,
    },
    /// List the corpus, or write a named complex (`wheel-5`, `hexpatch-4`, `flag-torus-7x7`).
    Corpus {
        name: Option<String>,
        #[arg(long)]
        out: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 3 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if cli.threads > 0 {
        // only fails if a pool already exists, which cannot happen this early
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.threads).build_global();
    }
    let started = Instant::now();
    let budget = wsc_core::budget::Budget::new(cli.budget);
    let mut ctx = commands::Ctx::new(&budget);
    match commands::run(&cli.command, &mut ctx) {
        Ok(false) => return ExitCode::SUCCESS,
        Ok(true) => {}
        Err(e) => {
            if let Err(e) = commands::classify(e, &mut ctx) {
                eprintln!("error: {e:#}");
                return ExitCode::from(3);
            }
        }
    }
    let outcome = std::mem::take(&mut ctx.outcome);
    let status = outcome.status();
    let report = Report::new(
        outcome,
        RunInfo {
            command: std::env::args().skip(1).collect::<Vec<_>>().join(" "),
            input: ctx.input_name.clone(),
            input_sha256: ctx.input_sha256.clone(),
            budget_used: budget.used(),
            budget_limit: budget.limit(),
            seed: cli.seed,
            threads: rayon::current_num_threads(),
            wall_time: started.elapsed(),
        },
    );
    match cli.format {
        Format::Text => print!("{}", report.to_text()),
        Format::Structured => print!("{}", report.to_json()),
    }
    ExitCode::from(status.exit_code())
}
