//! `gaussoids`: censuses, checks and certificates for gaussoids on the command line.
//!
//! Exit status is 0 on success, 1 when a check or verification fails (the
//! report is still printed), and 2 on usage or input errors.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gaussoids::Strategy;

use report::{Format, Report};

#[derive(Parser, Debug)]
#[command(name = "gaussoids", version, about = "Exact computations with gaussoids")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads; 1 runs everything on the calling thread.
    #[arg(long, global = true, env = "GAUSSOIDS_JOBS", default_value_t = 1)]
    pub jobs: usize,

    /// Seed for randomized checks and searches.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the square and edge trinomials.
    Trinomials(TrinomialsArgs),
    /// Check the gaussoid axioms for each gaussoid in a file.
    Check(CheckArgs),
    /// Stream every gaussoid on [n].
    Enumerate(EnumerateArgs),
    /// Write a DIMACS cnf whose models are gaussoids or orientations.
    Dimacs(DimacsArgs),
    /// Orbits of a census under a symmetry group.
    Orbits(OrbitsArgs),
    /// Orientations of the gaussoids in a file.
    Orient(OrientArgs),
    /// Count or list gaussoids and oriented gaussoids.
    Census(CensusArgs),
    /// Compare positive gaussoids with graph gaussoids and M-matrix realizations.
    Positive(PositiveArgs),
    /// Quadric generators of the ideal of principal and almost-principal minors.
    Quadrics(QuadricsArgs),
    /// Check the shipped tropical fixtures.
    Tropical(TropicalArgs),
    /// Check a valuation, or compute one from a matrix over Q[e].
    Valuation(ValuationArgs),
    /// Realizability: class fixtures, sign vectors, matrices.
    Realize(RealizeArgs),
}

#[derive(Args, Debug)]
pub struct TrinomialsArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = TrinomialSet::All)]
    pub kind: TrinomialSet,
    #[arg(long)]
    pub count_only: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrinomialSet {
    All,
    Square,
    Edge,
}

#[derive(Args, Debug)]
pub struct CheckArgs {
    #[arg(long)]
    pub n: usize,
    /// Gaussoid file; `-` reads stdin.
    #[arg(long)]
    pub file: PathBuf,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    /// Write gaussoids here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Write `#b` bitstrings instead of symbol lists.
    #[arg(long)]
    pub bits: bool,
    /// Allow the long census runs (n ≥ 5).
    #[arg(long)]
    pub extended: bool,
}

#[derive(Args, Debug)]
pub struct DimacsArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Encode oriented gaussoids (two variables per almost-principal minor).
    #[arg(long, conflicts_with = "orientations_of")]
    pub oriented: bool,
    /// Encode the orientations of the first gaussoid in this file.
    #[arg(long)]
    pub orientations_of: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum What {
    Gaussoids,
    Oriented,
    Uniform,
    Positive,
}

#[derive(Args, Debug)]
pub struct OrbitsArgs {
    #[arg(long)]
    pub n: usize,
    /// sn, dual-sn, hyperoct or reorient-sn.
    #[arg(long, default_value = "sn")]
    pub group: String,
    #[arg(long, value_enum, default_value_t = What::Gaussoids)]
    pub what: What,
    #[arg(long)]
    pub count_only: bool,
    #[arg(long)]
    pub extended: bool,
}

#[derive(Args, Debug)]
pub struct OrientArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub file: PathBuf,
    /// Also print every orientation as a sign string.
    #[arg(long)]
    pub list: bool,
    /// Count through the orientation cnf instead of the direct search.
    #[arg(long)]
    pub cnf: bool,
}

#[derive(Args, Debug)]
pub struct CensusArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value_t = What::Gaussoids)]
    pub what: What,
    #[arg(long)]
    pub count_only: bool,
    #[arg(long)]
    pub extended: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub bits: bool,
}

#[derive(Args, Debug)]
pub struct PositiveArgs {
    #[arg(long)]
    pub n: usize,
}

#[derive(Args, Debug)]
pub struct QuadricsArgs {
    #[arg(long)]
    pub n: usize,
    /// Compare the dimension of the span with the closed form (always reported).
    #[arg(long)]
    pub dim: bool,
    /// Evaluate each generator on this many random symmetric matrices.
    #[arg(long, value_name = "TRIALS")]
    pub verify: Option<usize>,
    /// Print the generators.
    #[arg(long)]
    pub list: bool,
    /// Check every gaussoid of the census for compatibility with every generator.
    #[arg(long)]
    pub compat: bool,
    #[arg(long)]
    pub extended: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum TropicalCheck {
    All,
    Rays,
    Lineality,
    Fixtures,
}

#[derive(Args, Debug)]
pub struct TropicalArgs {
    #[arg(long, value_enum, default_value_t = TropicalCheck::All)]
    pub what: TropicalCheck,
}

#[derive(Args, Debug)]
pub struct ValuationArgs {
    /// Valuation JSON, or with `--eps` a matrix with one row per line and
    /// comma-separated entries such as `1 - e^7`.
    #[arg(long)]
    pub file: PathBuf,
    #[arg(long)]
    pub eps: bool,
    /// Treat the matrix as a concentration matrix and value the minors of its inverse.
    #[arg(long, requires = "eps")]
    pub inverse: bool,
}

#[derive(Args, Debug)]
pub struct RealizeArgs {
    #[arg(long)]
    pub n: Option<usize>,
    /// Sign string of an oriented gaussoid in canonical A-order.
    #[arg(long, conflicts_with = "matrix")]
    pub signs: Option<String>,
    /// Matrix JSON; reports its sign vector and gaussoid.
    #[arg(long)]
    pub matrix: Option<PathBuf>,
    /// Solve the log-linear system for every fixture row, not only rows without a matrix.
    #[arg(long)]
    pub lp: bool,
    /// Search budget for dyadic realizations.
    #[arg(long, default_value_t = 1_000_000)]
    pub trials: u64,
    /// Write the infeasibility certificate JSON here.
    #[arg(long)]
    pub certificate_out: Option<PathBuf>,
}

fn strategy(jobs: usize) -> anyhow::Result<Strategy> {
    if jobs <= 1 {
        return Ok(Strategy::Sequential);
    }
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global()?;
        Ok(Strategy::Parallel)
    }
    #[cfg(not(feature = "parallel"))]
    {
        eprintln!("warning: built without the parallel feature; --jobs {jobs} runs sequentially");
        Ok(Strategy::Sequential)
    }
}

fn run(cli: &Cli) -> anyhow::Result<Report> {
    let ctx = commands::Context { format: cli.format, strategy: strategy(cli.jobs)?, seed: cli.seed };
    match &cli.command {
        Command::Trinomials(a) => commands::trinomials(&ctx, a),
        Command::Check(a) => commands::check(&ctx, a),
        Command::Enumerate(a) => commands::enumerate(&ctx, a),
        Command::Dimacs(a) => commands::dimacs(&ctx, a),
        Command::Orbits(a) => commands::orbits(&ctx, a),
        Command::Orient(a) => commands::orient(&ctx, a),
        Command::Census(a) => commands::census(&ctx, a),
        Command::Positive(a) => commands::positive(&ctx, a),
        Command::Quadrics(a) => commands::quadrics(&ctx, a),
        Command::Tropical(a) => commands::tropical(&ctx, a),
        Command::Valuation(a) => commands::valuation(&ctx, a),
        Command::Realize(a) => commands::realize(&ctx, a),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if let Err(e) = report.print(cli.format) {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
