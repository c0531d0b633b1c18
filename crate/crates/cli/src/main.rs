//! `walks` — command-line access to the quadrant-walk toolkit.
//!
//! Exit codes: 0 on success, 1 when a verification-style check fails,
//! 2 on usage or input errors.

mod commands;
mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(
    name = "walks",
    version,
    about = "Exact enumeration, series identities, and numeric branch analysis for quadrant lattice walks"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Pretty,
    Json,
    Csv,
}

#[derive(Subcommand)]
pub enum Command {
    /// Decide the sufficient D-finiteness criterion for a step set
    Criterion(CriterionArgs),
    /// Count confined walks by endpoint and length
    Count(CountArgs),
    /// Flip a walk between the quadrant and the half-plane
    Bijection(BijectionArgs),
    /// Print exact coefficients of a named series
    Series(SeriesArgs),
    /// Check a functional-equation identity term by term
    Verify(VerifyArgs),
    /// Numeric branch values, singularity survey, chain, and radius checks
    Analytic(AnalyticArgs),
    /// Validate and evaluate a constant-coefficient shift recurrence
    Recur(RecurArgs),
}

#[derive(Args)]
pub struct CriterionArgs {
    /// Step set, e.g. "(0,1);(1,0);(0,-1);(-1,0)" or JSON [[0,1],...]
    #[arg(long)]
    pub steps: String,
    #[arg(long, value_enum, default_value = "pretty")]
    pub format: OutputFormat,
}

#[derive(Args)]
pub struct CountArgs {
    /// Step set, e.g. "(2,-1);(-1,2)" or JSON [[2,-1],[-1,2]]
    #[arg(long)]
    pub steps: String,
    /// Starting point "i,j"
    #[arg(long, default_value = "0,0")]
    pub start: String,
    /// Maximum walk length
    #[arg(long)]
    pub nmax: usize,
    /// Confinement region
    #[arg(long, value_enum, default_value = "quadrant")]
    pub region: RegionArg,
    /// Sum counts over the length, keeping endpoints only
    #[arg(long)]
    pub aggregate: bool,
    /// Write the output to a file instead of stdout
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value = "pretty")]
    pub format: OutputFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RegionArg {
    Quadrant,
    #[value(name = "half-plane")]
    HalfPlane,
}

#[derive(Args)]
pub struct BijectionArgs {
    /// Step set (must be x-symmetric with small height variations)
    #[arg(long)]
    pub steps: String,
    /// Starting point "i,j"
    #[arg(long, default_value = "0,0")]
    pub start: String,
    /// Comma-separated step names, e.g. "N,N,E,S"
    #[arg(long)]
    pub walk: String,
    /// Step-name legend "NAME=dx,dy;..." (defaults cover the compass rose)
    #[arg(long)]
    pub legend: Option<String>,
    /// Flip direction: down = quadrant to half-plane, up = inverse
    #[arg(long, value_enum, default_value = "down")]
    pub direction: FlipDirection,
    #[arg(long, value_enum, default_value = "pretty")]
    pub format: OutputFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FlipDirection {
    Down,
    Up,
}

#[derive(Args)]
pub struct SeriesArgs {
    /// Which series to expand
    #[arg(long, value_enum)]
    pub which: SeriesName,
    /// Truncation order (highest exponent included)
    #[arg(long)]
    pub order: usize,
    #[arg(long, value_enum, default_value = "json")]
    pub format: OutputFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SeriesName {
    /// Power-series kernel root ξ
    Xi,
    /// Even companion ψ
    Psi,
    /// ξ/2, the shared even part of the conjugate roots
    Phi,
    /// Bottom-row generating function via the iterated kernel equation
    G,
    /// Column generating function of the 2-D knight-shift recurrence
    F,
}

#[derive(Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub identity: IdentityName,
    /// Comparison order (total degree for knight-kernel)
    #[arg(long)]
    pub order: usize,
    #[arg(long, value_enum, default_value = "pretty")]
    pub format: OutputFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum IdentityName {
    Main,
    #[value(name = "knight-kernel")]
    KnightKernel,
    Diagonal,
    Main2,
}

#[derive(Args)]
pub struct AnalyticArgs {
    #[command(subcommand)]
    pub check: AnalyticCmd,
    /// Emit machine-readable JSON (complex numbers as [re, im])
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Subcommand)]
pub enum AnalyticCmd {
    /// Classify each branch at each candidate singularity
    Survey,
    /// Follow the singularity chain of the 2-D recurrence
    Chain,
    /// Root-test radius estimate for G or F coefficients
    Radius {
        #[arg(long, value_enum, default_value = "g")]
        which: RadiusSeries,
        /// Highest coefficient index to compute
        #[arg(long, default_value_t = 300)]
        order: usize,
    },
    /// Majorant bound for G′(y_c) against 2x_c²y_c
    Gbound,
    /// Labeled branch values at one complex point "re,im"
    Eval {
        #[arg(long)]
        at: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RadiusSeries {
    G,
    F,
}

#[derive(Args)]
pub struct RecurArgs {
    /// JSON recurrence description
    #[arg(long)]
    pub spec: std::path::PathBuf,
    /// Evaluation box "lo:hi,lo:hi,..." (one range per dimension)
    #[arg(long)]
    pub r#box: Option<String>,
    /// Only validate; print the ranking weight or infeasibility witness
    #[arg(long)]
    pub validate_only: bool,
    /// Write the output to a file instead of stdout
    #[arg(long)]
    pub out: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value = "pretty")]
    pub format: OutputFormat,
}

fn main() {
    let cli = Cli::parse();
    match commands::run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(2);
        }
    }
}
