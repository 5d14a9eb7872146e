//! `locc-lab`: local distinguishability analysis, non-commutativity and curve data.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Exit code when the analyzed set is locally distinguishable.
pub const EXIT_DISTINGUISHABLE: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_INDISTINGUISHABLE: u8 = 2;
pub const EXIT_DISAGREEMENT: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "locc-lab", version, about = "Local distinguishability of orthogonal product states")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Classify a product-state set and build its LOCC protocol.
    Analyze(AnalyzeArgs),
    /// Non-commutativity of one side of a set, or of a semi-classical state.
    Quantumness(QuantumnessArgs),
    /// CSV of N(rho_x) against x on a uniform grid.
    Curve(CurveArgs),
    /// Cross-check the protocol verdict against the exhaustive subset search.
    Oracle(OracleArgs),
    /// List or dump the builtin corpora.
    Examples(ExamplesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SideArg {
    A,
    B,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Numerical tolerance for every comparison.
    #[arg(long, env = "LOCC_LAB_TOL", default_value_t = 1e-8, value_parser = parse_tol)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
#[group(id = "source", multiple = false)]
pub struct Source {
    /// Builtin corpus name (see `examples`).
    #[arg(long, group = "source")]
    pub builtin: Option<String>,
    /// JSON state-set document.
    #[arg(long, group = "source")]
    pub input: Option<PathBuf>,
    /// Random complete set of the given shape, e.g. `3x3`.
    #[arg(long, group = "source", value_parser = parse_dims)]
    pub random: Option<(usize, usize)>,
    #[command(flatten)]
    pub gen: Generator,
}

#[derive(Debug, Args)]
pub struct Generator {
    /// Seed for `--random`.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Tile placement attempts for `--random`; defaults to m*n.
    #[arg(long)]
    pub depth: Option<usize>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub source: Source,
    #[command(flatten)]
    pub common: Common,
    /// Abort after this many rounds; defaults to m+n.
    #[arg(long)]
    pub max_rounds: Option<usize>,
}

#[derive(Debug, Args)]
pub struct QuantumnessArgs {
    #[command(flatten)]
    pub source: Source,
    #[command(flatten)]
    pub common: Common,
    /// The family member rho_x, instead of a file or corpus.
    #[arg(long, conflicts_with_all = ["builtin", "input", "random"])]
    pub rho_x: Option<f64>,
    #[arg(long, value_enum, default_value_t = SideArg::A)]
    pub side: SideArg,
    /// Comma-separated 0-based member indices; all members when absent.
    #[arg(long, value_delimiter = ',')]
    pub indices: Option<Vec<usize>>,
    /// Weight each projector by the member's `p`; the selected weights must sum to 1.
    #[arg(long)]
    pub weighted: bool,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    #[arg(long, default_value_t = 1001)]
    pub samples: usize,
    #[arg(long, env = "LOCC_LAB_TOL", default_value_t = 1e-8, value_parser = parse_tol)]
    pub tol: f64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[command(flatten)]
    pub source: Source,
    #[command(flatten)]
    pub common: Common,
    /// Number of random sets when `--random` is given.
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    /// Largest set the exhaustive search accepts.
    #[arg(long, default_value_t = locc_core::protocol::DEFAULT_MAX_STATES)]
    pub max_states: usize,
}

#[derive(Debug, Args)]
pub struct ExamplesArgs {
    /// Dump this corpus; lists all names when absent.
    #[arg(long)]
    pub builtin: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_tol(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err("tolerance must be a positive finite number".into())
    }
}

fn parse_dims(s: &str) -> Result<(usize, usize), String> {
    let (m, n) = s.split_once(['x', 'X']).ok_or("expected MxN, e.g. 3x3")?;
    let m: usize = m.trim().parse().map_err(|e| format!("{e}"))?;
    let n: usize = n.trim().parse().map_err(|e| format!("{e}"))?;
    if m == 0 || n == 0 {
        return Err("dimensions must be positive".into());
    }
    Ok((m, n))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap would exit with 2, which is reserved for an indistinguishable verdict
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR } else { 0 });
        }
    };
    let result = match &cli.command {
        Command::Analyze(a) => commands::analyze(a),
        Command::Quantumness(a) => commands::quantumness(a),
        Command::Curve(a) => commands::curve(a),
        Command::Oracle(a) => commands::oracle(a),
        Command::Examples(a) => commands::examples(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
