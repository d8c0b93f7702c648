//! Command-line front end: table files in, verdicts, JSON reports and DOT
//! diagrams out.

pub mod commands;
pub mod dot;
pub mod report;
pub mod table;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use commands::{run, CliError, Outcome};

/// Exit statuses.
pub mod exit {
    pub const OK: i32 = 0;
    pub const PROPERTY_FAILURE: i32 = 1;
    pub const INPUT_ERROR: i32 = 2;
    pub const CAP_EXCEEDED: i32 = 3;
}

#[derive(Debug, Parser)]
#[command(
    name = "moufang",
    version,
    about = "Analyze finite commutative Moufang groupoids"
)]
pub struct Cli {
    /// Worker threads for the parallel kernels (default: all cores).
    #[arg(long, global = true)]
    pub jobs: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check identities on a table.
    Check(CheckArgs),
    /// Compute the sigma decomposition into Archimedean components.
    Decompose(DecomposeArgs),
    /// Generate a table of a known family.
    Gen(GenArgs),
    /// Enumerate tables of a given order satisfying identities.
    Enumerate(EnumerateArgs),
    /// Look for the first table matching a named predicate.
    Search(SearchArgs),
    /// Run the full structural property suite on a table.
    Props(PropsArgs),
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    pub path: PathBuf,
    /// Comma-separated identity names.
    #[arg(long, value_delimiter = ',', default_values_t = default_kinds())]
    pub kinds: Vec<String>,
    /// Print a JSON report instead of text.
    #[arg(long)]
    pub json: bool,
}

fn default_kinds() -> Vec<String> {
    [
        "commutative",
        "central-moufang",
        "idempotent",
        "associative",
    ]
    .iter()
    .map(|s| s.to_string())
    .collect()
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    pub path: PathBuf,
    /// Write the JSON report here. Without `--json` or `--dot` it goes to stdout.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Write the quotient's Hasse diagram here.
    #[arg(long)]
    pub dot: Option<PathBuf>,
    /// Run even if the input is not commutative central-Moufang.
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Jordan,
    Chain,
    Zn,
    Product,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub family: Family,
    /// Field characteristic (jordan).
    #[arg(long)]
    pub p: Option<u64>,
    /// Vector dimension (jordan).
    #[arg(long)]
    pub m: Option<u32>,
    /// Order (chain, zn).
    #[arg(long)]
    pub k: Option<usize>,
    /// Left factor table file (product).
    #[arg(long)]
    pub left: Option<PathBuf>,
    /// Right factor table file (product).
    #[arg(long)]
    pub right: Option<PathBuf>,
    /// Output file; stdout when absent.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub order: usize,
    /// Comma-separated identity names.
    #[arg(long, value_delimiter = ',', required = true)]
    pub constraints: Vec<String>,
    /// One representative per isomorphism class.
    #[arg(long)]
    pub iso: bool,
    /// Print only the number of models.
    #[arg(long)]
    pub count_only: bool,
    /// Cross-check against naive generate-and-filter (orders up to 3).
    #[arg(long)]
    pub oracle_check: bool,
    /// Stop after this many models.
    #[arg(long)]
    pub limit: Option<usize>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long)]
    pub order: usize,
    /// Extra comma-separated identity names on top of the predicate's own.
    #[arg(long, value_delimiter = ',')]
    pub constraints: Vec<String>,
    #[arg(long)]
    pub predicate: String,
}

#[derive(Debug, Args)]
pub struct PropsArgs {
    pub path: PathBuf,
    #[arg(long, default_value_t = 3)]
    pub nmax: u32,
    /// Print a JSON report instead of text.
    #[arg(long)]
    pub json: bool,
}
