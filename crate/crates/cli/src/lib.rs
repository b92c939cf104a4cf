//! Command-line front end: `check`, `construct`, `report`, `battery`,
//! `endomorphisms` and `catalog` over `.halg` files.
//!
//! Records go to stdout as one JSON object per line. Exit codes: 0 all
//! pass, 1 some identity fails, 2 parse error, 3 semantic error.

mod commands;
mod record;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand};

pub use record::{Record, WitnessRecord};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_SEMANTIC: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "homalg", version, about = "Exact checks for Hom-algebras, their representations and operators")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Certify a variety, operator, representation or crossed module.
    Check(CheckArgs),
    /// Run a construction and write the result as a new file.
    Construct(ConstructArgs),
    /// Run every applicable certifier over a file or directory.
    Report(ReportArgs),
    /// Compare operator, graph and Nijenhuis characterizations on seeded candidates.
    Battery(BatteryArgs),
    /// Search a coefficient grid for algebra endomorphisms.
    Endomorphisms(EndoArgs),
    /// List or export the seed catalog.
    Catalog(CatalogArgs),
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("spec").required(true).args(["variety", "operator", "rep", "crossed_module"])))]
pub struct CheckArgs {
    pub file: PathBuf,
    /// Algebra to check with --variety; all algebras in the file by default.
    #[arg(long)]
    pub target: Option<String>,
    #[arg(long)]
    pub variety: Option<String>,
    #[arg(long)]
    pub operator: Option<String>,
    /// Operator kind; the operator's declared kinds are used when omitted.
    #[arg(long, requires = "operator")]
    pub kind: Option<String>,
    #[arg(long, requires = "kind", allow_hyphen_values = true)]
    pub weight: Option<String>,
    #[arg(long)]
    pub rep: Option<String>,
    /// `d=NAME`, where NAME is an operator block on an associative action.
    #[arg(long)]
    pub crossed_module: Option<String>,
    /// Check variety identities on this many random samples instead of all basis tuples.
    #[arg(long, requires = "variety")]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Print a human-readable summary to stderr.
    #[arg(long)]
    pub summary: bool,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    pub file: PathBuf,
    /// Construction id, e.g. `hemisemi-diass` or `yau-twist`.
    #[arg(long)]
    pub id: String,
    /// Source algebra, rep or operator; inferred when the file has a single candidate.
    #[arg(long)]
    pub target: Option<String>,
    #[arg(long)]
    pub map: Option<String>,
    #[arg(long)]
    pub rep: Option<String>,
    #[arg(long)]
    pub operator: Option<String>,
    /// Name of the constructed algebra.
    #[arg(long)]
    pub name: Option<String>,
    #[arg(long)]
    pub out: PathBuf,
    /// Skip precondition certification.
    #[arg(long)]
    pub unchecked: bool,
}

#[derive(Args, Debug)]
pub struct ReportArgs {
    /// A `.halg` file or a directory of them.
    pub path: PathBuf,
    #[arg(long)]
    pub summary: bool,
}

#[derive(Args, Debug)]
pub struct BatteryArgs {
    /// One of associative-di, lie-di, jordan-di, associative-tri, lie-tri, jordan-tri; all by default.
    #[arg(long)]
    pub setting: Option<String>,
    #[arg(long, default_value_t = 11)]
    pub seed: u64,
    /// Grid numerators, comma separated.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_values_t = vec![-1, 0, 1])]
    pub grid: Vec<i64>,
    /// Seeded draws per setting.
    #[arg(long, default_value_t = 100)]
    pub samples: usize,
    #[arg(long, default_value_t = 4)]
    pub perturbations: usize,
}

#[derive(Args, Debug)]
pub struct EndoArgs {
    pub file: PathBuf,
    #[arg(long)]
    pub target: Option<String>,
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_values_t = vec![-1, 0, 1])]
    pub grid: Vec<i64>,
    #[arg(long, value_delimiter = ',', default_values_t = vec![1])]
    pub denominators: Vec<i64>,
    /// Only diagonal maps.
    #[arg(long)]
    pub diagonal: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Exhaustive up to this many grid maps, otherwise this many seeded draws.
    #[arg(long, default_value_t = 100_000)]
    pub count: usize,
}

#[derive(Args, Debug)]
pub struct CatalogArgs {
    /// Write one `<id>.halg` file per entry into this directory.
    #[arg(long)]
    pub export: Option<PathBuf>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_PASS };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    commands::dispatch(cli.command, out, err)
}
