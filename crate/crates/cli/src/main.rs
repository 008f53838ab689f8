//! `positroids`: conversions between the bounded-affine-permutation encodings,
//! enumeration of `Bound(k,n)`, matrix stratification, positroid classes and
//! quantum queries.

mod commands;
mod selftest;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use positroids::Error;
use serde_json::Value;

#[derive(Parser, Debug)]
#[command(name = "positroids", version, about = "Positroid combinatorics on the command line")]
struct Cli {
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Convert one encoding of a bounded affine permutation into all the others.
    Convert(ConvertArgs),
    /// List every element of Bound(k,n).
    Enumerate(ShapeArgs),
    /// Summarize the poset Bound(k,n), or export its covers.
    Poset(PosetArgs),
    /// Locate the row span of a matrix among the positroid strata.
    Stratify(StratifyArgs),
    /// Cohomology class of a positroid variety.
    Class(ClassArgs),
    /// Quantum data of a triple (I, J, d).
    Quantum(QuantumArgs),
    /// Run the exhaustive invariant checks on small Grassmannians.
    Selftest,
}

#[derive(Args, Debug)]
struct ConvertArgs {
    /// Affine window such as "[2,3,5,8]".
    window: Option<String>,
    #[arg(long)]
    siteswap: Option<String>,
    /// Juggling states such as "(14,13,12,12)".
    #[arg(long)]
    necklace: Option<String>,
    /// Cyclic rank matrix rows as JSON, e.g. "[[1,1,1,2,2],...]"; needs --k.
    #[arg(long)]
    rank_matrix: Option<String>,
    /// A k-Bruhat pair u w in one-line notation; needs --k.
    #[arg(long, num_args = 2, value_names = ["U", "W"])]
    pair: Option<Vec<String>>,
    /// Decorated permutation such as "2314/+4".
    #[arg(long)]
    decorated: Option<String>,
    #[arg(long)]
    k: Option<usize>,
    /// Checked against the size of the input when given.
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Args, Debug)]
struct ShapeArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    /// Largest n accepted.
    #[arg(long, default_value_t = positroids::poset::MAX_POSET_N)]
    max_n: usize,
}

#[derive(Args, Debug)]
struct PosetArgs {
    #[command(flatten)]
    shape: ShapeArgs,
    /// Print the Hasse diagram in DOT format.
    #[arg(long)]
    dot: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FieldArg {
    #[value(name = "Q")]
    Q,
    #[value(name = "Fp")]
    Fp,
}

#[derive(Args, Debug)]
struct StratifyArgs {
    /// Matrix file: JSON {k, n, field, p?, entries} or CSV rows.
    file: Option<PathBuf>,
    /// Field for CSV input or random matrices.
    #[arg(long, value_enum, default_value = "Q")]
    field: FieldArg,
    #[arg(long)]
    p: Option<u64>,
    /// Use a seeded random k×n matrix instead of a file.
    #[arg(long, requires_all = ["k", "n"])]
    random: bool,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CheckArg {
    Oracle,
}

#[derive(Args, Debug)]
struct ClassArgs {
    /// Bounded affine window such as "[5,2,7,4]".
    window: String,
    /// Compare against the independent reference computation.
    #[arg(long, value_enum)]
    check: Option<CheckArg>,
}

#[derive(Args, Debug)]
struct QuantumArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    #[arg(long = "I", value_name = "I")]
    i: String,
    #[arg(long = "J", value_name = "J")]
    j: String,
    #[arg(long)]
    d: usize,
    /// Third Schubert condition; adds the Gromov–Witten invariant.
    #[arg(long = "K", value_name = "K")]
    k_set: Option<String>,
    #[arg(long, value_enum)]
    check: Option<CheckArg>,
}

fn run(cli: &Cli) -> positroids::Result<Output> {
    match &cli.command {
        Command::Convert(a) => commands::convert(a),
        Command::Enumerate(a) => commands::enumerate(a),
        Command::Poset(a) => commands::poset(a),
        Command::Stratify(a) => commands::stratify(a),
        Command::Class(a) => commands::class(a),
        Command::Quantum(a) => commands::quantum(a),
        Command::Selftest => selftest::run(),
    }
}

/// A command result: JSON for `--json`, and its plain-text rendering.
pub(crate) struct Output {
    pub(crate) json: Value,
    pub(crate) text: String,
    /// Exit with status 2 after printing.
    pub(crate) failed: bool,
}

impl Output {
    pub(crate) fn new(json: Value, text: String) -> Self {
        Output { json, text, failed: false }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(out) => {
            let body = if cli.json { out.json.to_string() } else { out.text };
            // A closed pipe (e.g. `| head`) is not an error worth reporting.
            let _ = writeln!(io::stdout().lock(), "{body}");
            if out.failed {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Invariant(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
