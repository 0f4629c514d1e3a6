//! `ekalg`: charts and checks for free E_k-algebra homology over F_p.
//!
//! Exit status is 0 when every check passes, 1 when a check fails and 2 on
//! bad arguments.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use ekalg::fpgraded::Prime;

#[derive(Debug, Parser)]
#[command(name = "ekalg", version, about = "Exact F_p computations for free E_k-algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dimension table of the E1-term.
    MayChart(MayChartArgs),
    /// Quotients of the odd-primary dual Steenrod algebra.
    Steenrod(SteenrodArgs),
    /// Exactness of the Koszul resolution over a tensor algebra.
    Koszul(KoszulArgs),
    /// Closed-form bidegrees against operation words.
    Crosscheck(CrosscheckArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Debug, clap::Args)]
struct MayChartArgs {
    #[arg(long, value_parser = parse_prime)]
    prime: Prime,
    #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
    tmax: i64,
    #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
    fmax: Option<i64>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SteenrodCheck {
    Iso,
    Free,
    Tor,
    All,
}

#[derive(Debug, clap::Args)]
struct SteenrodArgs {
    #[arg(long, value_parser = parse_prime)]
    prime: Prime,
    #[arg(long)]
    n: u32,
    #[arg(long)]
    conjugated: bool,
    #[arg(long, value_parser = clap::value_parser!(i64).range(0..))]
    dmax: i64,
    #[arg(long, default_value_t = 3)]
    smax: usize,
    #[arg(long, value_enum)]
    check: SteenrodCheck,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ModuleKind {
    Trivial,
    Free,
    Random(u64),
}

#[derive(Debug, clap::Args)]
struct KoszulArgs {
    #[arg(long, value_parser = parse_prime)]
    prime: Prime,
    /// Comma-separated degrees of a basis of V.
    #[arg(long, value_delimiter = ',', required = true)]
    vdegrees: Vec<u32>,
    /// trivial, free or random:SEED
    #[arg(long, value_parser = parse_module)]
    module: ModuleKind,
    #[arg(long)]
    dmax: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, clap::Args)]
struct CrosscheckArgs {
    #[arg(long, value_parser = parse_prime)]
    prime: Prime,
    #[arg(long, value_parser = clap::value_parser!(i64).range(0..=30))]
    imax: i64,
    #[arg(long, value_parser = clap::value_parser!(i64).range(0..=30))]
    jmax: i64,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_prime(s: &str) -> Result<Prime, String> {
    let n: u64 = s.parse().map_err(|e| format!("{e}"))?;
    Prime::new(n).map_err(|e| e.to_string())
}

fn parse_module(s: &str) -> Result<ModuleKind, String> {
    match s {
        "trivial" => Ok(ModuleKind::Trivial),
        "free" => Ok(ModuleKind::Free),
        _ => match s.strip_prefix("random:") {
            Some(seed) => seed
                .parse()
                .map(ModuleKind::Random)
                .map_err(|e| format!("bad seed `{seed}`: {e}")),
            None => Err(format!("expected trivial, free or random:SEED, got `{s}`")),
        },
    }
}

/// A command that could not run: bad parameters or an unwritable output.
#[derive(Debug)]
struct Failure(String);

impl From<ekalg::Error> for Failure {
    fn from(e: ekalg::Error) -> Self {
        Failure(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::MayChart(args) => commands::may_chart(&args),
        Command::Steenrod(args) => commands::steenrod(&args),
        Command::Koszul(args) => commands::koszul(&args),
        Command::Crosscheck(args) => commands::crosscheck(&args),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
