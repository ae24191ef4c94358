//! `qhook` command line: hook-count tables, the verification suite, and
//! named series dumps.
//!
//! Exit status: 0 when everything passed, 1 when a mathematical
//! counterexample or mismatch was found, 2 on usage or configuration errors.

mod output;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use qhook::identities;
use qhook::partitions::{HookCountTable, DEFAULT_ORACLE_CEILING};
use qhook::verify::{self, genfun_for, CheckId, VerifyConfig, DEFAULT_INJECTION_CEILING, DEFAULT_SERIES_N_MAX};

use crate::output::{Format, TableRow};

#[derive(Debug, Parser)]
#[command(
    name = "qhook",
    version,
    about = "Hook-length statistics of t-regular partitions, verified exactly"
)]
struct Cli {
    /// Accepted for scripting; every run is already deterministic.
    #[arg(long, global = true)]
    seedless: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Tabulate b_{t,k}(n) for 0 <= n <= n-max.
    Table(TableArgs),
    /// Run verification checks.
    Verify(VerifyArgs),
    /// Print the coefficients of a named series.
    Series(SeriesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Source {
    Oracle,
    Genfun,
    Both,
}

#[derive(Debug, Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long)]
    t: u32,
    #[arg(long)]
    k: u32,
    /// Defaults to 45 (the oracle ceiling).
    #[arg(long, env = "QHOOK_N_MAX")]
    n_max: Option<usize>,
    #[arg(long, value_enum, default_value_t = Source::Oracle)]
    source: Source,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// A single check by name.
    #[arg(long, conflicts_with = "all", required_unless_present = "all")]
    check: Option<String>,
    /// Every check in the catalog.
    #[arg(long)]
    all: bool,
    /// Truncation order for series checks. Defaults to 500.
    #[arg(long, env = "QHOOK_N_MAX")]
    n_max: Option<usize>,
    /// Largest n for brute-force enumeration.
    #[arg(long, default_value_t = DEFAULT_ORACLE_CEILING)]
    oracle_ceiling: usize,
    /// Largest n for the exhaustive injection check.
    #[arg(long, default_value_t = DEFAULT_INJECTION_CEILING)]
    injection_ceiling: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug, Args)]
struct SeriesArgs {
    #[arg(long)]
    name: String,
    #[arg(long)]
    trunc: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Debug)]
enum Failure {
    /// Exit 1.
    Counterexample,
    /// Exit 2.
    Usage(String),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(format!("i/o error: {e}"))
    }
}

fn open_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => {
            Box::new(BufWriter::new(File::create(p).map_err(|e| {
                Failure::Usage(format!("cannot create {}: {e}", p.display()))
            })?))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

const ORACLE_COST_WARNING: &str = "warning: brute-force enumeration above n = 45 grows roughly 4-5% per step";

fn cmd_table(args: TableArgs) -> Result<(), Failure> {
    if args.t < 2 {
        return Err(Failure::Usage("--t must be at least 2".into()));
    }
    if args.k < 1 {
        return Err(Failure::Usage("--k must be at least 1".into()));
    }
    let n_max = args.n_max.unwrap_or(DEFAULT_ORACLE_CEILING);
    let genfun = match args.source {
        Source::Oracle => None,
        Source::Genfun | Source::Both => Some(genfun_for(args.t, args.k, n_max).ok_or_else(|| {
            Failure::Usage(format!(
                "no generating function for (t, k) = ({}, {}); available: (2,1), (2,2), (3,2)",
                args.t, args.k
            ))
        })?),
    };
    let oracle = match args.source {
        Source::Genfun => None,
        Source::Oracle | Source::Both => {
            if n_max > DEFAULT_ORACLE_CEILING {
                eprintln!("{ORACLE_COST_WARNING}");
            }
            Some(HookCountTable::brute(args.t, args.k, n_max))
        }
    };
    let rows: Vec<TableRow> = (0..=n_max)
        .map(|n| TableRow {
            n,
            oracle: oracle.as_ref().map(|o| o.values[n].into()),
            genfun: genfun.as_ref().map(|g| g.coeffs()[n].clone()),
        })
        .collect();
    let mismatch = rows.iter().any(|r| r.matches() == Some(false));
    let mut out = open_output(&args.output.out)?;
    output::write_table(&mut out, args.output.format, args.t, args.k, &rows)?;
    out.flush()?;
    if mismatch {
        Err(Failure::Counterexample)
    } else {
        Ok(())
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<(), Failure> {
    let checks: Vec<CheckId> = match &args.check {
        Some(name) => vec![name.parse().map_err(|e: verify::VerifyError| {
            let known: Vec<&str> = CheckId::ALL.iter().map(|c| c.as_str()).collect();
            Failure::Usage(format!("{e}; known checks: {}", known.join(", ")))
        })?],
        None => CheckId::ALL.to_vec(),
    };
    let cfg = VerifyConfig {
        n_max: args.n_max.unwrap_or(DEFAULT_SERIES_N_MAX),
        oracle_ceiling: args.oracle_ceiling,
        injection_ceiling: args.injection_ceiling,
    };
    if cfg.oracle_ceiling > DEFAULT_ORACLE_CEILING {
        eprintln!("{ORACLE_COST_WARNING}");
    }
    let reports = verify::run_checks(&checks, &cfg);
    let mut out = open_output(&args.output.out)?;
    output::write_reports(&mut out, args.output.format, &reports, args.check.is_some())?;
    out.flush()?;
    if reports.iter().all(|r| r.passed) {
        Ok(())
    } else {
        Err(Failure::Counterexample)
    }
}

fn cmd_series(args: SeriesArgs) -> Result<(), Failure> {
    let named = identities::build_by_name(&args.name, args.trunc).map_err(|e| {
        let known: Vec<&str> = identities::Name::ALL.iter().map(|n| n.as_str()).collect();
        Failure::Usage(format!("{e}; known series: {}", known.join(", ")))
    })?;
    let mut out = open_output(&args.output.out)?;
    output::write_series(&mut out, args.output.format, &named)?;
    out.flush()?;
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table(a) => cmd_table(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Series(a) => cmd_series(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Counterexample) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
