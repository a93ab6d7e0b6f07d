//! Command-line front end: `compute`, `verify` and `scan`.
//!
//! Exit codes: 0 success, 1 a checked property failed, 2 usage or I/O error.

pub mod compute;
pub mod scan;
pub mod verify;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use crate::dompoly::Family;
pub use compute::{compute, ComputeOutput, Method};
pub use scan::{run_scan, write_rows, OutputFormat, ScanConfig, ScanRow, ScanSummary};
pub use verify::{run_suite, Bounds, Suite, SuiteReport};

pub const EXIT_FAILED_CHECK: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

/// Grid bound used when `scan` is given no explicit bounds.
pub const DEFAULT_SCAN_BOUND: usize = 150;
/// Grid bound selected by `scan --full`.
pub const FULL_SCAN_BOUND: usize = 500;

#[derive(Debug, Parser)]
#[command(
    name = "dompow",
    version,
    about = "Domination polynomials of powers of paths and cycles"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print one domination polynomial as JSON.
    Compute {
        #[arg(long)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long, value_enum, default_value = "A")]
        method: Method,
    },
    /// Run a validation suite; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        ell_max: Option<usize>,
    },
    /// Shape checks for every (n, ell) in a grid, one row per polynomial.
    Scan {
        #[arg(long, value_enum)]
        family: ScanFamily,
        #[arg(long)]
        n_max: Option<usize>,
        #[arg(long)]
        ell_max: Option<usize>,
        /// Use the 500 x 500 grid instead of the default 150 x 150.
        #[arg(long)]
        full: bool,
        /// Output file; rows go to stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: OutputFormat,
        /// Worker threads (defaults to the number of CPUs).
        #[arg(long)]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Path,
    Cycle,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::Path => Family::Path,
            FamilyArg::Cycle => Family::Cycle,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ScanFamily {
    Path,
    Cycle,
    Both,
}

impl ScanFamily {
    pub fn families(self) -> Vec<Family> {
        match self {
            ScanFamily::Path => vec![Family::Path],
            ScanFamily::Cycle => vec![Family::Cycle],
            ScanFamily::Both => Family::ALL.to_vec(),
        }
    }
}

pub fn run(cli: Cli) -> ExitCode {
    match cli.command {
        Command::Compute {
            family,
            n,
            ell,
            method,
        } => match compute(family.into(), n, ell, method) {
            Ok(out) => {
                println!(
                    "{}",
                    serde_json::to_string(&out).expect("plain data serializes")
                );
                ExitCode::SUCCESS
            }
            Err(msg) => usage_error(&msg),
        },
        Command::Verify {
            suite,
            n_max,
            ell_max,
        } => {
            let bounds = Bounds { n_max, ell_max };
            match run_suite(suite, bounds) {
                Ok(report) => {
                    print!("{report}");
                    if report.passed() {
                        ExitCode::SUCCESS
                    } else {
                        ExitCode::from(EXIT_FAILED_CHECK)
                    }
                }
                Err(msg) => usage_error(&msg),
            }
        }
        Command::Scan {
            family,
            n_max,
            ell_max,
            full,
            out,
            format,
            jobs,
        } => {
            let bound = if full {
                FULL_SCAN_BOUND
            } else {
                DEFAULT_SCAN_BOUND
            };
            let config = ScanConfig {
                families: family.families(),
                n_max: n_max.unwrap_or(bound),
                ell_max: ell_max.unwrap_or(bound),
                jobs,
            };
            if config.n_max == 0 || config.ell_max == 0 {
                return usage_error("--n-max and --ell-max must be at least 1");
            }
            let rows = match run_scan(&config) {
                Ok(rows) => rows,
                Err(msg) => return usage_error(&msg),
            };
            let written = match &out {
                Some(path) => File::create(path).and_then(|f| {
                    let mut w = BufWriter::new(f);
                    write_rows(&rows, format, &mut w)?;
                    w.flush()
                }),
                None => {
                    let stdout = io::stdout();
                    let mut w = BufWriter::new(stdout.lock());
                    write_rows(&rows, format, &mut w).and_then(|()| w.flush())
                }
            };
            if let Err(e) = written {
                eprintln!("error: writing scan output: {e}");
                return ExitCode::from(EXIT_USAGE);
            }
            let summary = ScanSummary::of(&rows);
            eprintln!("{summary}");
            if summary.violations == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAILED_CHECK)
            }
        }
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}
