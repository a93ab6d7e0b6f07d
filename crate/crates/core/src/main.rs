use std::process::ExitCode;

use clap::Parser;
use dompow::cli::{run, Cli};

fn main() -> ExitCode {
    run(Cli::parse())
}
