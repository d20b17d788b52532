//! `fracdiff`: evaluate fractional special functions, solve cataloged
//! anomalous-diffusion problems, run the verification suite and emit the
//! curve data for the reference figures.
//!
//! Exit codes: 0 success, 1 failed verification check, 2 invalid input,
//! 3 numerical failure.

// `!(a < b)` is used deliberately so that NaN fails validation
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod commands;
mod error;
mod grid;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::commands::{eval::EvalArgs, figure::FigureArgs, solve::SolveArgs, verify::VerifyArgs};
use crate::error::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "fracdiff",
    version,
    about = "Fractional special functions and anomalous-diffusion solutions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a special function on a grid; CSV x,value,err_estimate,method.
    Eval(EvalArgs),
    /// Solve a cataloged problem on an x grid at given times; CSV x,t,c.
    Solve(SolveArgs),
    /// Run verification checks and optionally write a JSON report.
    Verify(VerifyArgs),
    /// Emit the curve data of a reference figure as CSV.
    Figure(FigureArgs),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Eval(a) => commands::eval::run(&a),
        Command::Solve(a) => commands::solve::run(&a),
        Command::Verify(a) => commands::verify::run(&a),
        Command::Figure(a) => commands::figure::run(&a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("fracdiff: {e}");
            e.exit_code()
        }
    }
}
