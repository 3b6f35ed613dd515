//! Command-line front end for the `adoseries` library.

mod args;
mod invariant;
mod output;
mod verify;

use std::process::ExitCode;

use adoseries::Error;
use clap::Parser;

use args::{Cli, Command};

/// Exit status for a library error.
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotAKnot { .. } => 3,
        Error::MismatchBeyondPrecision { .. }
        | Error::CongruenceFailure { .. }
        | Error::OddExponent { .. }
        | Error::OddAlphaExponent(_)
        | Error::NonzeroAlphaSquareCounter(_)
        | Error::DivisionFailed(_)
        | Error::NotAUnit(_) => 4,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Invariant(a) => invariant::run(a).map(|()| true),
        Command::Verify(a) => verify::run(a),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
