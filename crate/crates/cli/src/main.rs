mod args;
mod commands;
mod fmt;
mod output;

use clap::Parser;
use std::process::ExitCode;

/// Command failures, split by exit-code contract: usage errors exit 2,
/// domain/convergence/I-O errors exit 1.
#[derive(Debug)]
pub enum AppError {
    Usage(String),
    Run(String),
}

impl From<hyp1f1::SpecialError> for AppError {
    fn from(e: hyp1f1::SpecialError) -> Self {
        AppError::Run(e.to_string())
    }
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> Self {
        AppError::Run(format!("i/o failure: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = args::Cli::parse(); // clap handles usage errors with exit 2
    let result = match cli.command {
        args::Command::Eval(a) => commands::cmd_eval(&a),
        args::Command::Table1(a) => commands::cmd_table1(&a),
        args::Command::Deviation(a) => commands::cmd_deviation(&a),
        args::Command::Coulomb(a) => commands::cmd_coulomb(&a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(AppError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(AppError::Run(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
