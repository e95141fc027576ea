mod args;
mod commands;
mod output;

use std::fmt;
use std::process::ExitCode;

use clap::Parser;
use ratext_core::Error;

use args::{Cli, Command};

/// Exit codes: 1 verification failure, 2 invalid input or unsupported case,
/// 3 singular extension, 4 no extra state, 5 numerical failure, 6 I/O error.
#[derive(Debug)]
pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self { code: 2, message: message.into() }
    }

    pub fn io(e: impl fmt::Display) -> Self {
        Self { code: 6, message: format!("i/o error: {e}") }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::InvalidParameter(_)
            | Error::Domain { .. }
            | Error::SingularEnergy { .. }
            | Error::NoSuchBoundState { .. }
            | Error::Unsupported(_)
            | Error::InvalidGrid(_)
            | Error::CountExceedsResolvable { .. } => 2,
            Error::Regularity { .. } => 3,
            Error::NoExtraState => 4,
            _ => 5,
        };
        let message = match &e {
            Error::Regularity { branch, .. } => format!("{e} (KLH branch {branch})"),
            _ => e.to_string(),
        };
        Self { code, message }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Extend(case) => commands::extend(&case),
        Command::Spectrum(case) => commands::spectrum(&case),
        Command::Eigenstate { case, level } => commands::eigenstate(&case, &level),
        Command::Verify { case, matrix } => commands::verify(&case, matrix),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
