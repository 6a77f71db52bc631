//! Command-line front end for `oneadic-core`: single-shot reports, parallel
//! sweeps, and the acceptance suite.
//!
//! [`run`] is the whole program minus process I/O, so tests and the
//! acceptance runner can drive it in-process.

use std::ffi::OsString;
use std::time::Instant;

use clap::Parser;

pub mod acceptance;
pub mod args;
pub mod commands;
pub mod report;

use args::Cli;
use report::exact_json;

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const ACCEPTANCE_FAILURE: i32 = 1;
    pub const AMBIGUOUS: i32 = 2;
    pub const INVALID: i32 = 3;
    pub const CAPACITY: i32 = 4;
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn invalid(message: impl Into<String>) -> Self {
        Self {
            code: exit::INVALID,
            message: message.into(),
        }
    }
}

impl From<oneadic_core::Error> for CliError {
    fn from(e: oneadic_core::Error) -> Self {
        let code = match e {
            oneadic_core::Error::Capacity(_) => exit::CAPACITY,
            _ => exit::INVALID,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Parses `argv` (program name first) and executes it.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: exit::INVALID,
                }
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code: exit::OK,
                }
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    let start = Instant::now();
    match commands::dispatch(cli) {
        Ok((mut report, code)) => {
            report.config = exact_json(cli);
            if cli.global.timing {
                report.timing_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            }
            Outcome {
                stdout: report.render(cli.global.format),
                stderr: String::new(),
                code,
            }
        }
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {}\n", e.message),
            code: e.code,
        },
    }
}
