//! Command-line surface of circdom: report emission, audits and the timing
//! sweep. The binary in `main.rs` is a thin wrapper around [`run`].

pub mod args;
pub mod commands;
pub mod output;
pub mod schema;

use std::fmt;

pub use args::Cli;

/// Exit statuses.
pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_HYPOTHESIS: i32 = 2;
/// A construction ran but its output failed verification.
pub const EXIT_UNVERIFIED: i32 = 3;

#[derive(Debug)]
pub enum CliError {
    Core(circdom_core::Error),
    Other(anyhow::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(circdom_core::Error::HypothesisNotMet(_)) => EXIT_HYPOTHESIS,
            _ => EXIT_INPUT,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Other(e) => write!(f, "{e:#}"),
        }
    }
}

impl From<circdom_core::Error> for CliError {
    fn from(e: circdom_core::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<anyhow::Error> for CliError {
    fn from(e: anyhow::Error) -> Self {
        CliError::Other(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Other(e.into())
    }
}

/// Runs a parsed command line and returns the exit status.
pub fn run(cli: Cli) -> Result<i32, CliError> {
    use args::Command::*;
    match cli.command {
        Construct(a) => commands::construct::run(&a),
        Audit(a) => commands::audit::run(&a),
        Bench(a) => commands::bench::run(&a),
        Gamma(a) => commands::gamma::run(&a),
    }
}
