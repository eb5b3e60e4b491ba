//! File formats, reports and verification suites behind the `spinorlab` binary.

pub mod report;
pub mod state_file;
pub mod suites;

use thiserror::Error;

/// Failures of a CLI command, each with a fixed process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable input, bad JSON, bad numbers, wrong arity. Exit code 2.
    #[error("{0}")]
    Parse(String),
    /// Input parsed but does not fit the requested computation. Exit code 3.
    #[error("{0}")]
    Shape(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Shape(_) => 3,
        }
    }
}

impl From<spinorlab::Error> for CliError {
    fn from(e: spinorlab::Error) -> Self {
        match e {
            spinorlab::Error::Invalid(msg) => CliError::Parse(msg),
            other => CliError::Shape(other.to_string()),
        }
    }
}

/// Exit code of a verify run whose suite reported failures.
pub const EXIT_SUITE_FAILED: i32 = 1;
