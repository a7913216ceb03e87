use std::io;

use thiserror::Error;

/// Failures surfaced to the shell.
///
/// Anything that cannot be read or parsed exits with 1; well-formed input
/// that violates a mathematical invariant exits with 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Read { path: String, source: io::Error },

    #[error("cannot write {path}: {source}")]
    Write { path: String, source: io::Error },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) => 2,
            _ => 1,
        }
    }

    pub(crate) fn malformed(e: impl std::fmt::Display) -> Self {
        CliError::Malformed(e.to_string())
    }

    pub(crate) fn invalid(e: impl std::fmt::Display) -> Self {
        CliError::Invalid(e.to_string())
    }
}
