//! Error type and exit-code policy of the `dimer` binary.

use thiserror::Error;

/// Failures a command can report.
///
/// The process exit code is derived from the variant: `Usage` exits with 2,
/// everything else with 1. Success is 0 only when every cross-check the
/// invocation requested agrees.
#[derive(Debug, Error)]
pub enum CliError {
    /// The request itself is invalid: bad dimension parity, a size guard
    /// exceeded, or a flag combination that has no meaning.
    #[error("{0}")]
    Usage(String),

    /// The computation ran but a cross-check disagreed or an expected
    /// outcome was not observed.
    #[error("verification failed: {0}")]
    Verification(String),

    /// The rendered report could not be written to the requested sink.
    #[error("cannot write output: {0}")]
    Io(String),
}

impl CliError {
    /// Process exit code for this failure.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Verification(_) | CliError::Io(_) => 1,
        }
    }

    /// Convenience constructor for usage errors.
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    /// Convenience constructor for verification failures.
    pub fn verification(msg: impl Into<String>) -> Self {
        CliError::Verification(msg.into())
    }
}

/// Maps a library error to a usage error (the input asked for something the
/// library's domain or size guards refuse).
pub fn usage_err(e: impl std::fmt::Display) -> CliError {
    CliError::Usage(e.to_string())
}

/// Maps a library error to a verification failure (the input was fine but the
/// computation could not vouch for its result).
pub fn verification_err(e: impl std::fmt::Display) -> CliError {
    CliError::Verification(e.to_string())
}
