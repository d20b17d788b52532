use std::process::ExitCode;

use fracdiff_core::Error as CoreError;
use thiserror::Error;

/// Failures of a command, each tied to one process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Some verification check failed (exit 1).
    #[error("{0}")]
    ChecksFailed(String),
    /// Bad flags, ranges or names (exit 2).
    #[error("invalid input: {0}")]
    Invalid(String),
    /// A series, quadrature or contour evaluation failed (exit 3).
    #[error("numerical failure in {context}: {source}")]
    Numerical { context: String, source: CoreError },
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn invalid(msg: impl Into<String>) -> Self {
        CliError::Invalid(msg.into())
    }

    /// Sorts a library error into invalid input or numerical failure.
    pub fn from_core(context: impl Into<String>, e: CoreError) -> Self {
        match e {
            CoreError::Domain(_) | CoreError::UnknownCheckName(_) | CoreError::StripViolation(_) => {
                CliError::Invalid(format!("{}: {e}", context.into()))
            }
            CoreError::NonConvergence { .. } | CoreError::QuadratureFailure(_) | CoreError::ContourFailure(_) => {
                CliError::Numerical {
                    context: context.into(),
                    source: e,
                }
            }
        }
    }

    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::ChecksFailed(_) => 1,
            CliError::Invalid(_) => 2,
            CliError::Numerical { .. } => 3,
            // unwritable output paths are a caller input problem
            CliError::Io(_) => 2,
        })
    }
}

pub type CliResult<T> = Result<T, CliError>;
