use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("series for {what} did not converge after {terms} terms")]
    NonConvergence { what: &'static str, terms: usize },

    #[error("quadrature failure: {0}")]
    QuadratureFailure(String),

    #[error("contour inversion failure: {0}")]
    ContourFailure(String),

    #[error("Mellin strip violation: {0}")]
    StripViolation(String),

    #[error("unknown check name: {0}")]
    UnknownCheckName(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
