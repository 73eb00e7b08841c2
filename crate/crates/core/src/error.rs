use thiserror::Error;

/// Errors raised by the library.
///
/// The variants map onto the CLI exit codes: `Resource` is a refusal to run
/// past a configured work bound, `Usage` a bad argument, and the rest are
/// verification or consistency failures.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("work bound exceeded: {what} (limit {limit})")]
    Resource { what: String, limit: u64 },

    #[error("usage error: {0}")]
    Usage(String),

    #[error("not an SL2 character: {0}")]
    NotACharacter(String),

    #[error("polynomial is not symmetric: {0}")]
    NotSymmetric(String),

    #[error("expansion is not Schur-positive: {0}")]
    NotSchurPositive(String),

    #[error("truncation did not stabilise: {0}")]
    Instability(String),

    #[error("internal inconsistency: {0}")]
    Inconsistency(String),

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn resource(what: impl Into<String>, limit: u64) -> Self {
        Error::Resource {
            what: what.into(),
            limit,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
