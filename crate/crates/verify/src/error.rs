//! Failures of the verification front end and their exit codes.

use humbert_core::Error as CoreError;

use crate::oracle::OracleError;

/// Process exit codes.
pub const EXIT_OK: i32 = 0;
pub const EXIT_ACCEPTANCE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_DOMAIN: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("usage: {0}")]
    Usage(String),
    #[error("{}: {}", .0.name(), .0)]
    Domain(#[from] CoreError),
    #[error("{}: {context}: {source}", .source.name())]
    Evaluator { context: String, source: CoreError },
    #[error("oracle failure: {0}")]
    Oracle(#[from] OracleError),
    #[error("acceptance failure: {0}")]
    Acceptance(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl VerifyError {
    pub fn exit_code(&self) -> i32 {
        match self {
            VerifyError::Usage(_) => EXIT_USAGE,
            VerifyError::Domain(_) | VerifyError::Evaluator { .. } | VerifyError::Oracle(_) => EXIT_DOMAIN,
            VerifyError::Acceptance(_) | VerifyError::Io(_) => EXIT_ACCEPTANCE,
        }
    }
}

pub type VerifyResult<T> = std::result::Result<T, VerifyError>;
