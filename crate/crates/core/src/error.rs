use std::io;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A numeric argument is outside the domain of the operation.
    #[error("`{parameter}` is out of domain: {value} ({reason})")]
    Domain {
        parameter: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("invalid argument: {0}")]
    Argument(String),

    /// The operation only applies to tables of a particular provenance.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A row carries dimensions that make the requested quantity undefined.
    #[error("row {index}: {message}")]
    Data { index: u32, message: String },

    #[error("data integrity: {0}")]
    Integrity(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: u64, message: String },

    #[error(transparent)]
    Io(#[from] io::Error),
}

impl Error {
    pub(crate) fn domain(parameter: &'static str, value: f64, reason: &'static str) -> Self {
        Error::Domain {
            parameter,
            value,
            reason,
        }
    }

    pub(crate) fn parse(line: u64, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
