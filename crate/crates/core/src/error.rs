use thiserror::Error;

/// Errors raised anywhere in the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse rational from {0:?}")]
    ParseRational(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid region: {0}")]
    Region(String),

    #[error("unknown method {0:?}")]
    UnknownMethod(String),

    #[error("malformed table file at line {line}: {reason}")]
    TableFormat { line: usize, reason: String },

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
