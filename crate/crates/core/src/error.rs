use thiserror::Error;

/// Errors raised by the core library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("formula is outside the supported fragment: {0}")]
    OutsideFragment(String),

    #[error("monoid mismatch: {0}")]
    MonoidMismatch(String),

    #[error("invalid value: {0}")]
    InvalidValue(String),

    #[error("malformed automaton: {0}")]
    Malformed(String),

    #[error("automaton is not normalized")]
    NotNormalized,

    #[error("operation not supported: {0}")]
    Unsupported(String),

    #[error("state cap exceeded: {what} needs {needed} states, cap is {cap}")]
    CapExceeded { what: String, needed: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse { pos, msg: msg.into() }
    }
}
