use thiserror::Error;

/// Errors raised by the library.
///
/// `Usage` covers bad input from a caller (wrong type, wrong dimension, an
/// argument outside its documented domain). `Structural` means an algebraic
/// expectation failed on valid input, which points at a bug or at a claim
/// that does not hold.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("usage error: {0}")]
    Usage(String),
    #[error("structural error: {0}")]
    Structural(String),
    #[error("unknown type")]
    UnknownType(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn structural(msg: impl Into<String>) -> Self {
        Error::Structural(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
