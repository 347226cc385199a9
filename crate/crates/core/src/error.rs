use thiserror::Error;

/// Malformed textual input (rationals, polynomials, elements).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error: {msg}")]
pub struct ParseError {
    pub msg: String,
}

impl ParseError {
    pub fn new(msg: impl Into<String>) -> Self {
        ParseError { msg: msg.into() }
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("invalid rewrite system: {0}")]
    System(String),
    #[error("resource budget exceeded: {0}")]
    Budget(String),
    #[error("group generation exceeded {0} elements")]
    GroupTooLarge(usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn usage<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Usage(msg.into()))
}
