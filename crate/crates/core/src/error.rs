use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A numeric parameter is outside the range the construction is defined on.
    #[error("invalid parameter: {0}")]
    Parameter(String),
    /// A precondition on a word or rational argument does not hold.
    #[error("domain error: {0}")]
    Domain(String),
    #[error("arithmetic overflow: {0}")]
    Overflow(String),
    /// The requested word would exceed the configured length cap.
    #[error("size limit exceeded: {what} needs {needed} symbols, cap is {cap}")]
    Size { what: String, needed: u64, cap: u64 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("config error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn overflow(what: impl Into<String>) -> Error {
    Error::Overflow(what.into())
}
