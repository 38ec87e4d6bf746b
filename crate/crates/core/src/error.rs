use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("malformed rational {0:?}")]
    MalformedRational(String),

    #[error("catalog error at {path}: {message}")]
    Catalog { path: String, message: String },

    #[error("unknown {kind} {name:?}")]
    Unknown { kind: &'static str, name: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
