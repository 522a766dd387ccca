use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("degree error: {0}")]
    Degree(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A check that cannot fail unless a verifier is wrong did fail.
    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("condition {condition} violated: {detail}")]
    Violation { condition: String, detail: String },

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn shape(msg: impl Into<String>) -> Error {
    Error::Shape(msg.into())
}
