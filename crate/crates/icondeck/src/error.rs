//! Error type shared by all modules.

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong while validating, constructing, or
/// evaluating finite categorical structures.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A structural invariant of a type failed (bad table, missing
    /// entry, broken law).  Carries a human-readable witness.
    #[error("validation failed: {0}")]
    Invalid(String),

    /// Two cells that must share a boundary do not.
    #[error("boundary mismatch: {0}")]
    Boundary(String),

    /// An enumeration or materialization would exceed the configured
    /// size caps.
    #[error("size cap exceeded: {0}")]
    CapExceeded(String),

    /// Input text could not be parsed into documents.
    #[error("parse error: {0}")]
    Parse(String),

    /// A name used in a document or lookup is not defined.
    #[error("unresolved reference: {0}")]
    Unresolved(String),

    /// The operation is not defined for the supplied data (for example
    /// a checker that requires strictly involutive braiding data).
    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::Invalid(msg.into())
    }
    pub fn boundary(msg: impl Into<String>) -> Self {
        Error::Boundary(msg.into())
    }
    pub fn cap(msg: impl Into<String>) -> Self {
        Error::CapExceeded(msg.into())
    }
    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
    pub fn unresolved(msg: impl Into<String>) -> Self {
        Error::Unresolved(msg.into())
    }
    pub fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
}
