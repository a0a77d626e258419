use thiserror::Error;

/// Errors raised by the group, coset and 2-adic routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Text or data that does not describe a valid object.
    #[error("malformed input at position {position}: {message}")]
    Malformed { position: usize, message: String },

    /// Two permutations whose degrees cannot be reconciled.
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    /// An enumeration would grow past the configured order cap.
    #[error("resource cap exceeded: {what} exceeds cap {cap}")]
    CapExceeded { what: String, cap: usize },

    /// A documented precondition of the operation does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),

    /// A permutation was expected to lie in a group but does not.
    #[error("{0} is not an element of the group")]
    NotInGroup(String),
}

impl Error {
    pub(crate) fn malformed(position: usize, message: impl Into<String>) -> Self {
        Error::Malformed {
            position,
            message: message.into(),
        }
    }

    pub(crate) fn precondition(message: impl Into<String>) -> Self {
        Error::Precondition(message.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
