use thiserror::Error;
use weyl_core::WeylError;

/// Errors raised by algebra construction, arithmetic, and serialization.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum SchurError {
    /// Two values from different algebra contexts were combined.
    #[error("context mismatch: {0}")]
    ContextMismatch(String),

    /// Invalid context parameters (n, r, or field modulus).
    #[error("invalid context: {0}")]
    InvalidContext(String),

    /// A tuple entry left the allowed value range.
    #[error("entry {value} out of range 1..={n}")]
    OutOfRange { value: i64, n: i64 },

    /// A precondition on an operation's arguments failed.
    #[error("domain error: {0}")]
    Domain(String),

    /// Expression text failed to parse; `pos` is a byte offset.
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    /// A JSON document does not match the element schema.
    #[error("invalid JSON element: {0}")]
    Json(String),

    /// A coefficient literal cannot be interpreted in the field.
    #[error("invalid coefficient: {0}")]
    InvalidCoefficient(String),

    /// A recursion whose termination is theorem-backed failed to make
    /// progress — an implementation bug, not a mathematical case.
    #[error("non-termination guard triggered: {0}")]
    NonTermination(String),

    /// Propagated group/coset failure (rank mismatch, enumeration bound…).
    #[error(transparent)]
    Group(#[from] WeylError),
}
