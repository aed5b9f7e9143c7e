use thiserror::Error;

/// Errors raised by group and coset computations.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum WeylError {
    /// Two values that must share the ambient rank `r` disagree.
    #[error("rank mismatch: expected length {expected}, got {got}")]
    RankMismatch { expected: usize, got: usize },

    /// An image sequence is not a bijection of `{0, …, r-1}`.
    #[error("not a permutation: {0}")]
    NotAPermutation(String),

    /// A block list is not a set partition of `{0, …, r-1}`.
    #[error("not a set partition: {0}")]
    NotAPartition(String),

    /// `subgroup_index(H, K)` or a coset enumeration was asked for a pair
    /// where `K` does not refine `H`.
    #[error("subgroup is not a refinement of the ambient group")]
    NotARefinement,

    /// The modulus for a shift action must be positive.
    #[error("modulus must be positive, got {0}")]
    NonPositiveModulus(i64),

    /// A stabilizer was requested for an empty list of tuples.
    #[error("stabilizer requires at least one tuple")]
    EmptyStabilizer,

    /// A subgroup is too large to enumerate element-by-element.
    #[error("subgroup order {order} exceeds enumeration bound {bound} (set SCHUR_ENUM_BOUND to raise it)")]
    EnumerationBound { order: u128, bound: u64 },

    /// Tuple arithmetic left the `i64` range.
    #[error("integer overflow in tuple arithmetic")]
    Overflow,
}
