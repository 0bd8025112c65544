use thiserror::Error;

/// Errors produced by the ideal and polynomial operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {left} variables vs {right} variables")]
    RingMismatch { left: usize, right: usize },

    #[error("operation undefined for the unit monomial")]
    UnitMonomial,

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("{0} is not expandable")]
    NotExpandable(String),

    #[error("{0} is not contractible")]
    NotContractible(String),

    #[error("not a Hilbert polynomial of a graded quotient: {0}")]
    NotHilbertPolynomial(String),

    #[error("Hilbert polynomial of degree {degree} exceeds the ring with {num_vars} variables")]
    DimensionExceedsRing { degree: usize, num_vars: usize },

    #[error(
        "ring with {num_vars} variables is too small for a Hilbert polynomial of degree {degree}"
    )]
    RingTooSmall { degree: usize, num_vars: usize },

    #[error("invalid series numerator: {0}")]
    InvalidNumerator(String),

    #[error("not strongly stable: {0}")]
    NotStronglyStable(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency fault: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
