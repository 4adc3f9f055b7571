use thiserror::Error;

/// Errors raised by the decision procedures and constructions of this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("invalid group presentation: {0}")]
    InvalidGroup(String),
    #[error("invalid class set: {0}")]
    InvalidClassSet(String),
    #[error("infinite group admits no a priori atom length bound")]
    InfiniteGroupNoBound,
    #[error("sequence is not zero-sum")]
    NotZeroSum,
    #[error("sequence is not an atom of the given atom set")]
    AtomNotInSet,
    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },
    #[error("invalid Krull specification: {0}")]
    InvalidSpec(String),
    #[error("invalid numerical monoid: {0}")]
    InvalidMonoid(String),
    #[error("{value} is not an element of the monoid")]
    NotMember { value: u64 },
    #[error("{value} is not an atom of the monoid")]
    NotAtom { value: u64 },
    #[error("no witness exists: {0}")]
    NoWitness(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial is not integer-valued")]
    NotIntegerValued,
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("invalid quadratic ring: {0}")]
    InvalidRing(String),
    #[error("element is zero or a unit")]
    ZeroOrUnit,
    #[error("division by zero")]
    ZeroDivisor,
    #[error("element is not irreducible")]
    NotIrreducible,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
