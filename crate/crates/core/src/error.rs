use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("basis in degree {0} is not finitely enumerated")]
    InfiniteBasis(usize),
    #[error("boundary in degree {degree} leaves the enumerated basis")]
    NotClosed { degree: usize },
    #[error("not reduced: {0}")]
    NotReduced(String),
    #[error("invalid simplicial set: {0}")]
    InvalidSimplicialSet(String),
    #[error("invalid complex: {0}")]
    InvalidComplex(String),
    #[error("expected arity {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("not a permutation: {0:?}")]
    InvalidPermutation(Vec<usize>),
    #[error("negative index {0}")]
    NegativeIndex(i64),
    #[error("level {level} exceeds the supported bound {bound}")]
    TruncationExceeded { level: usize, bound: usize },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invariant failed: {0}")]
    InvariantFailed(String),
    #[error("cochain is not a cocycle")]
    NotACocycle,
}

pub type Result<T> = std::result::Result<T, Error>;
