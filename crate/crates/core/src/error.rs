use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a permutation of 1..{n}: {values:?}")]
    NotPermutation { n: usize, values: Vec<i64> },
    #[error("not an affine permutation: {0}")]
    NotAffinePermutation(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("affine permutation {0} is not bounded")]
    NotBounded(String),
    #[error("not a k-Bruhat pair: {0}")]
    NotKBruhatPair(String),
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("follow relation violated at step {step}: {detail}")]
    FollowViolated { step: usize, detail: String },
    #[error("{condition} violated at ({i},{j})")]
    RankMatrix { condition: &'static str, i: i64, j: i64 },
    #[error("not a matroid: {0}")]
    NotMatroid(String),
    #[error("matrix has rank {found}, expected {expected}")]
    RankDeficient { found: usize, expected: usize },
    #[error("invalid scalar: {0}")]
    InvalidScalar(String),
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("invalid quantum triple: {0}")]
    InvalidTriple(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant failed: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
