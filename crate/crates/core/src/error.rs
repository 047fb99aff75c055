use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("size mismatch: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("invalid generator set: {0}")]
    InvalidGenerator(String),
    #[error("element set is not closed under the generators: {0}")]
    Closure(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("outside the operation's domain: {0}")]
    Domain(String),
    #[error("vertex index {index} out of range for {len} vertices")]
    Index { index: usize, len: usize },
    #[error("terminal sets are adjacent or overlapping; no separator exists")]
    Inseparable,
    #[error("graph is complete; no non-adjacent pair")]
    NoNonAdjacentPair,
    #[error("witness failed validation: {0}")]
    WitnessInvalid(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
