use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatroidError {
    #[error("element id {id} is out of range for a ground set of size {n}")]
    OutOfRange { id: usize, n: usize },
    #[error("element id {0} appears twice")]
    Duplicate(usize),
    #[error("ranking is not a permutation of 0..{0}")]
    NotPermutation(usize),
    #[error("size {size} exceeds the exhaustive limit of {limit}")]
    TooLarge { size: usize, limit: usize },
    #[error("weights increase between rank positions {0} and {next}", next = .0 + 1)]
    IncompatibleWeights(usize),
    #[error("expected {expected} weights, got {got}")]
    WeightCount { expected: usize, got: usize },
}
