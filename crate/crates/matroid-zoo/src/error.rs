use matroid_core::MatroidError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZooError {
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error("{what} {id} is out of range (limit {limit})")]
    OutOfRange { what: &'static str, id: usize, limit: usize },
    #[error("sets {first:?} and {second:?} are neither nested nor disjoint")]
    NotLaminar { first: Vec<usize>, second: Vec<usize> },
    #[error("set {0:?} is listed twice")]
    DuplicateSet(Vec<usize>),
    #[error("set {0:?} is empty or repeats an element")]
    MalformedSet(Vec<usize>),
    #[error("capacity of {0:?} must be positive")]
    ZeroCapacity(Vec<usize>),
    #[error("{what}: expected {expected}, got {got}")]
    CountMismatch { what: &'static str, expected: usize, got: usize },
    #[error("terminal vertex {0} is not reachable from the sources")]
    Unreachable(usize),
    #[error("vertex {0} is used as a terminal twice")]
    RepeatedTerminal(usize),
    #[error("field size {0} is not a prime")]
    NotPrime(u64),
    #[error("column {column} has {nonzeros} nonzero entries, more than k = {k}")]
    ColumnTooDense { column: usize, nonzeros: usize, k: usize },
    #[error("set {0:?} is dependent")]
    Dependent(Vec<usize>),
    #[error("edge set contains a cycle through edge {0}")]
    Cyclic(usize),
    #[error("{what} has {size} items, above the supported limit of {limit}")]
    TooLarge { what: &'static str, size: usize, limit: usize },
    #[error("{0}")]
    Invalid(String),
    #[error("internal invariant violated: {0}")]
    Internal(&'static str),
}
