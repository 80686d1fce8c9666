use matroid_core::MatroidError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LayeredError {
    #[error(transparent)]
    Matroid(#[from] MatroidError),
    #[error("malformed layered instance: {0}")]
    Malformed(String),
    /// An algorithm returned a dependent set.
    #[error("selection {0:?} is dependent")]
    Dependent(Vec<usize>),
}
