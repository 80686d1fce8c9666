use layered_msp::LayeredError;
use matroid_core::MatroidError;
use matroid_zoo::ZooError;
use secretary_engines::EngineError;

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("engine {engine} does not run on {family} instances: {why}")]
    Mismatch { engine: &'static str, family: &'static str, why: String },
    #[error("invalid plan: {0}")]
    Plan(String),
    #[error("invalid generator parameters: {0}")]
    Generator(String),
    #[error("{size} elements exceed the exhaustive limit {limit}")]
    TooLarge { size: usize, limit: usize },
    /// An engine returned a set that breaks a structural promise.
    #[error("invariant violated in trial {trial}: {what}")]
    Invariant { trial: u64, what: String },
    #[error(transparent)]
    Engine(#[from] EngineError),
    #[error(transparent)]
    Layered(#[from] LayeredError),
    #[error(transparent)]
    Instance(#[from] ZooError),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}
