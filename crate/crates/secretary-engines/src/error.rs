use matroid_zoo::ZooError;

#[derive(Debug, thiserror::Error)]
pub enum EngineError {
    #[error("parameter out of range: {0}")]
    Domain(String),
    /// A witness could not be built for a set the engine believed independent.
    #[error("instance invariant violated: {0}")]
    Instance(#[from] ZooError),
    #[error("engine {engine} does not run on {family}")]
    Unsupported { engine: String, family: String },
}
