use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// A well-formed input that violates a group or cocycle axiom; the
    /// message cites the first violated identity.
    #[error("verification failed: {0}")]
    Verification(String),

    #[error("unsupported operation: {0}")]
    Unsupported(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("inadmissible (period, index) pair: {0}")]
    Inadmissible(String),

    /// A numerical decomposition failed to separate central blocks; retrying
    /// with a different seed usually resolves it.
    #[error("ill-conditioned decomposition: {0}")]
    IllConditioned(String),

    /// An exact identity that must hold for valid inputs was violated.
    #[error("internal consistency failure: {0}")]
    InternalConsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
