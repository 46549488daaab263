use thiserror::Error;

/// Every failure mode of the library. The CLI maps all of these to exit code 2.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum HerglotzError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("pole at {0}")]
    Pole(String),
    #[error("series diverges: {0}")]
    Divergent(String),
    #[error("no convergence: {0}")]
    NonConvergence(String),
    #[error("theorem gate violated: {0}")]
    Gate(String),
    #[error("configuration error: {0}")]
    Config(String),
}

pub type Result<T> = std::result::Result<T, HerglotzError>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(HerglotzError::Domain(msg.into()))
}

pub(crate) fn gate<T>(msg: impl Into<String>) -> Result<T> {
    Err(HerglotzError::Gate(msg.into()))
}
