use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument is outside the domain of the operation.
    #[error("parameter error: {0}")]
    Parameter(String),
    /// A brute-force routine was asked to run beyond its resource bound.
    #[error("resource bound exceeded: {0}")]
    Resource(String),
    /// Two routes that must agree did not. Never expected in practice.
    #[error("internal consistency error: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
