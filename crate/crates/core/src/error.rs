use thiserror::Error;

/// Errors raised across the toolkit.
///
/// The variants line up with the CLI exit codes: domain and config errors
/// are usage problems, resource and truncation errors abort a computation
/// that would otherwise have to be cut short.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("truncation: {0}")]
    Truncation(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub fn truncation(msg: impl Into<String>) -> Self {
        Error::Truncation(msg.into())
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
