use cevian::GeometryError;
use thiserror::Error;

/// Anything that stops a subcommand before it produces a verdict. All of
/// these exit with status 2.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("invalid input: {0}")]
    Input(String),
    #[error("{0}")]
    Guard(GeometryError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        CliError::Io { path: path.display().to_string(), source }
    }
}
