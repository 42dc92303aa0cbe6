use std::path::Path;

use dec_core::DecError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable file, malformed JSON, bad scalar or key syntax. Exit code 1.
    #[error("{source_name}: {message}")]
    Parse { source_name: String, message: String },
    /// Well-formed input that is inconsistent. Exit code 2.
    #[error("{0}")]
    Validation(String),
}

impl CliError {
    pub fn parse(source: &Path, message: impl ToString) -> Self {
        CliError::Parse { source_name: source.display().to_string(), message: message.to_string() }
    }

    pub fn validation(message: impl ToString) -> Self {
        CliError::Validation(message.to_string())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse { .. } => 1,
            CliError::Validation(_) => 2,
        }
    }
}

impl From<DecError> for CliError {
    fn from(e: DecError) -> Self {
        CliError::Validation(e.to_string())
    }
}
