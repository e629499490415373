use std::io;

use fockcanon_core::Error as CoreError;

/// Everything the front end can fail with, each mapped to an exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("verification failed: {0} failing check(s)")]
    Verification(usize),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
    #[error("malformed document: {0}")]
    Format(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(
                CoreError::Argument(_) | CoreError::Parse(_) | CoreError::NotKleshchev(_),
            ) => 2,
            CliError::Core(CoreError::Convention(_) | CoreError::Consistency(_)) => 3,
            CliError::Verification(_) => 1,
            CliError::Io(_) | CliError::Format(_) => 4,
        }
    }
}

impl From<serde_json::Error> for CliError {
    fn from(err: serde_json::Error) -> Self {
        CliError::Format(err.to_string())
    }
}

impl From<csv::Error> for CliError {
    fn from(err: csv::Error) -> Self {
        CliError::Format(err.to_string())
    }
}
