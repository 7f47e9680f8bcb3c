use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = CliError> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error at {path}: {message}")]
    Schema { path: String, message: String },

    #[error("config error: {0}")]
    Config(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("cannot write CSV: {0}")]
    Csv(#[from] csv::Error),

    #[error("cannot write JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Core(#[from] qgwalk_core::Error),
}

impl CliError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    /// 2 for coefficients that are not a state, 3 for numeric failures, 1 otherwise.
    pub fn exit_code(&self) -> u8 {
        use qgwalk_core::Error as E;
        match self {
            CliError::Core(E::NotAState(_)) => 2,
            CliError::Core(E::Ambiguous(_) | E::NotCentral { .. }) => 3,
            _ => 1,
        }
    }
}
