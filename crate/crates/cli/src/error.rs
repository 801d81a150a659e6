use std::path::PathBuf;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// A config field failed validation; `path` is the dotted field path.
    #[error("{path}: {message}")]
    Config { path: String, message: String },

    #[error("cannot parse config {file}: {source}")]
    Parse {
        file: PathBuf,
        #[source]
        source: toml::de::Error,
    },

    #[error(transparent)]
    Model(#[from] eit_bragg::Error),

    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("{}: {message}", path.display())]
    Plot { path: PathBuf, message: String },
}

impl CliError {
    pub fn config(path: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Config {
            path: path.into(),
            message: message.into(),
        }
    }

    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    /// 1 for invalid input, 3 for I/O failures.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config { .. } | CliError::Parse { .. } | CliError::Model(_) => 1,
            CliError::Io { .. } | CliError::Plot { .. } => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
