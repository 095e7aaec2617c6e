use thiserror::Error;

use zetashift_core::{Error as CoreError, ErrorClass};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Numerical(#[from] CoreError),

    #[error("plot error: profile has no successfully evaluated sample")]
    EmptyProfile,

    #[error("plot error: {0}")]
    Plot(String),

    #[error("record error: {0}")]
    Record(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn config(msg: impl Into<String>) -> Self {
        CliError::Config(msg.into())
    }

    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit status: 2 config, 3 numerical, 4 I/O.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Numerical(_) | CliError::EmptyProfile | CliError::Plot(_) => 3,
            CliError::Io { .. } | CliError::Record(_) => 4,
        }
    }

    /// Machine-readable class reported on stderr.
    pub fn class(&self) -> &'static str {
        match self {
            CliError::Config(_) => "config_error",
            CliError::Numerical(e) => e.class().as_str(),
            CliError::EmptyProfile => "empty_profile",
            CliError::Plot(_) => "plot_error",
            CliError::Record(_) => "record_error",
            CliError::Io { .. } => "io_error",
        }
    }

    pub fn numerical_class(&self) -> Option<ErrorClass> {
        match self {
            CliError::Numerical(e) => Some(e.class()),
            _ => None,
        }
    }
}
