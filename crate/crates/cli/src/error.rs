use summand_core::Error as CoreError;
use thiserror::Error;

/// Failure classes, one per nonzero exit code.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Cap(String),
    #[error("{0}")]
    CrossCheck(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 1,
            CliError::Cap(_) => 2,
            CliError::CrossCheck(_) => 3,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Input(_) => "input",
            CliError::Cap(_) => "resource-cap",
            CliError::CrossCheck(_) => "cross-check",
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Cap(m) | CliError::CrossCheck(m) => m,
        }
    }

    /// Prefixes the message with context, keeping the class.
    pub fn context(self, prefix: impl std::fmt::Display) -> CliError {
        match self {
            CliError::Input(m) => CliError::Input(format!("{prefix}: {m}")),
            CliError::Cap(m) => CliError::Cap(format!("{prefix}: {m}")),
            CliError::CrossCheck(m) => CliError::CrossCheck(format!("{prefix}: {m}")),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::ResourceCap(_) | CoreError::Cancelled => CliError::Cap(e.to_string()),
            CoreError::CrossCheck(_) => CliError::CrossCheck(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
