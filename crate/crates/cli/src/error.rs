use thiserror::Error;

use scf_secrecy::{ConfigError, RateError, SimError};

/// Failures surfaced to the user as a one-line reason and an exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Budget(String),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    /// 2 for usage and configuration errors, 3 for exceeded budgets.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Budget(_) => 3,
        }
    }

    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<RateError> for CliError {
    fn from(e: RateError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<SimError> for CliError {
    fn from(e: SimError) -> Self {
        match e {
            SimError::BudgetExceeded { .. } => CliError::Budget(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}
