//! Harness errors and their process exit codes.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("configuration error: {0}")]
    Config(String),

    #[error("compatibility violation: {0}")]
    Compatibility(String),

    #[error(transparent)]
    Model(#[from] heave_core::Error),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

impl HarnessError {
    pub fn config(msg: impl Into<String>) -> Self {
        HarnessError::Config(msg.into())
    }

    /// Exit code contract: 0 ok, 2 config error, 3 compatibility violation,
    /// 4 runtime invariant breach.
    pub fn exit_code(&self) -> i32 {
        match self {
            HarnessError::Config(_) => 2,
            HarnessError::Model(heave_core::Error::Config(_)) => 2,
            HarnessError::Model(heave_core::Error::Domain(_)) => 2,
            HarnessError::Compatibility(_) => 3,
            _ => 4,
        }
    }
}

pub type Result<T> = std::result::Result<T, HarnessError>;
