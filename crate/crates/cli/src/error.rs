//! Error classes mapped onto the exit-code contract:
//! 0 ok, 1 I/O or parse, 2 validation, 3 internal certificate failure.

use antinef::{ClassifyError, CycleError, LatticeError, ZariskiError};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) | CliError::Parse(_) => 1,
            CliError::Validation(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Parse(e.to_string())
    }
}

impl From<LatticeError> for CliError {
    fn from(e: LatticeError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<ZariskiError> for CliError {
    fn from(e: ZariskiError) -> Self {
        match e {
            ZariskiError::NoFeasibleSupport => CliError::Internal(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<CycleError> for CliError {
    fn from(e: CycleError) -> Self {
        match e {
            CycleError::FuseExceeded(_) => CliError::Internal(e.to_string()),
            CycleError::InvalidUserG(_) => CliError::Validation(e.to_string()),
        }
    }
}

impl From<ClassifyError> for CliError {
    fn from(e: ClassifyError) -> Self {
        match e {
            ClassifyError::Decomposition(inner) => inner.into(),
            ClassifyError::InvalidG(inner) => inner.into(),
            other => CliError::Validation(other.to_string()),
        }
    }
}
