use thiserror::Error;

/// Failures surfaced by the command-line front end, each mapped to an exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid flow: {0}")]
    InvalidFlow(String),
    #[error("not a symmetry: {0}")]
    NotASymmetry(String),
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("{0} check(s) failed")]
    ChecksFailed(usize),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io(_) => 1,
            CliError::InvalidFlow(_) => 2,
            CliError::NotASymmetry(_) => 3,
            CliError::Resource(_) => 4,
            CliError::ChecksFailed(_) => 5,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn parse_err(msg: impl Into<String>) -> CliError {
    CliError::Parse(msg.into())
}
