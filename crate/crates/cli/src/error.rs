use std::process::ExitCode;

use rideshare_core::Error as CoreError;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed input: {0}")]
    Schema(String),
    #[error("invalid instance: {0}")]
    Instance(String),
    #[error("infeasible ride: {0}")]
    Infeasible(String),
    #[error("cost mismatch: {0}")]
    CostMismatch(String),
    #[error("resource budget exceeded: {0}")]
    Budget(String),
    #[error("solver failure: {0}")]
    Solver(String),
}

impl CliError {
    pub fn exit_code(&self) -> ExitCode {
        ExitCode::from(match self {
            CliError::Usage(_)
            | CliError::Io { .. }
            | CliError::Schema(_)
            | CliError::Instance(_) => 1,
            CliError::Infeasible(_) | CliError::CostMismatch(_) => 2,
            CliError::Budget(_) => 3,
            CliError::Solver(_) => 4,
        })
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::OracleTooLarge { .. } => CliError::Budget(e.to_string()),
            CoreError::Infeasible => CliError::Infeasible(e.to_string()),
            CoreError::MalformedRide(_) => CliError::Infeasible(e.to_string()),
            CoreError::Internal(_) => CliError::Solver(e.to_string()),
            CoreError::WrongTopology { .. }
            | CoreError::Precondition(_)
            | CoreError::TupleRejected(_) => CliError::Usage(e.to_string()),
            CoreError::NodeOutOfRange { .. }
            | CoreError::EmptyRequests
            | CoreError::InvalidGraph(_)
            | CoreError::InvalidWeight(_) => CliError::Instance(e.to_string()),
        }
    }
}
