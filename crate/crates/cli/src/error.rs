use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("invalid set: {0}")]
    BadSet(String),
    #[error("{0}")]
    Dispatch(String),
    #[error("{0}")]
    TooLarge(String),
    /// A result failed its own re-check: a witness that is not independent,
    /// or a solver that disagrees with the oracle.
    #[error("verification failed: {0}")]
    Verification(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::BadSet(_) => 3,
            CliError::Dispatch(_) => 4,
            CliError::TooLarge(_) => 5,
            CliError::Verification(_) => 6,
        }
    }
}

impl From<p3c_oracle::OracleError> for CliError {
    fn from(e: p3c_oracle::OracleError) -> Self {
        match e {
            p3c_oracle::OracleError::TooLarge { .. } => CliError::TooLarge(e.to_string()),
            p3c_oracle::OracleError::Convexity(c) => CliError::BadSet(c.to_string()),
        }
    }
}

impl From<p3c_permutation::PermutationError> for CliError {
    fn from(e: p3c_permutation::PermutationError) -> Self {
        use p3c_permutation::PermutationError as P;
        match e {
            P::TooLargeForOracle { .. } | P::Oracle(p3c_oracle::OracleError::TooLarge { .. }) => {
                CliError::TooLarge(e.to_string())
            }
            _ => CliError::Verification(e.to_string()),
        }
    }
}
