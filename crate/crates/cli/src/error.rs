use faddeeva_analysis::AnalysisError;
use faddeeva_core::ParamError;
use faddeeva_oracle::CacheError;
use thiserror::Error;

/// Failure of a command, carrying its exit code class.
#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, bad parameter values, malformed input files.
    #[error("{0}")]
    Usage(String),
    /// A point failed to evaluate, a check failed, the oracle disagreed.
    #[error("{0}")]
    Compute(String),
    #[error("{0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Compute(_) => 2,
            CliError::Io(_) => 3,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<ParamError> for CliError {
    fn from(e: ParamError) -> Self {
        CliError::Usage(format!("invalid parameters: {e}"))
    }
}

impl From<CacheError> for CliError {
    fn from(e: CacheError) -> Self {
        match e {
            CacheError::Io(e) => CliError::Io(e.to_string()),
            e => CliError::Compute(e.to_string()),
        }
    }
}

impl From<AnalysisError> for CliError {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::Io(e) => CliError::Io(e.to_string()),
            AnalysisError::Cache(e) => e.into(),
            AnalysisError::InvalidGrid(m) => CliError::Usage(format!("invalid grid: {m}")),
            e => CliError::Compute(e.to_string()),
        }
    }
}
