use faddeeva_core::EvalError;
use faddeeva_oracle::{CacheError, OracleError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("evaluation failed at ({x:e}, {y:e}): {source}")]
    Eval {
        x: f64,
        y: f64,
        #[source]
        source: EvalError,
    },
    #[error("reference failed at ({x:e}, {y:e}): {source}")]
    Oracle {
        x: f64,
        y: f64,
        #[source]
        source: OracleError,
    },
    #[error(transparent)]
    Cache(#[from] CacheError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
