use thiserror::Error;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("non-finite argument ({re}, {im})")]
    NonFinite { re: f64, im: f64 },
    #[error("{method}: argument ({re}, {im}) outside the usable range")]
    OutOfRange {
        method: &'static str,
        re: f64,
        im: f64,
    },
    #[error("{method}: no convergence at ({re}, {im}); best error estimate {est_error:e}")]
    NotConverged {
        method: &'static str,
        re: f64,
        im: f64,
        est_error: f64,
    },
    #[error(
        "methods disagree at ({re}, {im}): relative difference {diff:e} exceeds 10 x combined estimate {combined:e}"
    )]
    Inconsistent {
        re: f64,
        im: f64,
        diff: f64,
        combined: f64,
    },
}

#[derive(Debug, Error)]
pub enum CacheError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("cache signature mismatch: expected `{expected}`, found `{found}`")]
    SignatureMismatch { expected: String, found: String },
    #[error("no cached reference value for ({x:e}, {y:e})")]
    Missing { x: f64, y: f64 },
}
