use thiserror::Error;

/// Errors surfaced by graph parsing, spectral computation, and filtering.
#[derive(Debug, Error)]
pub enum DgspError {
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid signal: {0}")]
    InvalidSignal(String),

    #[error("parameter out of range: {0}")]
    InvalidParameter(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("numerical failure: {0}")]
    Numerical(String),

    #[error("spectral coefficients from (alpha={got_alpha}, q={got_q}) used with spectrum (alpha={want_alpha}, q={want_q})")]
    ProvenanceMismatch {
        got_alpha: f64,
        got_q: f64,
        want_alpha: f64,
        want_q: f64,
    },
}

pub type Result<T> = std::result::Result<T, DgspError>;
