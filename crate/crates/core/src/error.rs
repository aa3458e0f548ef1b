use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("unsupported order m = {0}: orders start at 2")]
    UnsupportedOrder(usize),

    #[error("power-series expansion needs a denominator with constant term +1 or -1, found {0}")]
    UnsupportedExpansion(BigInt),

    #[error("unsupported input: {0}")]
    UnsupportedInput(String),

    #[error("root iteration did not converge (residual {residual:e})")]
    Convergence { residual: f64 },

    #[error("numeric instability: {0}")]
    NumericInstability(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("b-file structure: {0}")]
    Structure(String),

    #[error("no alignment shift matched (tried {tried:?})")]
    Alignment { tried: Vec<i64> },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
