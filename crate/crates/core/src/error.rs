use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus must be positive")]
    ZeroModulus,

    #[error("n = {n} is outside the supported range 0..={max}")]
    UnsupportedN { n: u64, max: u64 },

    #[error("Frank divisor must be positive")]
    ZeroDivisor,

    #[error("exponent {exponent} at index {index} is not below modulus {modulus}")]
    ExponentOutOfRange {
        index: usize,
        exponent: u64,
        modulus: u64,
    },

    #[error("sequence must not be empty")]
    EmptySequence,

    #[error("array shape {rows}x{cols} does not match {len} entries")]
    ShapeMismatch {
        rows: usize,
        cols: usize,
        len: usize,
    },

    #[error("period mismatch: {left} vs {right}")]
    PeriodMismatch { left: usize, right: usize },

    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },

    #[error("divisor {divisor} does not divide period {period}")]
    DivisorMismatch { divisor: usize, period: usize },

    #[error("arithmetic overflow building row {row}")]
    Overflow { row: u64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("malformed sequence file: {0}")]
    Format(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}
