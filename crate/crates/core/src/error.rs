use thiserror::Error;

/// Errors produced by the calculators in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("value {value} out of range {min}..={max} for {what}")]
    OutOfRange {
        what: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("unknown catalogue entry: {0}")]
    Catalogue(String),

    #[error("{value} is not in the image of kappa: Z/{small} -> Z/{big}")]
    NotInImage { value: u64, small: u64, big: u64 },

    #[error("inconsistent input: {0}")]
    InconsistentInput(String),

    #[error("precision error: {0}")]
    Precision(String),

    #[error("unsupported weight {0}")]
    UnsupportedWeight(i64),

    #[error("unsupported level {0}")]
    UnsupportedLevel(u64),

    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("irrational scaling p^{exponent} requested in rational mode")]
    Mode { exponent: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
