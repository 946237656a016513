use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("could not parse {what}: {detail}")]
    Parse { what: String, detail: String },

    #[error("expected at least {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("value at index {index} is inconsistent with the fitted numerator")]
    InconsistentValues { index: usize },

    #[error("{name} = {value} is out of range, expected {expected}")]
    OutOfRange {
        name: &'static str,
        value: i64,
        expected: String,
    },

    #[error("{0}")]
    InvalidParameter(String),

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("empty interval: lower bound {lo} is not below upper bound {hi}")]
    EmptyInterval { lo: String, hi: String },

    #[error("reconstruction needs at least one part")]
    EmptyParts,

    #[error("invalid polytope: {0}")]
    Polytope(String),

    #[error("count at n = {n} is {got} but the interpolated polynomial predicts {expected}")]
    Interpolation {
        n: usize,
        expected: String,
        got: String,
    },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn out_of_range(name: &'static str, value: impl TryInto<i64>, expected: impl Into<String>) -> Error {
    Error::OutOfRange {
        name,
        value: value.try_into().unwrap_or(i64::MAX),
        expected: expected.into(),
    }
}
