use thiserror::Error;

/// Crate-wide error type. Every fallible operation returns one of these;
/// nothing in the crate panics on bad caller input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("weight {0} is not weakly decreasing")]
    NotDominant(String),

    #[error("cross sums disagree: {0}")]
    NotPure(String),

    #[error("rank mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),

    #[error("negative symmetric power {0}")]
    NegativeSymPower(i64),

    #[error("out of range: {0}")]
    OutOfRange(String),

    #[error("not a genuine character: {0}")]
    MalformedCharacter(String),

    #[error("bad antidiagonal index {t} for rank {n}")]
    BadIndex { t: usize, n: usize },

    #[error("unsupported case: {0}")]
    UnsupportedCase(String),

    #[error("{0} is not half an odd integer")]
    NotHalfOdd(String),

    #[error("enumeration too large: {0}")]
    InfeasibleScale(String),

    #[error("assumption violated: {0}")]
    AssumptionViolated(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
