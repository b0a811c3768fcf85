use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter `{field}`: {value} ({reason})")]
    InvalidParam {
        field: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("{function}: argument {arg} outside the domain")]
    Domain { function: &'static str, arg: f64 },

    #[error("{what} = {value} exceeds the supported limit {limit}")]
    OutOfRange {
        what: &'static str,
        value: f64,
        limit: f64,
    },

    #[error("bracket [{lo}, {hi}] does not enclose a sign change (f = {f_lo}, {f_hi})")]
    NoSignChange {
        lo: f64,
        hi: f64,
        f_lo: f64,
        f_hi: f64,
    },

    #[error("solver failed: {0}")]
    Solver(String),

    #[error("index ({i}, {j}) is not an interior grid point")]
    BoundaryIndex { i: usize, j: usize },

    #[error("grid mismatch: {0}")]
    GridMismatch(String),

    #[error("point ({x}, {y}) lies within {radius} of a vortex center")]
    NearPole { x: f64, y: f64, radius: f64 },
}

impl Error {
    pub(crate) fn invalid(field: &'static str, value: f64, reason: &'static str) -> Self {
        Error::InvalidParam {
            field,
            value,
            reason,
        }
    }
}

/// Rejects non-finite or non-positive values.
pub(crate) fn require_positive(field: &'static str, value: f64) -> Result<f64> {
    if !value.is_finite() {
        return Err(Error::invalid(field, value, "must be finite"));
    }
    if value <= 0.0 {
        return Err(Error::invalid(field, value, "must be positive"));
    }
    Ok(value)
}
