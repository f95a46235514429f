//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong while building designs, fitting, or
/// estimating covariances.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Shapes of two arguments do not line up.
    #[error("dimension mismatch in {context}: expected {expected}, got {got}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    /// The design matrix is numerically rank deficient. `column` is the
    /// 0-based column whose triangular-factor diagonal collapsed.
    #[error("rank deficient design: column {column} is linearly dependent on earlier columns")]
    RankDeficient { column: usize },

    /// A NaN or infinity was handed to a constructor.
    #[error("non-finite value in {what} at index {index}")]
    NonFinite { what: &'static str, index: usize },

    /// Not enough observations to estimate the residual variance.
    #[error("too few rows: n = {n} must exceed the column count p = {p}")]
    TooFewRows { n: usize, p: usize },

    /// HC2-HC4 weights divide by 1 - h_i; a leverage this close to one
    /// would blow up.
    #[error("leverage {leverage} at row {row} is too close to one for HC{variant}")]
    LeverageOne { row: usize, leverage: f64, variant: u8 },

    /// Corrections that divide by G - 1 need at least two clusters.
    #[error("cluster correction divides by G - 1 but only {found} cluster was found")]
    SingleClusterWithCorrection { found: usize },

    /// Cluster labels must cover every row.
    #[error("expected one cluster id per row ({expected}), got {got}")]
    MissingClusterId { expected: usize, got: usize },

    /// Time indices must be strictly increasing.
    #[error("time index is not strictly increasing at position {position}")]
    UnorderedTime { position: usize },

    /// HAC lag weights cannot outnumber the observations.
    #[error("HAC weight vector of length {len} exceeds the row count {n}")]
    WeightsTooLong { len: usize, n: usize },

    /// HAC lag weights must be finite, bounded by one, and start at one.
    #[error("invalid HAC weights: {reason}")]
    BadHacWeights { reason: &'static str },

    /// A stratum violates the 0 < e < 1 assumption or is too small.
    #[error("degenerate stratum `{label}`: {reason}")]
    DegenerateStratum { label: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
