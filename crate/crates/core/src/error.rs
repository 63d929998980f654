use thiserror::Error;

/// Errors raised across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("point {0} does not lie on the curve")]
    PointNotOnCurve(String),

    #[error("point {0} is a singular point of the curve")]
    SingularPoint(String),

    #[error("series order {requested} exceeds the ceiling {ceiling}")]
    OrderCeiling { requested: usize, ceiling: usize },

    #[error("tangent line is a component of the curve")]
    TangentIsComponent,

    #[error("inconsistent configuration: {0}")]
    InconsistentConfiguration(String),

    #[error("unclassified configuration: {0}")]
    Unclassified(String),

    #[error("retry budget of {budget} exhausted; last failure: {last}")]
    RetryExhausted { budget: usize, last: String },
}

pub type Result<T> = std::result::Result<T, Error>;
