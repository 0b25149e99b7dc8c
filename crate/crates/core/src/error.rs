use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    /// Input data does not satisfy a structural requirement (table bounds,
    /// group axioms, a precondition of a construction).
    #[error("validation failed: {0}")]
    Validation(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("field error: {0}")]
    Field(String),

    /// A product or coaction left the finite part of a Hopf algebra that a
    /// computation is allowed to use.
    #[error("degree overflow: {0}")]
    DegreeOverflow(String),

    /// An identity that the construction guarantees did not hold.
    #[error("internal consistency failure: {0}")]
    Consistency(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
