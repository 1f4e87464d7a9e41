//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Dimension or shape mismatch at construction time. Shapes are never
    /// broadcast or padded silently.
    #[error("shape error: {0}")]
    Shape(String),

    #[error("empty generator list")]
    EmptyGenerators,

    #[error("zero vector not allowed: {0}")]
    ZeroVector(String),

    /// Some candidate state evaluates the unit to a non-positive value.
    #[error("unit not interior: row {row} evaluates to {value} at the unit")]
    UnitNotInterior { row: usize, value: String },

    /// The state matrix does not pin the cone down to a proper (pointed) one.
    #[error("cone not proper: state matrix rank {rank} < dimension {dim}")]
    ConeNotProper { rank: usize, dim: usize },

    #[error("unbounded feasible region")]
    Unbounded,

    /// A documented operation precondition does not hold for the inputs.
    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("axis vector: decomposition non-unique")]
    AxisVector,

    /// Skeleton axiom verification failed; the report is rendered inline.
    #[error("skeleton axioms failed: {0}")]
    SkeletonAxioms(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<V> = std::result::Result<V, Error>;

impl Error {
    pub fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }

    pub fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
