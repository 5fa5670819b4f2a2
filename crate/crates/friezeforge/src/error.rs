//! Crate-wide error type.

use crate::polygon::Arc;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("arcs {x} and {y} do not cross")]
    NotCrossing { x: Arc, y: Arc },

    #[error("{arc} is not in the triangulation")]
    NotInTriangulation { arc: Arc },

    #[error("composition precondition violated for {x} → {y} → {z}: a Hom space is zero")]
    CompositionPrecondition { x: Arc, y: Arc, z: Arc },

    #[error("factoring relation of an approximation contains a directed cycle")]
    ApproximationCycle,

    #[error("multiplication recursion for {arc} exceeded the crossing bound")]
    RecursionLimit { arc: Arc },

    #[error("module support has {got} elements, above the bound {bound}")]
    SupportTooLarge { got: usize, bound: usize },

    #[error("exponential map is not constant on cosets: the subgroup generator for {arc} maps to {monomial}")]
    EpsilonNotWellDefined { arc: Arc, monomial: String },

    #[error("division is only defined by single-term units, got {0}")]
    NonUnitDivisor(String),

    #[error("cannot parse monomial {input:?}: {reason}")]
    MonomialParse { input: String, reason: String },

    #[error("malformed frieze grid: {0}")]
    MalformedGrid(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("{0}")]
    Invalid(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
