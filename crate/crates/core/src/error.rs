use thiserror::Error;

use crate::rootsys::Root;

#[derive(Debug, Error)]
pub enum Error {
    #[error("roots {0} and {1} are not orthogonal")]
    NotOrthogonal(Root, Root),

    #[error("unsupported Dynkin diagram: {0}")]
    UnsupportedDiagram(String),

    #[error("structure constant construction is inconsistent: {0}")]
    Construction(String),

    #[error("span is not invariant under the acting set: {0}")]
    NotInvariant(String),

    #[error("Levi factor of {name} has type {found}, expected {expected}")]
    LeviMismatch {
        name: String,
        expected: String,
        found: String,
    },

    #[error("layer {layer} is not a Heisenberg algebra: {reason}")]
    NotHeisenberg { layer: usize, reason: String },

    #[error("decomposition check failed: {0}")]
    Decomposition(String),

    #[error("no basis satisfies the e/f constraints: {0}")]
    BasisSearch(String),

    #[error("form is not Levi-invariant: {0}")]
    FormInvariance(String),

    #[error("spectrum parameter t must be nonzero")]
    ZeroScale,

    #[error("the zero vector has no induced Heisenberg quotient")]
    ZeroVector,

    #[error("omega partition: {0}")]
    Partition(String),

    #[error("polarization: {0}")]
    Polarization(String),

    #[error("golden table line {line}: {msg}")]
    GoldenParse { line: usize, msg: String },

    #[error("{0} is only defined for E7")]
    RequiresE7(&'static str),

    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

pub type Result<T> = std::result::Result<T, Error>;
