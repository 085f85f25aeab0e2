use alloc::string::String;
use alloc::vec::Vec;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("malformed group symbol {text:?}: {reason}")]
    Symbol { text: String, reason: String },

    #[error("unknown catalog key {key:?}; available: {}", available.join(", "))]
    UnknownGroup { key: String, available: Vec<String> },

    #[error("group enumeration exceeded the cap of {cap} elements")]
    ElementCap { cap: usize },

    #[error("invalid group specification: {0}")]
    InvalidSpec(String),

    #[error(
        "subspace is not stable under the action (image of basis vector {index} leaves the span)"
    )]
    NotStable { index: usize },

    #[error("basis vectors are linearly dependent")]
    DependentBasis,

    #[error("expected {expected} variables, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("invariant of minimal degree {degree} is not unique (dimension {dimension})")]
    NotUnique { degree: usize, dimension: usize },

    #[error("basic invariant search failed: {0}")]
    SearchExhausted(String),

    #[error("inconsistent hyperplane data: {0}")]
    Hyperplane(String),

    #[error("simplicial complex is not pure")]
    NotPure,

    #[error("homology is not concentrated in dimension {expected}")]
    NotConcentrated { expected: isize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
