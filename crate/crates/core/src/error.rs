use alloc::string::String;

/// Errors raised by the symbolic core.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable sets differ")]
    VarsetMismatch,
    #[error("no value assigned to variable `{0}`")]
    MissingAssignment(String),
    #[error("jet orders differ: expected {expected}, found {found}")]
    OrderMismatch { expected: usize, found: usize },
    #[error("invalid algebra: {0}")]
    InvalidAlgebra(String),
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("index estimate unreliable, increase trials (dim {dim} + index {index} is odd)")]
    OddMagicNumber { dim: usize, index: usize },
    #[error("truncation depth must be at least 1, got {0}")]
    DepthTooSmall(usize),
    #[error("degree list is empty")]
    EmptyDegreeList,
    #[error("algebra `{0}` carries no Takiff grading")]
    MissingGrading(String),
    #[error("point is not on the null fibre: {0}")]
    NotOnNullFibre(String),
    #[error(
        "declared stratum index {declared} disagrees with sampled index {sampled} for `{stratum}`"
    )]
    InconsistentStratum {
        stratum: String,
        declared: usize,
        sampled: usize,
    },
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
