use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },
    #[error("empty input")]
    EmptyInput,
    #[error("ragged input: vectors have different lengths")]
    RaggedInput,
    #[error("halfspace intersection is unbounded")]
    Unbounded,
    #[error("halfspace intersection is empty")]
    EmptyIntersection,
    #[error("intersection has a non-lattice vertex")]
    NonLatticeVertex,
    #[error("polytope is not full-dimensional")]
    NotFullDimensional,
    #[error("point is not a vertex of the polytope")]
    NotAVertex,
    #[error("given vertex set is not a face of the polytope")]
    NotAFace,
    #[error("polytope is not smooth along the given face")]
    NotSmoothAlongFace,
    #[error("invalid blow-up depth")]
    InvalidBlowUpDepth,
    #[error("face dimension {0} out of range")]
    FaceDimOutOfRange(usize),
    #[error("point not in domain: every monomial vanishes or has a pole there")]
    PointNotInDomain,
    #[error("Gauss map undefined: not {0}-jet spanned at the general point")]
    GaussMapUndefined(usize),
    #[error("operation requires a 2-dimensional polytope")]
    NotASurface,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("classification entry {index} failed validation: {reason}")]
    ClassificationEntry { index: usize, reason: String },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
