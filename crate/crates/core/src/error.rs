use thiserror::Error;

/// Errors produced by the ideal engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ambient dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("an ideal needs at least one generator")]
    EmptyGenerators,

    #[error("generator has {found} exponents, expected {expected}")]
    GeneratorLength { expected: usize, found: usize },

    #[error("ideal is not primary to the maximal ideal")]
    NotMPrimary,

    #[error("ideal is not integrally closed")]
    NotComplete,

    #[error("direction index {dir} out of range for dimension {dim}")]
    DirectionOutOfRange { dir: usize, dim: usize },

    #[error("stage {stage} out of range for a sequence of length {len}")]
    StageOutOfRange { stage: usize, len: usize },

    #[error("direction sequence is empty")]
    EmptySequence,

    #[error("facet enumeration supports dimension at most {limit}, got {dim}")]
    FacetDimension { dim: usize, limit: usize },

    #[error("no finite base point tree within depth {max_depth}")]
    NotFinitelySupported { max_depth: usize },

    #[error("factorization reconstruction identity failed")]
    ReconstructionFailed,

    #[error("computation too large for exact evaluation: {0}")]
    TooLarge(String),
}

pub type Result<T> = std::result::Result<T, Error>;
