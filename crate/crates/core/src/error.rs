use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),

    #[error("unsupported lattice kind for this operation: {0}")]
    UnsupportedKind(String),

    #[error("directions of mixed dimension")]
    MixedDimensions,

    #[error("enumeration budget exceeded: {required} sequences, budget {budget}")]
    EnumerationBudget { required: u128, budget: u128 },

    #[error("phase undefined for zero amplitude")]
    UndefinedPhase,

    #[error("{0} must be positive")]
    NonPositive(&'static str),

    #[error("box radius {0} exceeds the supported bound of 2")]
    BoxRadiusTooLarge(String),

    #[error("malformed {what}: {input:?}")]
    Malformed { what: &'static str, input: String },
}

impl Error {
    pub(crate) fn malformed(what: &'static str, input: impl Into<String>) -> Self {
        Error::Malformed {
            what,
            input: input.into(),
        }
    }
}
