use thiserror::Error;

use crate::partition::Partition;

/// Errors raised by the engine. Variant names are surfaced verbatim by the CLI
/// and mapped to status codes by the C bindings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KronError {
    #[error("InvalidShape: {0}")]
    InvalidShape(String),

    #[error("WeightMismatch: |{lambda}| = {} but |{rho}| = {}", lambda.weight(), rho.weight())]
    WeightMismatch { lambda: Partition, rho: Partition },

    #[error("NonTruncatable: term `{0}` carries no alphabet and cannot be truncated")]
    NonTruncatable(String),

    #[error("CapMismatch: {0:?} vs {1:?}")]
    CapMismatch([usize; 3], [usize; 3]),

    #[error("CapExceeded: requested degrees {requested:?} exceed caps {caps:?}")]
    CapExceeded { requested: [usize; 3], caps: [usize; 3] },

    #[error("ClosedFormUnavailable: no closed form for ({0}, {1}, {2})")]
    ClosedFormUnavailable(Partition, Partition, Partition),

    #[error("LimitInfeasible: padded weight {needed} exceeds ceiling {ceiling}; use the series method")]
    LimitInfeasible { needed: usize, ceiling: usize },

    #[error("OutOfRegion: {0}")]
    OutOfRegion(String),

    #[error("Parse: {0}")]
    Parse(String),

    #[error("Overflow: {0}")]
    Overflow(String),
}

impl KronError {
    /// The bare variant name, e.g. `"InvalidShape"`.
    pub fn name(&self) -> &'static str {
        match self {
            KronError::InvalidShape(_) => "InvalidShape",
            KronError::WeightMismatch { .. } => "WeightMismatch",
            KronError::NonTruncatable(_) => "NonTruncatable",
            KronError::CapMismatch(..) => "CapMismatch",
            KronError::CapExceeded { .. } => "CapExceeded",
            KronError::ClosedFormUnavailable(..) => "ClosedFormUnavailable",
            KronError::LimitInfeasible { .. } => "LimitInfeasible",
            KronError::OutOfRegion(_) => "OutOfRegion",
            KronError::Parse(_) => "Parse",
            KronError::Overflow(_) => "Overflow",
        }
    }
}

pub type Result<T> = std::result::Result<T, KronError>;
