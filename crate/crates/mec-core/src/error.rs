use thiserror::Error;

/// Errors surfaced by the aggregation pipeline and its input types.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MecError {
    #[error("empty score table")]
    EmptyTable,

    #[error("empty action set")]
    EmptyActionSet,

    #[error("empty general set")]
    EmptyGeneralSet,

    /// Two tables that must range over the same actions do not, or a table
    /// fails to cover the situation's action and general sets.
    #[error("inconsistent score coverage: {0}")]
    InconsistentCoverage(String),

    #[error("missing score for action '{0}'")]
    MissingScore(String),

    #[error("nonfinite score for action '{action}' in table '{table}'")]
    NonfiniteScore { table: String, action: String },

    #[error("credence {value} out of range [0, 1] for theory '{theory}'")]
    CredenceOutOfRange { theory: String, value: f64 },

    /// Aggregation weights may exceed 1 (a merged theory carries the sum of
    /// its members' credences) but must be finite and non-negative.
    #[error("invalid aggregation weight {value} for table '{table}'")]
    InvalidWeight { table: String, value: f64 },

    #[error("probability {value} outside [0, 1] for action '{action}'")]
    ProbabilityOutOfRange { action: String, value: f64 },

    #[error("threshold {0} outside (0, 1)")]
    ThresholdOutOfRange(f64),

    #[error("invalid decision situation: {0}")]
    InvalidSituation(String),
}
