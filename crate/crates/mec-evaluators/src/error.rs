use thiserror::Error;

/// Errors from score loading, scoring conventions, calibration, and the
/// remote scorer client.
#[derive(Debug, Error)]
pub enum EvaluatorError {
    #[error("empty table")]
    EmptyTable,

    #[error("empty action text")]
    EmptyActionText,

    /// No trait in the distribution appears in the sentiment map.
    #[error("no scorable trait")]
    NoScorableTrait,

    /// Calibration needs at least one example of each label.
    #[error("degenerate calibration set")]
    DegenerateCalibration,

    #[error("duplicate action id '{0}'")]
    DuplicateActionId(String),

    #[error("duplicate term '{0}'")]
    DuplicateTerm(String),

    #[error("nonfinite value for '{0}'")]
    NonfiniteValue(String),

    #[error("sentiment {value} outside [-1, 1] for term '{term}'")]
    SentimentOutOfRange { term: String, value: f64 },

    #[error("probability {value} outside [0, 1] for trait '{term}'")]
    TraitProbabilityOutOfRange { term: String, value: f64 },

    #[error("cannot read '{path}': {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error("cannot parse '{path}': {message}")]
    Parse { path: String, message: String },

    #[error("invalid scorer endpoint '{0}'")]
    InvalidEndpoint(String),

    /// The scorer could not be reached within the timeout, once retried.
    #[error("scorer unavailable: {0}")]
    ScorerUnavailable(String),

    #[error("scorer returned status {0}")]
    ScorerStatus(u16),

    #[error("scorer response malformed: {0}")]
    MalformedResponse(String),

    /// The scorer answered but left a requested action unscored.
    #[error("incomplete scores: missing action '{0}'")]
    IncompleteScores(String),
}
