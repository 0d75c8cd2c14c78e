use mec_core::MecError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("invalid simulation config: {0}")]
    InvalidConfig(String),

    /// The naive reference pipeline is kept small and obviously correct;
    /// it refuses inputs beyond its size limits.
    #[error("situation too large for the reference pipeline: {actions} actions, {theories} theories")]
    SituationTooLarge { actions: usize, theories: usize },

    #[error("comparison not supported by theory '{0}'")]
    NotSupportedByTheory(String),

    #[error("no comparative phrase for theory '{0}'")]
    MissingPhrase(String),

    #[error("missing score for action '{0}'")]
    MissingScore(String),

    #[error(transparent)]
    Core(#[from] MecError),
}
