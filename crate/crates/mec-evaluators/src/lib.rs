//! Score sources that produce [`mec_core::ScoreTable`]s.
//!
//! Tables can come from files (CSV or JSON), from the scoring conventions of
//! the three stock theory models (utilitarian scalar passthrough, deontic
//! prompt formatting, virtue trait-sentiment lookup), or from a remote
//! scorer speaking a small JSON-over-HTTP protocol. A calibration routine
//! picks classification thresholds from labeled scores.

mod calibration;
mod error;
mod io;
mod remote;
mod scoring;

pub use calibration::{calibrate_threshold, classify};
pub use error::EvaluatorError;
pub use io::{load_score_table, load_sentiment_map, TableFormat};
pub use remote::remote_score;
pub use scoring::{
    deontology_prompt, utilitarian_score, virtue_choiceworthiness, SentimentMap,
    TraitDistribution, DEONTOLOGY_PROMPT_PREFIX,
};
