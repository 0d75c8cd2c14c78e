//! Synthetic-evaluator experiments and reference implementations.
//!
//! The simulator measures how often credence-weighted aggregation of noisy
//! evaluators picks a planted ground-truth action, compared with each
//! evaluator alone. The [`reference`] module re-derives the whole pipeline
//! with deliberately naive code so tests can check the optimized path
//! against an independent one.

mod config;
mod error;
mod explain;
pub mod reference;
mod simulate;

pub use config::{ExperimentReport, SynthConfig};
pub use error::HarnessError;
pub use explain::render_explanation;
pub use simulate::{generate_trial, run_experiment, trial_rng};
