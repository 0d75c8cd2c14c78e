//! Expected-choiceworthiness aggregation over normative theories.
//!
//! A decision situation holds a set of candidate actions scored by any mix of
//! cardinal-comparable, cardinal-incomparable, and ordinal theories, each held
//! with a credence in `[0, 1]`. The pipeline merges the comparable theories
//! into one credence-weighted table, converts ordinal rankings to tie-aware
//! pairwise scores, rescales every table by its population standard deviation
//! over a reference ("general") action set, and selects the action with the
//! highest credence-weighted sum.
//!
//! All operations are pure functions over their inputs: identical inputs
//! produce identical results, and ties are broken by ascending action id.

mod error;
mod pipeline;
mod types;

pub use error::MecError;
pub use pipeline::{
    aggregate, borda, merge_comparable, normalize, ordinalize, run_mec, select, MecOptions,
};
pub use types::{
    Action, DecisionSituation, MecResult, ScoreTable, TheoryKind, TheorySpec, MERGED_KEY,
};
