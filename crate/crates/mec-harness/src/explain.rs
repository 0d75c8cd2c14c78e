//! Comparative explanation templates.

use std::collections::BTreeMap;

use mec_core::ScoreTable;

use crate::error::HarnessError;

/// Fill the comparative template for a pair of actions under one theory,
/// e.g. with the phrase "higher utility":
///
/// "Action A is more choiceworthy than action B because action A has higher
/// utility than action B."
///
/// The theory must actually support the claim: `better` has to strictly
/// outscore `worse` in its table.
pub fn render_explanation(
    scores: &ScoreTable,
    better: &str,
    worse: &str,
    vocabulary: &BTreeMap<String, String>,
) -> Result<String, HarnessError> {
    let better_score = scores
        .get(better)
        .ok_or_else(|| HarnessError::MissingScore(better.to_string()))?;
    let worse_score = scores
        .get(worse)
        .ok_or_else(|| HarnessError::MissingScore(worse.to_string()))?;
    if better_score.partial_cmp(&worse_score) != Some(std::cmp::Ordering::Greater) {
        return Err(HarnessError::NotSupportedByTheory(scores.theory_id.clone()));
    }
    let phrase = vocabulary
        .get(&scores.theory_id)
        .ok_or_else(|| HarnessError::MissingPhrase(scores.theory_id.clone()))?;
    Ok(format!(
        "Action {better} is more choiceworthy than action {worse} \
         because action {better} has {phrase} than action {worse}."
    ))
}
