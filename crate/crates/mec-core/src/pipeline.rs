//! The four-step aggregation pipeline.
//!
//! 1. Merge comparable cardinal theories into one credence-weighted table.
//! 2. Turn each ordinal theory's scores into tie-aware pairwise scores
//!    (optionally binarizing probability payloads at a threshold first).
//! 3. Divide every table by its population standard deviation over the
//!    general reference set (no mean subtraction).
//! 4. Sum the normalized tables weighted by credence and pick the maximum,
//!    ties going to the lexicographically smallest action id.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::MecError;
use crate::types::{DecisionSituation, MecResult, ScoreTable, TheoryKind, MERGED_KEY};

/// Options for a pipeline run.
#[derive(Debug, Clone, Default)]
pub struct MecOptions {
    /// Cutoff in `(0, 1)` at which probability-valued ordinal scores are
    /// binarized (`p >= threshold` maps to 1) before ranking. When absent,
    /// such scores feed the ranking step as-is.
    pub threshold: Option<f64>,
}

impl MecOptions {
    pub fn with_threshold(threshold: f64) -> Self {
        Self {
            threshold: Some(threshold),
        }
    }
}

/// Collapse -0.0 to 0.0 so computed tables compare and serialize stably.
fn canon(value: f64) -> f64 {
    if value == 0.0 {
        0.0
    } else {
        value
    }
}

/// Merge mutually comparable cardinal theories into a single table.
///
/// The merged credence is the sum of the members' credences and the merged
/// score of each action is the credence-weighted mean of its raw scores.
/// When all credences are zero the weighted mean is undefined; the merged
/// table is then all zeros (and drops out of the aggregate downstream).
pub fn merge_comparable(
    theories: &[(f64, ScoreTable)],
) -> Result<(f64, ScoreTable), MecError> {
    let Some(((_, first), _)) = theories.split_first() else {
        return Err(MecError::EmptyTable);
    };
    let mut credence_sum = 0.0;
    for (credence, table) in theories {
        if !(*credence >= 0.0 && *credence <= 1.0) {
            return Err(MecError::CredenceOutOfRange {
                theory: table.theory_id.clone(),
                value: *credence,
            });
        }
        table.check_finite()?;
        if !table.scores.keys().eq(first.scores.keys()) {
            return Err(MecError::InconsistentCoverage(format!(
                "table '{}' does not cover the same actions as table '{}'",
                table.theory_id, first.theory_id
            )));
        }
        credence_sum += *credence;
    }

    let mut merged = BTreeMap::new();
    for action in first.scores.keys() {
        let value = if credence_sum == 0.0 {
            0.0
        } else {
            let weighted: f64 = theories
                .iter()
                .map(|(credence, table)| credence * table.scores[action])
                .sum();
            canon(weighted / credence_sum)
        };
        merged.insert(action.clone(), value);
    }
    Ok((credence_sum, ScoreTable::new(MERGED_KEY, merged)))
}

/// Tie-aware pairwise rank scores over `over`: each action scores the number
/// of actions it strictly beats minus the number it strictly loses to. Tied
/// actions score equally and every set's scores sum to zero.
pub fn borda(scores: &ScoreTable, over: &BTreeSet<String>) -> Result<ScoreTable, MecError> {
    if over.is_empty() {
        return Err(MecError::EmptyActionSet);
    }
    let mut values = Vec::with_capacity(over.len());
    for id in over {
        let value = scores
            .get(id)
            .ok_or_else(|| MecError::MissingScore(id.clone()))?;
        if !value.is_finite() {
            return Err(MecError::NonfiniteScore {
                table: scores.theory_id.clone(),
                action: id.clone(),
            });
        }
        values.push(value);
    }
    values.sort_by(f64::total_cmp);
    let n = values.len();

    let mut out = BTreeMap::new();
    for id in over {
        let value = scores.scores[id];
        let inferior = values.partition_point(|v| *v < value);
        let superior = n - values.partition_point(|v| *v <= value);
        out.insert(id.clone(), (inferior as i64 - superior as i64) as f64);
    }
    Ok(ScoreTable::new(scores.theory_id.clone(), out))
}

/// Binarize probability scores at `threshold`: 1 where `p >= threshold`
/// (boundary inclusive), else 0. The result is a two-level ordinal table.
pub fn ordinalize(probabilities: &ScoreTable, threshold: f64) -> Result<ScoreTable, MecError> {
    if !(threshold > 0.0 && threshold < 1.0) {
        return Err(MecError::ThresholdOutOfRange(threshold));
    }
    let mut out = BTreeMap::new();
    for (action, p) in &probabilities.scores {
        if !(*p >= 0.0 && *p <= 1.0) {
            return Err(MecError::ProbabilityOutOfRange {
                action: action.clone(),
                value: *p,
            });
        }
        out.insert(action.clone(), if *p >= threshold { 1.0 } else { 0.0 });
    }
    Ok(ScoreTable::new(probabilities.theory_id.clone(), out))
}

/// Divide every score by the population standard deviation of the scores
/// held by the general reference ids. No mean is subtracted. A theory that
/// is indifferent over the reference set (zero spread) normalizes to all
/// zeros rather than dividing by zero.
pub fn normalize(scores: &ScoreTable, general: &BTreeSet<String>) -> Result<ScoreTable, MecError> {
    if general.is_empty() {
        return Err(MecError::EmptyGeneralSet);
    }
    scores.check_finite()?;
    let mut reference = Vec::with_capacity(general.len());
    for id in general {
        reference.push(
            scores
                .get(id)
                .ok_or_else(|| MecError::MissingScore(id.clone()))?,
        );
    }

    // Constant reference values mean zero spread; detect exact equality
    // rather than relying on a floating-point variance to come out as 0.
    let zero_spread = reference.iter().all(|v| *v == reference[0]);
    let std_dev = if zero_spread {
        0.0
    } else {
        let n = reference.len() as f64;
        let mean = reference.iter().sum::<f64>() / n;
        let variance = reference.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
        variance.sqrt()
    };

    let mut out = BTreeMap::new();
    for (action, value) in &scores.scores {
        let normalized = if std_dev == 0.0 {
            0.0
        } else {
            canon(value / std_dev)
        };
        out.insert(action.clone(), normalized);
    }
    Ok(ScoreTable::new(scores.theory_id.clone(), out))
}

/// Credence-weighted sum of normalized tables. All tables must range over
/// the same actions. Weights may exceed 1: a merged theory carries the sum
/// of its members' credences.
pub fn aggregate(normalized: &[(f64, ScoreTable)]) -> Result<ScoreTable, MecError> {
    let Some(((_, first), _)) = normalized.split_first() else {
        return Err(MecError::EmptyTable);
    };
    for (weight, table) in normalized {
        if !weight.is_finite() || *weight < 0.0 {
            return Err(MecError::InvalidWeight {
                table: table.theory_id.clone(),
                value: *weight,
            });
        }
        table.check_finite()?;
        if !table.scores.keys().eq(first.scores.keys()) {
            return Err(MecError::InconsistentCoverage(format!(
                "table '{}' does not cover the same actions as table '{}'",
                table.theory_id, first.theory_id
            )));
        }
    }

    let mut out = BTreeMap::new();
    for action in first.scores.keys() {
        let sum: f64 = normalized
            .iter()
            .map(|(weight, table)| weight * table.scores[action])
            .sum();
        out.insert(action.clone(), canon(sum));
    }
    Ok(ScoreTable::new("expected", out))
}

/// The action with the maximal score; ties go to the lexicographically
/// smallest action id.
pub fn select(expected: &ScoreTable) -> Result<&str, MecError> {
    let mut best: Option<(&str, f64)> = None;
    for (action, value) in &expected.scores {
        match best {
            Some((_, top)) if *value <= top => {}
            _ => best = Some((action, *value)),
        }
    }
    best.map(|(action, _)| action).ok_or(MecError::EmptyTable)
}

/// Run the full pipeline on a validated decision situation.
pub fn run_mec(
    situation: &DecisionSituation,
    options: &MecOptions,
) -> Result<MecResult, MecError> {
    situation.validate()?;
    if let Some(threshold) = options.threshold {
        if !(threshold > 0.0 && threshold < 1.0) {
            return Err(MecError::ThresholdOutOfRange(threshold));
        }
    }

    let action_ids = situation.action_ids();
    let general = situation.general_ids();
    let union = situation.scoring_ids();

    let tables: BTreeMap<&str, &ScoreTable> = situation
        .score_tables
        .iter()
        .map(|t| (t.theory_id.as_str(), t))
        .collect();
    let table_over_union = |theory_id: &str| restrict(tables[theory_id], &union);

    // (contribution key, weight, table awaiting normalization)
    let mut entries: Vec<(String, f64, ScoreTable)> = Vec::new();

    let comparable: Vec<(f64, ScoreTable)> = situation
        .theories
        .iter()
        .filter(|t| t.kind == TheoryKind::CardinalComparable)
        .map(|t| (t.credence, table_over_union(&t.id)))
        .collect();
    let merged_credence = if comparable.is_empty() {
        None
    } else {
        let (credence, merged) = merge_comparable(&comparable)?;
        entries.push((MERGED_KEY.to_string(), credence, merged));
        Some(credence)
    };

    for theory in &situation.theories {
        match theory.kind {
            TheoryKind::CardinalComparable => {}
            TheoryKind::Ordinal => {
                let table = table_over_union(&theory.id);
                let ranked = match (theory.scores_are_probabilities, options.threshold) {
                    (true, Some(threshold)) => {
                        borda(&ordinalize(&table, threshold)?, &union)?
                    }
                    _ => borda(&table, &union)?,
                };
                entries.push((theory.id.clone(), theory.credence, ranked));
            }
            TheoryKind::CardinalIncomparable => {
                entries.push((theory.id.clone(), theory.credence, table_over_union(&theory.id)));
            }
        }
    }

    let mut weighted = Vec::with_capacity(entries.len());
    let mut contributions = BTreeMap::new();
    for (key, weight, table) in &entries {
        let normalized = restrict(&normalize(table, &general)?, &action_ids);
        let contribution: BTreeMap<String, f64> = normalized
            .scores
            .iter()
            .map(|(action, value)| (action.clone(), canon(weight * value)))
            .collect();
        contributions.insert(key.clone(), contribution);
        weighted.push((*weight, normalized));
    }

    let expected = aggregate(&weighted)?;
    let mut order: Vec<(&String, f64)> =
        expected.scores.iter().map(|(a, v)| (a, *v)).collect();
    order.sort_by(|a, b| b.1.total_cmp(&a.1).then_with(|| a.0.cmp(b.0)));
    let ranking: Vec<String> = order.into_iter().map(|(a, _)| a.clone()).collect();
    let selected = ranking[0].clone();

    Ok(MecResult {
        expected: expected.scores,
        ranking,
        contributions,
        selected,
        merged_credence,
    })
}

fn restrict(table: &ScoreTable, ids: &BTreeSet<String>) -> ScoreTable {
    ScoreTable::new(
        table.theory_id.clone(),
        table
            .scores
            .iter()
            .filter(|(action, _)| ids.contains(*action))
            .map(|(action, value)| (action.clone(), *value))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::{Action, TheorySpec};

    fn ids(names: &[&str]) -> BTreeSet<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn assert_close(actual: f64, expected: f64, tolerance: f64) {
        assert!(
            (actual - expected).abs() <= tolerance,
            "expected {expected}, got {actual}"
        );
    }

    #[test]
    fn merge_weighted_mean() {
        let t1 = ScoreTable::from_pairs("t1", [("a", 0.8), ("b", 0.2)]);
        let t2 = ScoreTable::from_pairs("t2", [("a", 0.6), ("b", 0.4)]);
        let (credence, merged) = merge_comparable(&[(1.0, t1), (1.0, t2)]).unwrap();
        assert_eq!(credence, 2.0);
        assert_close(merged.scores["a"], 0.7, 1e-12);
        assert_close(merged.scores["b"], 0.3, 1e-12);
    }

    #[test]
    fn merge_single_theory_is_identity() {
        let table = ScoreTable::from_pairs("t", [("a", 5.0), ("b", 3.0)]);
        let (credence, merged) = merge_comparable(&[(0.4, table)]).unwrap();
        assert_eq!(credence, 0.4);
        assert_close(merged.scores["a"], 5.0, 1e-12);
        assert_close(merged.scores["b"], 3.0, 1e-12);
    }

    #[test]
    fn merge_unequal_credences() {
        let t1 = ScoreTable::from_pairs("t1", [("a", 1.0), ("b", 0.0)]);
        let t2 = ScoreTable::from_pairs("t2", [("a", 0.0), ("b", 1.0)]);
        let (credence, merged) = merge_comparable(&[(0.5, t1), (0.25, t2)]).unwrap();
        assert_close(credence, 0.75, 1e-12);
        assert_close(merged.scores["a"], 2.0 / 3.0, 1e-12);
        assert_close(merged.scores["b"], 1.0 / 3.0, 1e-12);
    }

    #[test]
    fn merge_zero_credences_yields_zero_table() {
        let t1 = ScoreTable::from_pairs("t1", [("a", 4.0)]);
        let t2 = ScoreTable::from_pairs("t2", [("a", -4.0)]);
        let (credence, merged) = merge_comparable(&[(0.0, t1), (0.0, t2)]).unwrap();
        assert_eq!(credence, 0.0);
        assert_eq!(merged.scores["a"], 0.0);
    }

    #[test]
    fn merge_rejects_mismatched_action_sets() {
        let t1 = ScoreTable::from_pairs("t1", [("a", 1.0), ("b", 0.0)]);
        let t2 = ScoreTable::from_pairs("t2", [("a", 1.0)]);
        let err = merge_comparable(&[(1.0, t1), (1.0, t2)]).unwrap_err();
        assert!(matches!(err, MecError::InconsistentCoverage(_)));
    }

    #[test]
    fn merge_rejects_nonfinite_scores() {
        let t1 = ScoreTable::from_pairs("t1", [("a", f64::NAN)]);
        let err = merge_comparable(&[(1.0, t1)]).unwrap_err();
        assert!(matches!(err, MecError::NonfiniteScore { .. }));
    }

    #[test]
    fn merge_rejects_empty_input() {
        assert_eq!(merge_comparable(&[]).unwrap_err(), MecError::EmptyTable);
    }

    #[test]
    fn borda_distinct_ranks() {
        let table = ScoreTable::from_pairs("t", [("a", 3.0), ("b", 1.0), ("c", 2.0)]);
        let out = borda(&table, &ids(&["a", "b", "c"])).unwrap();
        assert_eq!(out.scores["a"], 2.0);
        assert_eq!(out.scores["b"], -2.0);
        assert_eq!(out.scores["c"], 0.0);
    }

    #[test]
    fn borda_ties_score_equally() {
        let table = ScoreTable::from_pairs("t", [("a", 1.0), ("b", 1.0), ("c", 0.0)]);
        let out = borda(&table, &ids(&["a", "b", "c"])).unwrap();
        assert_eq!(out.scores["a"], 1.0);
        assert_eq!(out.scores["b"], 1.0);
        assert_eq!(out.scores["c"], -2.0);
    }

    #[test]
    fn borda_singleton_is_zero() {
        let table = ScoreTable::from_pairs("t", [("a", 7.0)]);
        let out = borda(&table, &ids(&["a"])).unwrap();
        assert_eq!(out.scores["a"], 0.0);
    }

    #[test]
    fn borda_requires_scores_for_every_id() {
        let table = ScoreTable::from_pairs("t", [("a", 1.0)]);
        let err = borda(&table, &ids(&["a", "b"])).unwrap_err();
        assert_eq!(err, MecError::MissingScore("b".into()));
    }

    #[test]
    fn ordinalize_threshold_is_inclusive() {
        let table = ScoreTable::from_pairs("t", [("a1", 0.8), ("a2", 0.6)]);
        let out = ordinalize(&table, 0.5).unwrap();
        assert_eq!(out.scores["a1"], 1.0);
        assert_eq!(out.scores["a2"], 1.0);

        let boundary = ScoreTable::from_pairs("t", [("a", 0.5)]);
        assert_eq!(ordinalize(&boundary, 0.5).unwrap().scores["a"], 1.0);

        let split = ScoreTable::from_pairs("t", [("a", 0.49), ("b", 0.51)]);
        let out = ordinalize(&split, 0.5).unwrap();
        assert_eq!(out.scores["a"], 0.0);
        assert_eq!(out.scores["b"], 1.0);
    }

    #[test]
    fn ordinalize_rejects_bad_inputs() {
        let table = ScoreTable::from_pairs("t", [("a", 1.5)]);
        assert!(matches!(
            ordinalize(&table, 0.5).unwrap_err(),
            MecError::ProbabilityOutOfRange { .. }
        ));
        let table = ScoreTable::from_pairs("t", [("a", 0.5)]);
        assert!(matches!(
            ordinalize(&table, 1.0).unwrap_err(),
            MecError::ThresholdOutOfRange(_)
        ));
    }

    #[test]
    fn normalize_divides_by_population_std_dev() {
        let table = ScoreTable::from_pairs("t", [("a", 2.0), ("b", 0.0), ("c", -2.0)]);
        let out = normalize(&table, &ids(&["a", "b", "c"])).unwrap();
        // spread over {2, 0, -2} is sqrt(8/3)
        let expected = 2.0 / (8.0f64 / 3.0).sqrt();
        assert_close(out.scores["a"], expected, 1e-9);
        assert_close(out.scores["a"], 1.224744871391589, 1e-9);
        assert_eq!(out.scores["b"], 0.0);
        assert_close(out.scores["c"], -expected, 1e-9);
    }

    #[test]
    fn normalize_zero_spread_yields_zeros() {
        let table = ScoreTable::from_pairs("t", [("a", 5.0), ("b", 5.0), ("c", 5.0)]);
        let out = normalize(&table, &ids(&["a", "b", "c"])).unwrap();
        assert!(out.scores.values().all(|v| *v == 0.0));
    }

    #[test]
    fn normalize_two_actions() {
        let table = ScoreTable::from_pairs("t", [("a", 0.7), ("b", 0.3)]);
        let out = normalize(&table, &ids(&["a", "b"])).unwrap();
        assert_close(out.scores["a"], 3.5, 1e-9);
        assert_close(out.scores["b"], 1.5, 1e-9);
    }

    #[test]
    fn normalize_rejects_empty_general_set() {
        let table = ScoreTable::from_pairs("t", [("a", 1.0)]);
        assert_eq!(
            normalize(&table, &BTreeSet::new()).unwrap_err(),
            MecError::EmptyGeneralSet
        );
    }

    #[test]
    fn aggregate_weighted_sum() {
        let t1 = ScoreTable::from_pairs("t1", [("a", 1.0), ("b", -1.0)]);
        let t2 = ScoreTable::from_pairs("t2", [("a", -1.0), ("b", 1.0)]);
        let out = aggregate(&[(0.6, t1), (0.4, t2)]).unwrap();
        assert_close(out.scores["a"], 0.2, 1e-12);
        assert_close(out.scores["b"], -0.2, 1e-12);
    }

    #[test]
    fn aggregate_single_entry_is_identity() {
        let t = ScoreTable::from_pairs("t", [("a", 0.3), ("b", 0.9)]);
        let out = aggregate(&[(1.0, t)]).unwrap();
        assert_eq!(out.scores["a"], 0.3);
        assert_eq!(out.scores["b"], 0.9);
    }

    #[test]
    fn aggregate_accepts_weights_above_one() {
        let t1 = ScoreTable::from_pairs("t1", [("a", 0.5)]);
        let t2 = ScoreTable::from_pairs("t2", [("a", -0.25)]);
        let out = aggregate(&[(2.0, t1), (1.0, t2)]).unwrap();
        assert_close(out.scores["a"], 0.75, 1e-12);
    }

    #[test]
    fn aggregate_rejects_coverage_mismatch() {
        let t1 = ScoreTable::from_pairs("t1", [("a", 1.0)]);
        let t2 = ScoreTable::from_pairs("t2", [("b", 1.0)]);
        assert!(matches!(
            aggregate(&[(1.0, t1), (1.0, t2)]).unwrap_err(),
            MecError::InconsistentCoverage(_)
        ));
    }

    #[test]
    fn select_unique_maximum() {
        let t = ScoreTable::from_pairs("t", [("a", 0.2), ("b", -0.2)]);
        assert_eq!(select(&t).unwrap(), "a");
    }

    #[test]
    fn select_breaks_ties_lexicographically() {
        let t = ScoreTable::from_pairs("t", [("a", 0.5), ("b", 0.5)]);
        assert_eq!(select(&t).unwrap(), "a");

        let t = ScoreTable::from_pairs("t", [("z", 1.0), ("aa", 1.0), ("m", 0.9)]);
        assert_eq!(select(&t).unwrap(), "aa");
    }

    #[test]
    fn select_rejects_empty_table() {
        let t = ScoreTable::new("t", BTreeMap::new());
        assert_eq!(select(&t).unwrap_err(), MecError::EmptyTable);
    }

    fn single_theory_situation(kind: TheoryKind, pairs: &[(&str, f64)]) -> DecisionSituation {
        DecisionSituation {
            decision_maker: None,
            time: None,
            actions: pairs.iter().map(|(id, _)| Action::new(*id)).collect(),
            general_set: None,
            theories: vec![TheorySpec::new("t", kind, 1.0).unwrap()],
            score_tables: vec![ScoreTable::from_pairs(
                "t",
                pairs.iter().map(|(id, v)| (*id, *v)),
            )],
        }
    }

    #[test]
    fn run_single_comparable_theory() {
        let situation = single_theory_situation(
            TheoryKind::CardinalComparable,
            &[("a", 0.7), ("b", 0.3)],
        );
        let result = run_mec(&situation, &MecOptions::default()).unwrap();
        assert_close(result.expected["a"], 3.5, 1e-9);
        assert_close(result.expected["b"], 1.5, 1e-9);
        assert_eq!(result.ranking, vec!["a", "b"]);
        assert_eq!(result.selected, "a");
        assert_eq!(result.merged_credence, Some(1.0));
        assert_eq!(result.contributions.len(), 1);
        assert!(result.contributions.contains_key(MERGED_KEY));
    }

    #[test]
    fn run_single_ordinal_theory_preserves_ranking() {
        let situation = single_theory_situation(
            TheoryKind::Ordinal,
            &[("a", 2.0), ("b", 1.0), ("c", 0.0)],
        );
        let result = run_mec(&situation, &MecOptions::default()).unwrap();
        assert_eq!(result.ranking, vec!["a", "b", "c"]);
        assert_eq!(result.merged_credence, None);
    }

    #[test]
    fn run_cardinal_plus_opposed_ordinal_ties() {
        // Values derived with an exact-arithmetic reference computation:
        // the cardinal table normalizes to {a: 2, b: 0} (spread 0.5, no mean
        // subtraction) and the ordinal table to {a: -1, b: 1}, so both
        // actions land on an expected score of 1 and the tie goes to "a".
        let situation = DecisionSituation {
            decision_maker: None,
            time: None,
            actions: vec![Action::new("a"), Action::new("b")],
            general_set: None,
            theories: vec![
                TheorySpec::new("card", TheoryKind::CardinalComparable, 1.0).unwrap(),
                TheorySpec::new("ord", TheoryKind::Ordinal, 1.0).unwrap(),
            ],
            score_tables: vec![
                ScoreTable::from_pairs("card", [("a", 1.0), ("b", 0.0)]),
                ScoreTable::from_pairs("ord", [("a", 0.0), ("b", 1.0)]),
            ],
        };
        let result = run_mec(&situation, &MecOptions::default()).unwrap();
        assert_close(result.expected["a"], 1.0, 1e-12);
        assert_close(result.expected["b"], 1.0, 1e-12);
        assert_eq!(result.selected, "a");
        assert_close(result.contributions[MERGED_KEY]["a"], 2.0, 1e-12);
        assert_close(result.contributions[MERGED_KEY]["b"], 0.0, 1e-12);
        assert_close(result.contributions["ord"]["a"], -1.0, 1e-12);
        assert_close(result.contributions["ord"]["b"], 1.0, 1e-12);
    }

    #[test]
    fn run_rejects_zero_theories() {
        let situation = DecisionSituation {
            decision_maker: None,
            time: None,
            actions: vec![Action::new("a")],
            general_set: None,
            theories: vec![],
            score_tables: vec![],
        };
        assert!(matches!(
            run_mec(&situation, &MecOptions::default()).unwrap_err(),
            MecError::InvalidSituation(_)
        ));
    }

    #[test]
    fn run_rejects_bad_threshold() {
        let situation = single_theory_situation(
            TheoryKind::CardinalComparable,
            &[("a", 0.7), ("b", 0.3)],
        );
        assert!(matches!(
            run_mec(&situation, &MecOptions::with_threshold(1.2)).unwrap_err(),
            MecError::ThresholdOutOfRange(_)
        ));
    }

    #[test]
    fn run_general_set_drives_normalization() {
        // Borda is taken over the union {a, b, g1, g2} while the spread is
        // measured over the general set only.
        let mut situation = single_theory_situation(
            TheoryKind::Ordinal,
            &[("a", 3.0), ("b", 0.0)],
        );
        situation.general_set = Some(vec!["g1".into(), "g2".into(), "a".into(), "b".into()]);
        situation.score_tables[0]
            .scores
            .extend([("g1".to_string(), 2.0), ("g2".to_string(), 1.0)]);
        let result = run_mec(&situation, &MecOptions::default()).unwrap();
        // Pairwise scores over the union: a=3, g1=1, g2=-1, b=-3; the
        // reference spread over all four is sqrt(5).
        let sigma = 5.0f64.sqrt();
        assert_close(result.expected["a"], 3.0 / sigma, 1e-9);
        assert_close(result.expected["b"], -3.0 / sigma, 1e-9);
        assert_eq!(result.ranking, vec!["a", "b"]);
    }

    #[test]
    fn run_probability_ordinal_uses_threshold() {
        let mut situation = single_theory_situation(
            TheoryKind::Ordinal,
            &[("a", 0.9), ("b", 0.4), ("c", 0.5)],
        );
        situation.theories[0].scores_are_probabilities = true;
        let result = run_mec(&situation, &MecOptions::with_threshold(0.5)).unwrap();
        // a and c binarize to 1, b to 0: a and c tie ahead of b.
        assert_eq!(result.ranking, vec!["a", "c", "b"]);
        assert_close(result.expected["a"], result.expected["c"], 1e-12);

        // Without a threshold the probabilities rank as plain scores.
        let result = run_mec(&situation, &MecOptions::default()).unwrap();
        assert_eq!(result.ranking, vec!["a", "c", "b"]);
        assert!(result.expected["c"] > result.expected["b"]);
        assert!(result.expected["a"] > result.expected["c"]);
    }

    #[test]
    fn run_is_deterministic() {
        let situation = single_theory_situation(
            TheoryKind::CardinalComparable,
            &[("a", 0.31), ("b", 0.77), ("c", -0.2)],
        );
        let first = run_mec(&situation, &MecOptions::default()).unwrap();
        let second = run_mec(&situation, &MecOptions::default()).unwrap();
        assert_eq!(first, second);
    }

    #[test]
    fn validation_names_offending_theory() {
        let mut situation = single_theory_situation(
            TheoryKind::CardinalComparable,
            &[("a", 0.7), ("b", 0.3)],
        );
        situation.theories[0].credence = 1.5;
        let err = run_mec(&situation, &MecOptions::default()).unwrap_err();
        assert_eq!(
            err,
            MecError::CredenceOutOfRange {
                theory: "t".into(),
                value: 1.5
            }
        );
        assert!(err.to_string().contains("'t'"));
    }

    #[test]
    fn reserved_theory_id_is_rejected() {
        assert!(TheorySpec::new(MERGED_KEY, TheoryKind::Ordinal, 1.0).is_err());
    }
}
