//! Naive reference implementations for testing.
//!
//! Everything here re-derives results with the most direct code possible —
//! double loops, explicit accumulators, no shared helpers with the
//! optimized paths — so tests can compare two independent routes. Inputs
//! are expected to be small; [`brute_force_mec`] enforces its size limits.

use std::collections::{BTreeMap, BTreeSet};

use mec_core::{
    DecisionSituation, MecError, MecResult, ScoreTable, TheoryKind, MERGED_KEY,
};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::HarnessError;

pub const MAX_ORACLE_ACTIONS: usize = 8;
pub const MAX_ORACLE_THEORIES: usize = 6;

fn flip_zero(value: f64) -> f64 {
    if value == 0.0 {
        0.0
    } else {
        value
    }
}

/// Pairwise rank scores by direct counting of wins and losses.
/// Expects `scores` to cover `over`; test-only.
pub fn borda_pairwise(scores: &ScoreTable, over: &BTreeSet<String>) -> BTreeMap<String, f64> {
    let mut out = BTreeMap::new();
    for id in over {
        let mine = scores.scores[id];
        let mut wins = 0i64;
        let mut losses = 0i64;
        for other in over {
            if scores.scores[other] < mine {
                wins += 1;
            }
            if scores.scores[other] > mine {
                losses += 1;
            }
        }
        out.insert(id.clone(), (wins - losses) as f64);
    }
    out
}

/// Exhaustive threshold search scoring every candidate by a full pass over
/// the samples. `None` when the labels are single-class.
pub fn calibrate_threshold_naive(labeled: &[(f64, bool)]) -> Option<f64> {
    let positives = labeled.iter().filter(|(_, label)| *label).count();
    if positives == 0 || positives == labeled.len() {
        return None;
    }

    let mut distinct: Vec<f64> = labeled.iter().map(|(score, _)| *score).collect();
    distinct.sort_by(f64::total_cmp);
    distinct.dedup();

    let mut candidates = vec![distinct[0] - 1.0];
    for i in 0..distinct.len() - 1 {
        candidates.push((distinct[i] + distinct[i + 1]) / 2.0);
    }
    candidates.push(distinct[distinct.len() - 1] + 1.0);

    let mut best_threshold = candidates[0];
    let mut best_correct = -1i64;
    for threshold in candidates {
        let mut correct = 0i64;
        for (score, label) in labeled {
            let predicted = *score >= threshold;
            if predicted == *label {
                correct += 1;
            }
        }
        if correct > best_correct {
            best_correct = correct;
            best_threshold = threshold;
        }
    }
    Some(best_threshold)
}

/// Straightforward re-derivation of the whole pipeline, used as an oracle.
/// Ordinal probability payloads are ranked as-is; use
/// [`brute_force_mec_with_threshold`] to exercise the binarization path.
pub fn brute_force_mec(situation: &DecisionSituation) -> Result<MecResult, HarnessError> {
    brute_force_mec_with_threshold(situation, None)
}

pub fn brute_force_mec_with_threshold(
    situation: &DecisionSituation,
    threshold: Option<f64>,
) -> Result<MecResult, HarnessError> {
    situation.validate()?;
    let n_actions = situation.actions.len();
    let n_theories = situation.theories.len();
    if n_actions > MAX_ORACLE_ACTIONS || n_theories > MAX_ORACLE_THEORIES {
        return Err(HarnessError::SituationTooLarge {
            actions: n_actions,
            theories: n_theories,
        });
    }
    if let Some(cut) = threshold {
        if !(cut > 0.0 && cut < 1.0) {
            return Err(MecError::ThresholdOutOfRange(cut).into());
        }
    }

    let general: Vec<String> = situation.general_ids().into_iter().collect();
    let mut union: Vec<String> = general.clone();
    for action in &situation.actions {
        if !union.contains(&action.id) {
            union.push(action.id.clone());
        }
    }
    union.sort();
    let value_of = |theory_id: &str, action_id: &str| -> f64 {
        situation.table_for(theory_id).expect("validated").scores[action_id]
    };

    // step 1: merged comparable table over the union
    let mut entries: Vec<(String, f64, Vec<f64>)> = Vec::new();
    let mut merged_credence = None;
    {
        let comparable: Vec<_> = situation
            .theories
            .iter()
            .filter(|t| matches!(t.kind, TheoryKind::CardinalComparable))
            .collect();
        if !comparable.is_empty() {
            let mut credence_sum = 0.0;
            for theory in &comparable {
                credence_sum += theory.credence;
            }
            let mut merged = Vec::with_capacity(union.len());
            for id in &union {
                let mut value = 0.0;
                if credence_sum != 0.0 {
                    let mut weighted = 0.0;
                    for theory in &comparable {
                        weighted += theory.credence * value_of(&theory.id, id);
                    }
                    value = weighted / credence_sum;
                }
                merged.push(value);
            }
            entries.push((MERGED_KEY.to_string(), credence_sum, merged));
            merged_credence = Some(credence_sum);
        }
    }

    // step 2: pairwise scores for ordinal theories, incomparables as-is
    for theory in &situation.theories {
        match theory.kind {
            TheoryKind::CardinalComparable => {}
            TheoryKind::CardinalIncomparable => {
                let values = union.iter().map(|id| value_of(&theory.id, id)).collect();
                entries.push((theory.id.clone(), theory.credence, values));
            }
            TheoryKind::Ordinal => {
                let mut raw: Vec<f64> =
                    union.iter().map(|id| value_of(&theory.id, id)).collect();
                if theory.scores_are_probabilities {
                    if let Some(cut) = threshold {
                        for value in &mut raw {
                            *value = if *value >= cut { 1.0 } else { 0.0 };
                        }
                    }
                }
                let mut ranked = Vec::with_capacity(raw.len());
                for i in 0..raw.len() {
                    let mut wins = 0i64;
                    let mut losses = 0i64;
                    for j in 0..raw.len() {
                        if raw[j] < raw[i] {
                            wins += 1;
                        }
                        if raw[j] > raw[i] {
                            losses += 1;
                        }
                    }
                    ranked.push((wins - losses) as f64);
                }
                entries.push((theory.id.clone(), theory.credence, ranked));
            }
        }
    }

    // step 3: divide by the spread over the general ids
    let general_positions: Vec<usize> = general
        .iter()
        .map(|g| union.iter().position(|u| u == g).expect("general in union"))
        .collect();
    let mut normalized: Vec<(String, f64, Vec<f64>)> = Vec::new();
    for (key, weight, values) in entries {
        let reference: Vec<f64> = general_positions.iter().map(|p| values[*p]).collect();
        let mut constant = true;
        for value in &reference {
            if *value != reference[0] {
                constant = false;
            }
        }
        let scaled = if constant {
            vec![0.0; values.len()]
        } else {
            let mut total = 0.0;
            for value in &reference {
                total += value;
            }
            let mean = total / reference.len() as f64;
            let mut squares = 0.0;
            for value in &reference {
                squares += (value - mean) * (value - mean);
            }
            let spread = (squares / reference.len() as f64).sqrt();
            values.iter().map(|v| flip_zero(v / spread)).collect()
        };
        normalized.push((key, weight, scaled));
    }

    // step 4: weighted sum over the decision actions
    let mut contributions: BTreeMap<String, BTreeMap<String, f64>> = BTreeMap::new();
    let mut expected: BTreeMap<String, f64> = BTreeMap::new();
    for action in &situation.actions {
        let position = union
            .iter()
            .position(|u| u == &action.id)
            .expect("action in union");
        let mut total = 0.0;
        for (key, weight, values) in &normalized {
            let contribution = flip_zero(weight * values[position]);
            contributions
                .entry(key.clone())
                .or_default()
                .insert(action.id.clone(), contribution);
            total += contribution;
        }
        expected.insert(action.id.clone(), flip_zero(total));
    }

    let mut ranking: Vec<String> = expected.keys().cloned().collect();
    ranking.sort_by(|a, b| {
        expected[b]
            .total_cmp(&expected[a])
            .then_with(|| a.cmp(b))
    });
    let selected = ranking[0].clone();

    Ok(MecResult {
        expected,
        ranking,
        contributions,
        selected,
        merged_credence,
    })
}

/// Draw a random situation within the oracle size limits, mixing all three
/// theory kinds, zero-variance (constant) tables, and general sets that may
/// extend beyond or cover only part of the decision set.
pub fn random_situation(rng: &mut ChaCha8Rng, allow_probability_flags: bool) -> DecisionSituation {
    use mec_core::{Action, TheorySpec};

    let n_actions = rng.random_range(1..=MAX_ORACLE_ACTIONS);
    let action_ids: Vec<String> = (1..=n_actions).map(|i| format!("a{i}")).collect();

    let general_set = match rng.random_range(0..10) {
        // usually the decision set itself
        0..=5 => None,
        // a strict superset
        6..=8 => {
            let extras = rng.random_range(1..=3);
            let mut ids = action_ids.clone();
            ids.extend((1..=extras).map(|i| format!("x{i}")));
            Some(ids)
        }
        // a partial overlap: a prefix of the actions, maybe plus extras
        _ => {
            let keep = rng.random_range(1..=n_actions);
            let mut ids: Vec<String> = action_ids[..keep].to_vec();
            if rng.random::<f64>() < 0.5 {
                ids.push("x1".to_string());
            }
            Some(ids)
        }
    };

    let mut scoring: BTreeSet<String> = action_ids.iter().cloned().collect();
    if let Some(general) = &general_set {
        scoring.extend(general.iter().cloned());
    }

    let n_theories = rng.random_range(1..=MAX_ORACLE_THEORIES);
    let mut theories = Vec::with_capacity(n_theories);
    let mut score_tables = Vec::with_capacity(n_theories);
    for i in 0..n_theories {
        let id = format!("t{}", i + 1);
        let kind = match rng.random_range(0..3) {
            0 => TheoryKind::CardinalComparable,
            1 => TheoryKind::CardinalIncomparable,
            _ => TheoryKind::Ordinal,
        };
        let credence = if rng.random::<f64>() < 0.1 {
            0.0
        } else {
            rng.random::<f64>()
        };
        let probabilities =
            allow_probability_flags && kind == TheoryKind::Ordinal && rng.random::<f64>() < 0.5;
        let constant = rng.random::<f64>() < 0.15;

        let constant_value = if probabilities {
            rng.random::<f64>()
        } else {
            rng.random_range(-10.0..10.0)
        };
        let scores = scoring.iter().map(|action| {
            let value = if constant {
                constant_value
            } else if probabilities {
                rng.random::<f64>()
            } else {
                rng.random_range(-10.0..10.0)
            };
            (action.clone(), value)
        });
        score_tables.push(ScoreTable::from_pairs(id.clone(), scores));
        theories.push(TheorySpec {
            id,
            kind,
            credence,
            scores_are_probabilities: probabilities,
        });
    }

    DecisionSituation {
        decision_maker: None,
        time: None,
        actions: action_ids.iter().map(|id| Action::new(id.clone())).collect(),
        general_set,
        theories,
        score_tables,
    }
}
