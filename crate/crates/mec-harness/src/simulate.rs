//! Seeded synthetic trials and the ensemble experiment.

use mec_core::{run_mec, select, Action, DecisionSituation, MecOptions, ScoreTable, TheoryKind, TheorySpec};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::config::{ExperimentReport, SynthConfig};
use crate::error::HarnessError;

/// Per-trial substream: same key for every trial, the trial index as the
/// stream id. Trials are independent and reproducible in any order.
pub fn trial_rng(seed: u64, trial_index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial_index);
    rng
}

/// Draw one synthetic decision situation and its planted best action.
///
/// A ground-truth action is picked uniformly. Each evaluator independently
/// ranks it first with probability `evaluator_accuracy`; otherwise the
/// truth lands uniformly on a non-top position among a shuffled field. The
/// evaluator's table assigns the descending ladder n-1, n-2, ..., 0 along
/// its ranking, so scores are distinct and every evaluator votes with the
/// same margins.
pub fn generate_trial(
    rng: &mut ChaCha8Rng,
    config: &SynthConfig,
) -> Result<(DecisionSituation, String), HarnessError> {
    config.validate()?;
    let n = config.n_actions;
    let action_ids: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
    let truth_index = rng.random_range(0..n);
    let credences = config.resolved_credences();

    let mut theories = Vec::with_capacity(credences.len());
    let mut score_tables = Vec::with_capacity(credences.len());
    for (i, credence) in credences.iter().enumerate() {
        let id = format!("e{}", i + 1);
        let ranks_truth_first = rng.random::<f64>() < config.evaluator_accuracy;
        let mut order: Vec<usize> = (0..n).filter(|index| *index != truth_index).collect();
        order.shuffle(rng);
        if ranks_truth_first {
            order.insert(0, truth_index);
        } else {
            let slot = rng.random_range(1..n);
            order.insert(slot, truth_index);
        }

        theories.push(TheorySpec {
            id: id.clone(),
            kind: TheoryKind::CardinalComparable,
            credence: *credence,
            scores_are_probabilities: false,
        });
        score_tables.push(ScoreTable::from_pairs(
            id,
            order.iter().enumerate().map(|(position, action)| {
                (action_ids[*action].clone(), (n - 1 - position) as f64)
            }),
        ));
    }

    let situation = DecisionSituation {
        decision_maker: None,
        time: None,
        actions: action_ids.iter().map(|id| Action::new(id.clone())).collect(),
        general_set: None,
        theories,
        score_tables,
    };
    Ok((situation, action_ids[truth_index].clone()))
}

/// Run `config.trials` independent trials and report the top-1 accuracy of
/// each evaluator alone and of the aggregate. Trials execute in parallel;
/// accuracies come from integer hit counts, so the result is independent of
/// scheduling order.
pub fn run_experiment(config: &SynthConfig) -> Result<ExperimentReport, HarnessError> {
    config.validate()?;
    let n_evaluators = config.n_evaluators;

    let (evaluator_hits, mec_hits) = (0..config.trials as u64)
        .into_par_iter()
        .map(|trial| -> Result<(Vec<u64>, u64), HarnessError> {
            let mut rng = trial_rng(config.seed, trial);
            let (situation, truth) = generate_trial(&mut rng, config)?;
            let result = run_mec(&situation, &MecOptions::default())?;
            let per_evaluator = situation
                .theories
                .iter()
                .map(|theory| {
                    let table = situation.table_for(&theory.id).expect("table exists");
                    u64::from(select(table).expect("nonempty table") == truth)
                })
                .collect();
            Ok((per_evaluator, u64::from(result.selected == truth)))
        })
        .try_reduce(
            || (vec![0u64; n_evaluators], 0u64),
            |mut acc, item| {
                for (total, hit) in acc.0.iter_mut().zip(&item.0) {
                    *total += hit;
                }
                acc.1 += item.1;
                Ok(acc)
            },
        )?;

    let trials = config.trials as f64;
    Ok(ExperimentReport {
        per_evaluator_accuracy: evaluator_hits.iter().map(|hits| *hits as f64 / trials).collect(),
        mec_accuracy: mec_hits as f64 / trials,
        trials: config.trials,
        seed: config.seed,
    })
}
