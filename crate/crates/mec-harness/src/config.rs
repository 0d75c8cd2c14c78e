//! Simulation configuration and reporting.

use serde::{Deserialize, Serialize};

use crate::error::HarnessError;

/// Configuration of a synthetic-evaluator experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SynthConfig {
    pub seed: u64,
    pub trials: usize,
    pub n_evaluators: usize,
    /// Probability that an evaluator ranks the true action first,
    /// in `(0.5, 1.0]` (better than a coin, up to noise-free).
    pub evaluator_accuracy: f64,
    pub n_actions: usize,
    /// Per-evaluator credences; empty means all 1.0.
    #[serde(default)]
    pub credences: Vec<f64>,
}

impl SynthConfig {
    pub fn new(seed: u64, trials: usize, n_evaluators: usize, evaluator_accuracy: f64) -> Self {
        Self {
            seed,
            trials,
            n_evaluators,
            evaluator_accuracy,
            n_actions: 2,
            credences: Vec::new(),
        }
    }

    pub fn validate(&self) -> Result<(), HarnessError> {
        if self.trials < 1 {
            return Err(HarnessError::InvalidConfig("trials must be >= 1".into()));
        }
        if self.n_evaluators < 1 {
            return Err(HarnessError::InvalidConfig(
                "n_evaluators must be >= 1".into(),
            ));
        }
        if !(self.evaluator_accuracy > 0.5 && self.evaluator_accuracy <= 1.0) {
            return Err(HarnessError::InvalidConfig(format!(
                "evaluator_accuracy {} outside (0.5, 1.0]",
                self.evaluator_accuracy
            )));
        }
        if self.n_actions < 2 {
            return Err(HarnessError::InvalidConfig(
                "n_actions must be >= 2".into(),
            ));
        }
        if !self.credences.is_empty() {
            if self.credences.len() != self.n_evaluators {
                return Err(HarnessError::InvalidConfig(format!(
                    "{} credences for {} evaluators",
                    self.credences.len(),
                    self.n_evaluators
                )));
            }
            for credence in &self.credences {
                if !(*credence >= 0.0 && *credence <= 1.0) {
                    return Err(HarnessError::InvalidConfig(format!(
                        "credence {credence} outside [0, 1]"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn resolved_credences(&self) -> Vec<f64> {
        if self.credences.is_empty() {
            vec![1.0; self.n_evaluators]
        } else {
            self.credences.clone()
        }
    }
}

/// Top-1 accuracies of every evaluator alone and of the aggregate, over a
/// fixed number of trials.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentReport {
    pub per_evaluator_accuracy: Vec<f64>,
    pub mec_accuracy: f64,
    pub trials: usize,
    pub seed: u64,
}

impl ExperimentReport {
    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Aligned two-column table: one row per evaluator, final row MEC.
    pub fn to_table_string(&self) -> String {
        let ids: Vec<String> = (1..=self.per_evaluator_accuracy.len())
            .map(|i| format!("e{i}"))
            .collect();
        let width = ids
            .iter()
            .map(|id| id.len())
            .chain(["evaluator".len(), "MEC".len()])
            .max()
            .unwrap_or(0);
        let mut out = format!("{:<width$}  accuracy\n", "evaluator");
        for (id, accuracy) in ids.iter().zip(&self.per_evaluator_accuracy) {
            out.push_str(&format!("{id:<width$}  {accuracy:.6}\n"));
        }
        out.push_str(&format!("{:<width$}  {:.6}\n", "MEC", self.mec_accuracy));
        out
    }
}
