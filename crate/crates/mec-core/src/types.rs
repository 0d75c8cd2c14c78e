//! Domain types for decision situations and aggregation results.
//!
//! All maps are `BTreeMap`s so iteration order, serialization, and
//! tie-breaking are deterministic.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::MecError;

/// Contribution key under which the merged comparable-cardinal theory is
/// reported. Reserved: no theory in a situation may use it as its id.
pub const MERGED_KEY: &str = "merged";

/// How a theory's scores relate to scores of other theories.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoryKind {
    /// Cardinal scores on a scale shared with other comparable theories;
    /// merged into a single table before normalization.
    CardinalComparable,
    /// Cardinal scores meaningful only within the theory; normalized on
    /// their own, never merged.
    CardinalIncomparable,
    /// Scores carry ranking information only; converted to tie-aware
    /// pairwise scores before normalization.
    Ordinal,
}

/// One normative theory under consideration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheorySpec {
    pub id: String,
    pub kind: TheoryKind,
    /// Degree of belief in the theory, in `[0, 1]`. Credences are not
    /// required to sum to 1 across theories.
    pub credence: f64,
    /// Declares an ordinal theory's scores as probabilities in `[0, 1]`,
    /// eligible for threshold binarization before ranking.
    #[serde(default)]
    pub scores_are_probabilities: bool,
}

impl TheorySpec {
    pub fn new(
        id: impl Into<String>,
        kind: TheoryKind,
        credence: f64,
    ) -> Result<Self, MecError> {
        let spec = Self {
            id: id.into(),
            kind,
            credence,
            scores_are_probabilities: false,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), MecError> {
        if self.id.is_empty() {
            return Err(MecError::InvalidSituation("empty theory id".into()));
        }
        if self.id == MERGED_KEY {
            return Err(MecError::InvalidSituation(format!(
                "theory id '{MERGED_KEY}' is reserved"
            )));
        }
        if !(self.credence >= 0.0 && self.credence <= 1.0) {
            return Err(MecError::CredenceOutOfRange {
                theory: self.id.clone(),
                value: self.credence,
            });
        }
        Ok(())
    }
}

/// Raw choiceworthiness scores of one theory, keyed by action id.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoreTable {
    pub theory_id: String,
    pub scores: BTreeMap<String, f64>,
}

impl ScoreTable {
    pub fn new(theory_id: impl Into<String>, scores: BTreeMap<String, f64>) -> Self {
        Self {
            theory_id: theory_id.into(),
            scores,
        }
    }

    pub fn from_pairs<K, I>(theory_id: impl Into<String>, pairs: I) -> Self
    where
        K: Into<String>,
        I: IntoIterator<Item = (K, f64)>,
    {
        Self::new(
            theory_id,
            pairs.into_iter().map(|(k, v)| (k.into(), v)).collect(),
        )
    }

    pub fn get(&self, action: &str) -> Option<f64> {
        self.scores.get(action).copied()
    }

    pub fn check_finite(&self) -> Result<(), MecError> {
        for (action, value) in &self.scores {
            if !value.is_finite() {
                return Err(MecError::NonfiniteScore {
                    table: self.theory_id.clone(),
                    action: action.clone(),
                });
            }
        }
        Ok(())
    }
}

/// A candidate action.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Action {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub text: Option<String>,
}

impl Action {
    pub fn new(id: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            text: None,
        }
    }

    pub fn with_text(id: impl Into<String>, text: impl Into<String>) -> Self {
        Self {
            id: id.into(),
            text: Some(text.into()),
        }
    }
}

/// Everything the pipeline needs for one decision: the candidate actions,
/// the theories with their credences, one score table per theory, and the
/// optional general reference set used for normalization.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DecisionSituation {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub decision_maker: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub time: Option<String>,
    pub actions: Vec<Action>,
    /// Reference action ids over which normalization spread is measured.
    /// Defaults to the decision actions; need not contain them. Any id
    /// listed here must be scored by every theory.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub general_set: Option<Vec<String>>,
    pub theories: Vec<TheorySpec>,
    pub score_tables: Vec<ScoreTable>,
}

impl DecisionSituation {
    /// Ids of the candidate actions.
    pub fn action_ids(&self) -> BTreeSet<String> {
        self.actions.iter().map(|a| a.id.clone()).collect()
    }

    /// The general reference set, defaulting to the decision actions.
    pub fn general_ids(&self) -> BTreeSet<String> {
        match &self.general_set {
            Some(ids) => ids.iter().cloned().collect(),
            None => self.action_ids(),
        }
    }

    /// Union of general and decision action ids; every theory must score
    /// all of them.
    pub fn scoring_ids(&self) -> BTreeSet<String> {
        let mut ids = self.general_ids();
        ids.extend(self.actions.iter().map(|a| a.id.clone()));
        ids
    }

    pub fn table_for(&self, theory_id: &str) -> Option<&ScoreTable> {
        self.score_tables.iter().find(|t| t.theory_id == theory_id)
    }

    /// Check every structural invariant: nonempty unique actions, nonempty
    /// unique theories each with exactly one table, full finite coverage of
    /// general and action ids, and probability ranges where declared.
    pub fn validate(&self) -> Result<(), MecError> {
        if self.actions.is_empty() {
            return Err(MecError::InvalidSituation("no actions".into()));
        }
        let mut seen_actions = BTreeSet::new();
        for action in &self.actions {
            if action.id.is_empty() {
                return Err(MecError::InvalidSituation("empty action id".into()));
            }
            if !seen_actions.insert(action.id.as_str()) {
                return Err(MecError::InvalidSituation(format!(
                    "duplicate action id '{}'",
                    action.id
                )));
            }
        }

        if let Some(general) = &self.general_set {
            if general.is_empty() {
                return Err(MecError::EmptyGeneralSet);
            }
            if general.iter().any(|id| id.is_empty()) {
                return Err(MecError::InvalidSituation(
                    "empty id in general set".into(),
                ));
            }
        }

        if self.theories.is_empty() {
            return Err(MecError::InvalidSituation("no theories".into()));
        }
        let mut seen_theories = BTreeSet::new();
        for theory in &self.theories {
            theory.validate()?;
            if !seen_theories.insert(theory.id.as_str()) {
                return Err(MecError::InvalidSituation(format!(
                    "duplicate theory id '{}'",
                    theory.id
                )));
            }
        }
        for table in &self.score_tables {
            if !seen_theories.contains(table.theory_id.as_str()) {
                return Err(MecError::InvalidSituation(format!(
                    "score table '{}' does not match any theory",
                    table.theory_id
                )));
            }
        }

        let scoring = self.scoring_ids();
        for theory in &self.theories {
            let mut tables = self
                .score_tables
                .iter()
                .filter(|t| t.theory_id == theory.id);
            let table = tables.next().ok_or_else(|| {
                MecError::InvalidSituation(format!(
                    "theory '{}' has no score table",
                    theory.id
                ))
            })?;
            if tables.next().is_some() {
                return Err(MecError::InvalidSituation(format!(
                    "theory '{}' has more than one score table",
                    theory.id
                )));
            }
            table.check_finite()?;
            for id in &scoring {
                let value = table.get(id).ok_or_else(|| {
                    MecError::InconsistentCoverage(format!(
                        "table '{}' is missing a score for '{}'",
                        theory.id, id
                    ))
                })?;
                if theory.scores_are_probabilities && !(0.0..=1.0).contains(&value) {
                    return Err(MecError::ProbabilityOutOfRange {
                        action: id.clone(),
                        value,
                    });
                }
            }
        }
        Ok(())
    }
}

/// Outcome of a pipeline run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MecResult {
    /// Expected choiceworthiness per decision action.
    pub expected: BTreeMap<String, f64>,
    /// Action ids sorted by descending expected score, ties broken by
    /// ascending id.
    pub ranking: Vec<String>,
    /// Credence-weighted normalized scores per contribution key: one entry
    /// per ordinal or incomparable theory, plus [`MERGED_KEY`] when at least
    /// one comparable theory is present.
    pub contributions: BTreeMap<String, BTreeMap<String, f64>>,
    /// The maximizing action; always `ranking[0]`.
    pub selected: String,
    /// Summed credence of the merged comparable theories, present when the
    /// situation contains at least one of them.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub merged_credence: Option<f64>,
}
