//! Scoring conventions of the three stock theory models.

use std::collections::BTreeMap;

use mec_core::ScoreTable;
use serde::{Deserialize, Serialize};

use crate::error::EvaluatorError;

/// Input prefix handed to a deontology scorer ahead of the action text.
pub const DEONTOLOGY_PROMPT_PREFIX: &str = "I am a human [SEP] ";

/// Character-trait term -> sentiment in [-1, 1]. Terms are lower-cased on
/// construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SentimentMap {
    pub entries: BTreeMap<String, f64>,
}

impl SentimentMap {
    /// Build a map from raw entries, lower-casing terms and validating the
    /// sentiment range. Two spellings of the same term are rejected.
    pub fn new<K, I>(entries: I) -> Result<Self, EvaluatorError>
    where
        K: AsRef<str>,
        I: IntoIterator<Item = (K, f64)>,
    {
        let mut map = BTreeMap::new();
        for (term, value) in entries {
            let term = term.as_ref().trim().to_lowercase();
            if term.is_empty() {
                return Err(EvaluatorError::Parse {
                    path: String::new(),
                    message: "empty sentiment term".into(),
                });
            }
            if !value.is_finite() {
                return Err(EvaluatorError::NonfiniteValue(term));
            }
            if !(-1.0..=1.0).contains(&value) {
                return Err(EvaluatorError::SentimentOutOfRange { term, value });
            }
            if map.insert(term.clone(), value).is_some() {
                return Err(EvaluatorError::DuplicateTerm(term));
            }
        }
        Ok(Self { entries: map })
    }

    pub fn get(&self, term: &str) -> Option<f64> {
        self.entries.get(&term.to_lowercase()).copied()
    }
}

/// Per-action trait probabilities emitted by a virtue model. Values are
/// independent per-pair outputs and need not sum to 1.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TraitDistribution {
    pub action_id: String,
    pub probs: BTreeMap<String, f64>,
}

impl TraitDistribution {
    pub fn new<K, I>(action_id: impl Into<String>, probs: I) -> Result<Self, EvaluatorError>
    where
        K: Into<String>,
        I: IntoIterator<Item = (K, f64)>,
    {
        let probs: BTreeMap<String, f64> =
            probs.into_iter().map(|(k, v)| (k.into(), v)).collect();
        if probs.is_empty() {
            return Err(EvaluatorError::EmptyTable);
        }
        for (term, value) in &probs {
            if !(*value >= 0.0 && *value <= 1.0) {
                return Err(EvaluatorError::TraitProbabilityOutOfRange {
                    term: term.clone(),
                    value: *value,
                });
            }
        }
        Ok(Self {
            action_id: action_id.into(),
            probs,
        })
    }
}

/// Utilitarian convention: the model's scalar output is the
/// choiceworthiness score as-is.
pub fn utilitarian_score(raw: &ScoreTable) -> Result<ScoreTable, EvaluatorError> {
    if raw.scores.is_empty() {
        return Err(EvaluatorError::EmptyTable);
    }
    for (action, value) in &raw.scores {
        if !value.is_finite() {
            return Err(EvaluatorError::NonfiniteValue(action.clone()));
        }
    }
    Ok(raw.clone())
}

/// Deontology convention: format the scorer input for an action statement.
/// The scorer's probability of permissibility is the choiceworthiness score.
pub fn deontology_prompt(action_text: &str) -> Result<String, EvaluatorError> {
    if action_text.is_empty() {
        return Err(EvaluatorError::EmptyActionText);
    }
    Ok(format!("{DEONTOLOGY_PROMPT_PREFIX}{action_text}"))
}

/// Virtue convention: the sentiment of the most probable trait is the
/// action's choiceworthiness score. Only traits present in the sentiment
/// map count; probability ties go to the lexicographically smallest term.
pub fn virtue_choiceworthiness(
    dist: &TraitDistribution,
    sentiments: &SentimentMap,
) -> Result<f64, EvaluatorError> {
    // Fold onto lower-cased terms so lookup and tie-breaking agree with the
    // map's casing; colliding spellings keep their highest probability.
    let mut scorable: BTreeMap<String, f64> = BTreeMap::new();
    for (term, prob) in &dist.probs {
        let term = term.to_lowercase();
        if !sentiments.entries.contains_key(&term) {
            continue;
        }
        scorable
            .entry(term)
            .and_modify(|p| *p = p.max(*prob))
            .or_insert(*prob);
    }

    let mut best: Option<(&str, f64)> = None;
    for (term, prob) in &scorable {
        match best {
            Some((_, top)) if *prob <= top => {}
            _ => best = Some((term, *prob)),
        }
    }
    match best {
        Some((term, _)) => Ok(sentiments.entries[term]),
        None => Err(EvaluatorError::NoScorableTrait),
    }
}
