//! Decision-situation and calibration file schemas.

use std::collections::BTreeMap;
use std::path::Path;
use std::time::Duration;

use mec_core::{Action, DecisionSituation, ScoreTable, TheoryKind, TheorySpec};
use serde::Deserialize;

use crate::{CliError, SCORER_URL_ENV};

/// On-disk decision situation: actions, optional general set, and theories
/// with inline scores or a `remote: true` marker.
#[derive(Debug, Deserialize)]
pub struct SituationFile {
    #[serde(default)]
    pub decision_maker: Option<String>,
    #[serde(default)]
    pub time: Option<String>,
    pub actions: Vec<ActionEntry>,
    #[serde(default)]
    pub general_set: Option<Vec<String>>,
    pub theories: Vec<TheoryEntry>,
}

#[derive(Debug, Deserialize)]
pub struct ActionEntry {
    pub id: String,
    #[serde(default)]
    pub text: Option<String>,
}

#[derive(Debug, Deserialize)]
pub struct TheoryEntry {
    pub id: String,
    pub kind: TheoryKind,
    pub credence: f64,
    #[serde(default)]
    pub scores: Option<BTreeMap<String, f64>>,
    #[serde(default)]
    pub scores_are_probabilities: bool,
    /// Fetch scores from the scorer at `MEC_SCORER_URL` instead of reading
    /// them inline.
    #[serde(default)]
    pub remote: bool,
}

pub fn load_situation_file(path: &Path) -> Result<SituationFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|err| CliError::Input(format!("cannot read '{}': {err}", path.display())))?;
    // serde_json errors carry the offending line and column
    serde_json::from_str(&text)
        .map_err(|err| CliError::Input(format!("'{}': {err}", path.display())))
}

/// Turn a parsed file into an in-memory situation, fetching scores for
/// remote theories. Remote theories are scored over every id the pipeline
/// touches: the decision actions (with their text) plus any general-set ids.
pub fn resolve(
    file: SituationFile,
    scorer_url: Option<&str>,
    timeout: Duration,
) -> Result<DecisionSituation, CliError> {
    let mut to_score: Vec<Action> = file
        .actions
        .iter()
        .map(|a| Action {
            id: a.id.clone(),
            text: a.text.clone(),
        })
        .collect();
    if let Some(general) = &file.general_set {
        for id in general {
            if !to_score.iter().any(|a| &a.id == id) {
                to_score.push(Action::new(id.clone()));
            }
        }
    }

    let mut theories = Vec::with_capacity(file.theories.len());
    let mut score_tables = Vec::with_capacity(file.theories.len());
    for theory in file.theories {
        let table = match (theory.remote, theory.scores) {
            (false, Some(scores)) => ScoreTable::new(theory.id.clone(), scores),
            (true, None) => {
                let endpoint = scorer_url.ok_or_else(|| {
                    CliError::Input(format!(
                        "theory '{}' is remote but {SCORER_URL_ENV} is not set",
                        theory.id
                    ))
                })?;
                mec_evaluators::remote_score(endpoint, &theory.id, &to_score, timeout)
                    .map_err(|err| CliError::Compute(err.to_string()))?
            }
            (true, Some(_)) => {
                return Err(CliError::Input(format!(
                    "theory '{}' has both inline scores and remote: true",
                    theory.id
                )));
            }
            (false, None) => {
                return Err(CliError::Input(format!(
                    "theory '{}' has no scores (provide scores or set remote: true)",
                    theory.id
                )));
            }
        };
        theories.push(TheorySpec {
            id: theory.id,
            kind: theory.kind,
            credence: theory.credence,
            scores_are_probabilities: theory.scores_are_probabilities,
        });
        score_tables.push(table);
    }

    Ok(DecisionSituation {
        decision_maker: file.decision_maker,
        time: file.time,
        actions: file
            .actions
            .into_iter()
            .map(|a| Action {
                id: a.id,
                text: a.text,
            })
            .collect(),
        general_set: file.general_set,
        theories,
        score_tables,
    })
}

/// Load calibration data: CSV with header `score,label`, labels 0 or 1.
pub fn load_labeled_scores(path: &Path) -> Result<Vec<(f64, bool)>, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|err| CliError::Input(format!("cannot read '{}': {err}", path.display())))?;
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader
        .headers()
        .map_err(|err| CliError::Input(format!("'{}': {err}", path.display())))?;
    if headers.len() != 2 || headers.get(0) != Some("score") || headers.get(1) != Some("label") {
        return Err(CliError::Input(format!(
            "'{}': expected header 'score,label'",
            path.display()
        )));
    }
    let mut labeled = Vec::new();
    for (row, record) in reader.records().enumerate() {
        let record = record.map_err(|err| CliError::Input(format!("'{}': {err}", path.display())))?;
        let score: f64 = record
            .get(0)
            .unwrap_or_default()
            .trim()
            .parse()
            .map_err(|err| {
                CliError::Input(format!("'{}' row {}: {err}", path.display(), row + 2))
            })?;
        let label = match record.get(1).unwrap_or_default().trim() {
            "0" => false,
            "1" => true,
            other => {
                return Err(CliError::Input(format!(
                    "'{}' row {}: label '{}' is not 0 or 1",
                    path.display(),
                    row + 2,
                    other
                )));
            }
        };
        labeled.push((score, label));
    }
    Ok(labeled)
}
