//! Blocking client for a remote scorer.
//!
//! Protocol: `POST` with body `{"theory": <id>, "actions": [{"id", "text"}]}`
//! and Content-Type `application/json`; the scorer answers
//! `{"scores": {<id>: <number>, ...}}` covering every requested id.
//!
//! Each call builds its own connection, so concurrent calls from independent
//! tasks share no state. A timed-out or refused request is retried once.

use std::collections::BTreeMap;
use std::time::Duration;

use mec_core::{Action, ScoreTable};
use serde::{Deserialize, Serialize};

use crate::error::EvaluatorError;

#[derive(Serialize)]
struct ScoreRequest<'a> {
    theory: &'a str,
    actions: Vec<RequestAction<'a>>,
}

#[derive(Serialize)]
struct RequestAction<'a> {
    id: &'a str,
    text: Option<&'a str>,
}

#[derive(Deserialize)]
struct ScoreResponse {
    scores: BTreeMap<String, f64>,
}

/// Fetch scores for `actions` from a scorer endpoint. The returned table
/// contains exactly the requested ids: extra ids in the response are
/// dropped and a missing id is an error, so scores are never fabricated.
pub fn remote_score(
    endpoint: &str,
    theory_id: &str,
    actions: &[Action],
    timeout: Duration,
) -> Result<ScoreTable, EvaluatorError> {
    if actions.is_empty() {
        return Err(EvaluatorError::EmptyTable);
    }
    let url = reqwest::Url::parse(endpoint)
        .map_err(|_| EvaluatorError::InvalidEndpoint(endpoint.to_string()))?;
    let client = reqwest::blocking::Client::builder()
        .timeout(timeout)
        .build()
        .map_err(|err| EvaluatorError::ScorerUnavailable(err.to_string()))?;
    let request = ScoreRequest {
        theory: theory_id,
        actions: actions
            .iter()
            .map(|a| RequestAction {
                id: &a.id,
                text: a.text.as_deref(),
            })
            .collect(),
    };

    let mut last_error = None;
    for _attempt in 0..2 {
        match client.post(url.clone()).json(&request).send() {
            Ok(response) => {
                let status = response.status();
                if !status.is_success() {
                    return Err(EvaluatorError::ScorerStatus(status.as_u16()));
                }
                let parsed: ScoreResponse = response
                    .json()
                    .map_err(|err| EvaluatorError::MalformedResponse(err.to_string()))?;
                let mut scores = BTreeMap::new();
                for action in actions {
                    let value = parsed.scores.get(&action.id).copied().ok_or_else(|| {
                        EvaluatorError::IncompleteScores(action.id.clone())
                    })?;
                    if !value.is_finite() {
                        return Err(EvaluatorError::NonfiniteValue(action.id.clone()));
                    }
                    scores.insert(action.id.clone(), value);
                }
                return Ok(ScoreTable::new(theory_id, scores));
            }
            Err(err) if err.is_timeout() || err.is_connect() => {
                last_error = Some(err);
            }
            Err(err) => return Err(EvaluatorError::ScorerUnavailable(err.to_string())),
        }
    }
    Err(EvaluatorError::ScorerUnavailable(
        last_error.map(|err| err.to_string()).unwrap_or_default(),
    ))
}
