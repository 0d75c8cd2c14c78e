//! File loading for score tables and sentiment maps.

use std::collections::BTreeMap;
use std::path::Path;

use mec_core::ScoreTable;
use serde::Deserialize;

use crate::error::EvaluatorError;
use crate::scoring::SentimentMap;

/// On-disk format of a score table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    /// `{"theory": ..., "scores": {action: score, ...}, ...}`
    Json,
    /// Header `action,score`, one row per action.
    Csv,
}

#[derive(Deserialize)]
struct ScoreFile {
    theory: String,
    scores: BTreeMap<String, f64>,
}

/// Load a score table from disk, rejecting duplicate action ids and
/// nonfinite scores. CSV files carry no theory name; the file stem is used.
pub fn load_score_table(path: &Path, format: TableFormat) -> Result<ScoreTable, EvaluatorError> {
    let text = read(path)?;
    let table = match format {
        TableFormat::Json => {
            let file: ScoreFile = serde_json::from_str(&text).map_err(|err| parse(path, err))?;
            ScoreTable::new(file.theory, file.scores)
        }
        TableFormat::Csv => {
            let theory_id = path
                .file_stem()
                .map(|stem| stem.to_string_lossy().into_owned())
                .unwrap_or_default();
            ScoreTable::new(theory_id, parse_score_csv(path, &text)?)
        }
    };
    for (action, value) in &table.scores {
        if !value.is_finite() {
            return Err(EvaluatorError::NonfiniteValue(action.clone()));
        }
    }
    Ok(table)
}

fn parse_score_csv(path: &Path, text: &str) -> Result<BTreeMap<String, f64>, EvaluatorError> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let headers = reader.headers().map_err(|err| parse(path, err))?;
    if headers.len() != 2 || headers.get(0) != Some("action") || headers.get(1) != Some("score") {
        return Err(EvaluatorError::Parse {
            path: path.display().to_string(),
            message: format!("expected header 'action,score', found '{}'", headers.iter().collect::<Vec<_>>().join(",")),
        });
    }
    let mut scores = BTreeMap::new();
    for record in reader.records() {
        let record = record.map_err(|err| parse(path, err))?;
        let action = record.get(0).unwrap_or_default().to_string();
        let value: f64 = record
            .get(1)
            .unwrap_or_default()
            .trim()
            .parse()
            .map_err(|err| parse(path, err))?;
        if scores.insert(action.clone(), value).is_some() {
            return Err(EvaluatorError::DuplicateActionId(action));
        }
    }
    Ok(scores)
}

/// Load a sentiment map from a flat JSON object `{"term": sentiment, ...}`.
pub fn load_sentiment_map(path: &Path) -> Result<SentimentMap, EvaluatorError> {
    let text = read(path)?;
    let raw: BTreeMap<String, f64> =
        serde_json::from_str(&text).map_err(|err| parse(path, err))?;
    SentimentMap::new(raw)
}

fn read(path: &Path) -> Result<String, EvaluatorError> {
    std::fs::read_to_string(path).map_err(|source| EvaluatorError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn parse(path: &Path, err: impl std::fmt::Display) -> EvaluatorError {
    EvaluatorError::Parse {
        path: path.display().to_string(),
        message: err.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn write_temp(contents: &str, suffix: &str) -> tempfile::NamedTempFile {
        let mut file = tempfile::Builder::new().suffix(suffix).tempfile().unwrap();
        file.write_all(contents.as_bytes()).unwrap();
        file
    }

    #[test]
    fn loads_csv_table() {
        let file = write_temp("action,score\na,0.8\nb,0.2\n", ".csv");
        let table = load_score_table(file.path(), TableFormat::Csv).unwrap();
        assert_eq!(table.scores["a"], 0.8);
        assert_eq!(table.scores["b"], 0.2);
    }

    #[test]
    fn rejects_duplicate_csv_rows() {
        let file = write_temp("action,score\na,0.8\na,0.2\n", ".csv");
        let err = load_score_table(file.path(), TableFormat::Csv).unwrap_err();
        assert!(matches!(err, EvaluatorError::DuplicateActionId(id) if id == "a"));
    }

    #[test]
    fn rejects_wrong_csv_header() {
        let file = write_temp("id,value\na,0.8\n", ".csv");
        assert!(matches!(
            load_score_table(file.path(), TableFormat::Csv).unwrap_err(),
            EvaluatorError::Parse { .. }
        ));
    }

    #[test]
    fn loads_json_table() {
        let file = write_temp(r#"{"theory":"util","scores":{"a":1.5}}"#, ".json");
        let table = load_score_table(file.path(), TableFormat::Json).unwrap();
        assert_eq!(table.theory_id, "util");
        assert_eq!(table.scores["a"], 1.5);
    }

    #[test]
    fn tolerates_extra_json_fields() {
        let file = write_temp(
            r#"{"theory":"util","kind":"cardinal_comparable","credence":1.0,"scores":{"a":1.5},"scores_are_probabilities":false}"#,
            ".json",
        );
        let table = load_score_table(file.path(), TableFormat::Json).unwrap();
        assert_eq!(table.scores.len(), 1);
    }

    #[test]
    fn rejects_unparsable_json() {
        let file = write_temp("{not json", ".json");
        assert!(matches!(
            load_score_table(file.path(), TableFormat::Json).unwrap_err(),
            EvaluatorError::Parse { .. }
        ));
    }

    #[test]
    fn rejects_nonfinite_scores() {
        let file = write_temp("action,score\na,inf\n", ".csv");
        assert!(matches!(
            load_score_table(file.path(), TableFormat::Csv).unwrap_err(),
            EvaluatorError::NonfiniteValue(_)
        ));
    }

    #[test]
    fn missing_file_is_an_io_error() {
        let err =
            load_score_table(Path::new("/nonexistent/table.csv"), TableFormat::Csv).unwrap_err();
        assert!(matches!(err, EvaluatorError::Io { .. }));
    }

    #[test]
    fn loaded_tables_round_trip() {
        let table = ScoreTable::from_pairs("util", [("a", 0.25), ("b", -3.5), ("c", 7.125)]);

        let json = serde_json::json!({"theory": table.theory_id, "scores": table.scores});
        let file = write_temp(&json.to_string(), ".json");
        assert_eq!(load_score_table(file.path(), TableFormat::Json).unwrap(), table);

        let mut csv_text = String::from("action,score\n");
        for (action, value) in &table.scores {
            csv_text.push_str(&format!("{action},{value}\n"));
        }
        let file = write_temp(&csv_text, ".csv");
        let loaded = load_score_table(file.path(), TableFormat::Csv).unwrap();
        assert_eq!(loaded.scores, table.scores);
    }

    #[test]
    fn loads_sentiment_map() {
        let file = write_temp(r#"{"Honest": 0.8, "cruel": -0.9}"#, ".json");
        let map = load_sentiment_map(file.path()).unwrap();
        assert_eq!(map.get("honest"), Some(0.8));
        assert_eq!(map.get("cruel"), Some(-0.9));
    }
}
