//! Result rendering: JSON at full precision, table and CSV at 6 decimals.

use mec_core::MecResult;

use crate::Format;

pub fn render(result: &MecResult, format: Format) -> String {
    match format {
        Format::Json => render_json(result),
        Format::Table => render_table(result),
        Format::Csv => render_csv(result),
    }
}

fn render_json(result: &MecResult) -> String {
    let mut text = serde_json::to_string_pretty(result).expect("result serializes");
    text.push('\n');
    text
}

fn render_table(result: &MecResult) -> String {
    let mut out = format!("selected: {}\n", result.selected);
    if let Some(credence) = result.merged_credence {
        out.push_str(&format!("merged credence: {credence:.6}\n"));
    }
    out.push('\n');

    let keys: Vec<&String> = result.contributions.keys().collect();
    let mut header: Vec<String> = vec!["rank".into(), "action".into(), "expected".into()];
    header.extend(keys.iter().map(|k| k.to_string()));
    let rows: Vec<Vec<String>> = result
        .ranking
        .iter()
        .enumerate()
        .map(|(position, action)| {
            let mut row = vec![
                (position + 1).to_string(),
                action.clone(),
                format!("{:.6}", result.expected[action]),
            ];
            row.extend(
                keys.iter()
                    .map(|key| format!("{:.6}", result.contributions[*key][action])),
            );
            row
        })
        .collect();

    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (i, cell) in row.iter().enumerate() {
            widths[i] = widths[i].max(cell.len());
        }
    }
    for row in std::iter::once(&header).chain(&rows) {
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(i, cell)| format!("{cell:<width$}", width = widths[i]))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    }
    out
}

fn render_csv(result: &MecResult) -> String {
    let keys: Vec<&String> = result.contributions.keys().collect();
    let credence = result
        .merged_credence
        .map(|c| format!("{c:.6}"))
        .unwrap_or_default();
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header = vec!["action".to_string(), "rank".to_string(), "expected".to_string()];
    header.extend(keys.iter().map(|k| k.to_string()));
    header.push("merged_credence".to_string());
    writer.write_record(&header).expect("write header");
    for (position, action) in result.ranking.iter().enumerate() {
        let mut row = vec![
            action.clone(),
            (position + 1).to_string(),
            format!("{:.6}", result.expected[action]),
        ];
        row.extend(
            keys.iter()
                .map(|key| format!("{:.6}", result.contributions[*key][action])),
        );
        row.push(credence.clone());
        writer.write_record(&row).expect("write row");
    }
    String::from_utf8(writer.into_inner().expect("flush csv")).expect("utf-8 csv")
}
