//! Threshold calibration and output classification.

use crate::error::EvaluatorError;

/// Pick the threshold maximizing accuracy of "predict 1 iff score >=
/// threshold" over the labeled set. Candidates are the midpoints of adjacent
/// distinct scores plus one sentinel below the minimum and one above the
/// maximum (the constant classifiers). Accuracy ties go to the smallest
/// candidate. Needs at least one example of each label.
pub fn calibrate_threshold(labeled: &[(f64, bool)]) -> Result<f64, EvaluatorError> {
    for (score, _) in labeled {
        if !score.is_finite() {
            return Err(EvaluatorError::NonfiniteValue(score.to_string()));
        }
    }
    let positives = labeled.iter().filter(|(_, label)| *label).count();
    if positives == 0 || positives == labeled.len() {
        return Err(EvaluatorError::DegenerateCalibration);
    }

    let mut sorted = labeled.to_vec();
    sorted.sort_by(|a, b| a.0.total_cmp(&b.0));
    let n = sorted.len();

    // prefix_negatives[i]: negatives among sorted[..i];
    // suffix_positives[i]: positives among sorted[i..].
    let mut prefix_negatives = vec![0usize; n + 1];
    let mut suffix_positives = vec![0usize; n + 1];
    for i in 0..n {
        prefix_negatives[i + 1] = prefix_negatives[i] + usize::from(!sorted[i].1);
    }
    for i in (0..n).rev() {
        suffix_positives[i] = suffix_positives[i + 1] + usize::from(sorted[i].1);
    }

    let mut distinct: Vec<f64> = sorted.iter().map(|(score, _)| *score).collect();
    distinct.dedup();
    let mut candidates = Vec::with_capacity(distinct.len() + 1);
    candidates.push(distinct[0] - 1.0);
    candidates.extend(distinct.windows(2).map(|pair| (pair[0] + pair[1]) / 2.0));
    candidates.push(distinct[distinct.len() - 1] + 1.0);

    let mut best: Option<(f64, usize)> = None;
    for threshold in candidates {
        let split = sorted.partition_point(|(score, _)| *score < threshold);
        let correct = prefix_negatives[split] + suffix_positives[split];
        match best {
            Some((_, top)) if correct <= top => {}
            _ => best = Some((threshold, correct)),
        }
    }
    Ok(best.expect("calibration set has candidates").0)
}

/// Classify a model output. With `zero_rule`, the score is positive iff it
/// is strictly greater than zero (a score of exactly 0 maps to 0); without
/// it, the boundary is inclusive.
pub fn classify(score: f64, zero_rule: bool) -> Result<u8, EvaluatorError> {
    if !score.is_finite() {
        return Err(EvaluatorError::NonfiniteValue(score.to_string()));
    }
    let positive = if zero_rule { score > 0.0 } else { score >= 0.0 };
    Ok(u8::from(positive))
}
