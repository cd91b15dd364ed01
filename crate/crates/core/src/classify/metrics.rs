//! Binary classification metrics. The positive class is label 1.

use crate::error::{Error, Result};

fn check_labels(labels: &[u8]) -> Result<()> {
    if labels.iter().any(|&l| l > 1) {
        return Err(Error::arg("labels must be 0 or 1"));
    }
    Ok(())
}

pub fn accuracy(pred: &[u8], truth: &[u8]) -> Result<f64> {
    if pred.len() != truth.len() || pred.is_empty() {
        return Err(Error::arg(format!(
            "accuracy needs equal, non-empty inputs ({} vs {})",
            pred.len(),
            truth.len()
        )));
    }
    let hits = pred.iter().zip(truth).filter(|(p, t)| p == t).count();
    Ok(hits as f64 / pred.len() as f64)
}

/// F1 of the positive class; 0 when precision and recall are both 0.
pub fn f1_score(pred: &[u8], truth: &[u8]) -> Result<f64> {
    if pred.len() != truth.len() || pred.is_empty() {
        return Err(Error::arg(format!(
            "f1 needs equal, non-empty inputs ({} vs {})",
            pred.len(),
            truth.len()
        )));
    }
    check_labels(pred)?;
    check_labels(truth)?;
    let (mut tp, mut fp, mut fn_) = (0usize, 0usize, 0usize);
    for (&p, &t) in pred.iter().zip(truth) {
        match (p, t) {
            (1, 1) => tp += 1,
            (1, 0) => fp += 1,
            (0, 1) => fn_ += 1,
            _ => {}
        }
    }
    // 2PR/(P+R) == 2tp/(2tp+fp+fn)
    let denom = 2 * tp + fp + fn_;
    Ok(if tp == 0 {
        0.0
    } else {
        (2 * tp) as f64 / denom as f64
    })
}

/// Area under the ROC curve in Mann-Whitney form: the share of
/// (positive, negative) pairs where the positive scores higher, with ties
/// counting half.
pub fn roc_auc(scores: &[f64], labels: &[u8]) -> Result<f64> {
    if scores.len() != labels.len() {
        return Err(Error::arg("scores and labels differ in length"));
    }
    check_labels(labels)?;
    if scores.iter().any(|s| s.is_nan()) {
        return Err(Error::arg("NaN score"));
    }
    let mut neg: Vec<f64> = scores
        .iter()
        .zip(labels)
        .filter(|(_, &l)| l == 0)
        .map(|(&s, _)| s)
        .collect();
    let n_pos = labels.len() - neg.len();
    if n_pos == 0 || neg.is_empty() {
        return Err(Error::UndefinedMetric(
            "ROC AUC needs both classes present".into(),
        ));
    }
    neg.sort_by(f64::total_cmp);

    // twice the Mann-Whitney U, kept integral
    let mut u2: u64 = 0;
    for (&s, _) in scores.iter().zip(labels).filter(|(_, &l)| l == 1) {
        let below = neg.partition_point(|&x| x < s);
        let not_above = neg.partition_point(|&x| x <= s);
        u2 += 2 * below as u64 + (not_above - below) as u64;
    }
    Ok(u2 as f64 / (2 * n_pos as u64 * neg.len() as u64) as f64)
}
