//! Gaussian naive Bayes: one independent normal per class and feature.

use super::{class_rows, Classifier, LabeledDataset};
use crate::classify::logreg::sigmoid;
use crate::error::Result;

pub const VAR_FLOOR: f64 = 1e-9;

#[derive(Debug, Clone)]
pub struct GaussianNb {
    /// Per class: (log prior, means, variances).
    classes: [(f64, Vec<f64>, Vec<f64>); 2],
}

fn fit_class(rows: &[&[f64]], d: usize, n_total: usize) -> (f64, Vec<f64>, Vec<f64>) {
    let n = rows.len() as f64;
    let means: Vec<f64> = (0..d)
        .map(|j| rows.iter().map(|r| r[j]).sum::<f64>() / n)
        .collect();
    let vars = (0..d)
        .map(|j| {
            let v = rows.iter().map(|r| (r[j] - means[j]).powi(2)).sum::<f64>() / n;
            v.max(VAR_FLOOR)
        })
        .collect();
    ((n / n_total as f64).ln(), means, vars)
}

impl GaussianNb {
    fn log_joint(&self, class: usize, x: &[f64]) -> f64 {
        let (prior, means, vars) = &self.classes[class];
        prior
            + x.iter()
                .zip(means.iter().zip(vars))
                .map(|(v, (m, s2))| {
                    -0.5 * (2.0 * std::f64::consts::PI * s2).ln() - (v - m).powi(2) / (2.0 * s2)
                })
                .sum::<f64>()
    }
}

impl Classifier for GaussianNb {
    fn fit(train: &LabeledDataset) -> Result<Self> {
        let d = train.n_features();
        let [neg, pos] = class_rows(train);
        Ok(Self {
            classes: [
                fit_class(&neg, d, train.len()),
                fit_class(&pos, d, train.len()),
            ],
        })
    }

    /// Posterior probability of class 1.
    fn score(&self, x: &[f64]) -> f64 {
        sigmoid(self.log_joint(1, x) - self.log_joint(0, x))
    }
}
