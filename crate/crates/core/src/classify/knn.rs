//! k-nearest neighbours with inverse-distance weighted votes.

use super::{Classifier, LabeledDataset};
use crate::error::Result;

pub const DEFAULT_K: usize = 5;

#[derive(Debug, Clone)]
pub struct KNearest {
    pub k: usize,
    rows: Vec<(Vec<f64>, u8)>,
}

impl KNearest {
    pub fn with_k(k: usize, train: &LabeledDataset) -> Self {
        Self {
            k: k.max(1),
            rows: train
                .rows()
                .iter()
                .map(|(f, l)| (f.values.clone(), *l))
                .collect(),
        }
    }
}

impl Classifier for KNearest {
    fn fit(train: &LabeledDataset) -> Result<Self> {
        Ok(Self::with_k(DEFAULT_K, train))
    }

    /// Weighted share of class-1 votes among the `k` nearest rows. Equal
    /// distances go to the lower row index. Rows at distance zero, when
    /// present, outvote everything else and share the vote equally.
    fn score(&self, x: &[f64]) -> f64 {
        let mut dist: Vec<(f64, usize)> = self
            .rows
            .iter()
            .enumerate()
            .map(|(i, (r, _))| {
                let d2: f64 = r.iter().zip(x).map(|(a, b)| (a - b).powi(2)).sum();
                (d2.sqrt(), i)
            })
            .collect();
        dist.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        dist.truncate(self.k.min(self.rows.len()));

        let exact: Vec<usize> = dist
            .iter()
            .filter(|(d, _)| *d == 0.0)
            .map(|&(_, i)| i)
            .collect();
        if !exact.is_empty() {
            let pos = exact.iter().filter(|&&i| self.rows[i].1 == 1).count();
            return pos as f64 / exact.len() as f64;
        }
        let (mut pos, mut total) = (0.0, 0.0);
        for &(d, i) in &dist {
            let w = 1.0 / d;
            total += w;
            if self.rows[i].1 == 1 {
                pos += w;
            }
        }
        pos / total
    }
}
