//! Two-class Fisher linear discriminant with a pooled covariance.

use super::{class_rows, Classifier, LabeledDataset};
use crate::classify::logreg::sigmoid;
use crate::error::{Error, Result};

pub const RIDGE: f64 = 1e-6;

#[derive(Debug, Clone)]
pub struct LinearDiscriminant {
    weights: Vec<f64>,
    bias: f64,
}

impl LinearDiscriminant {
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

fn mean(rows: &[&[f64]], d: usize) -> Vec<f64> {
    let mut m = vec![0.0; d];
    for r in rows {
        for (mj, v) in m.iter_mut().zip(r.iter()) {
            *mj += v;
        }
    }
    m.iter_mut().for_each(|v| *v /= rows.len() as f64);
    m
}

/// Solves `a x = b` for symmetric positive definite `a` (Cholesky).
pub(crate) fn solve_spd(a: &[Vec<f64>], b: &[f64]) -> Result<Vec<f64>> {
    let n = b.len();
    let mut l = vec![vec![0.0; n]; n];
    for i in 0..n {
        for j in 0..=i {
            let s: f64 = (0..j).map(|k| l[i][k] * l[j][k]).sum();
            if i == j {
                let d = a[i][i] - s;
                if d.is_nan() || d <= 0.0 {
                    return Err(Error::Numerical(
                        "covariance is not positive definite".into(),
                    ));
                }
                l[i][i] = d.sqrt();
            } else {
                l[i][j] = (a[i][j] - s) / l[j][j];
            }
        }
    }
    let mut y = vec![0.0; n];
    for i in 0..n {
        let s: f64 = (0..i).map(|k| l[i][k] * y[k]).sum();
        y[i] = (b[i] - s) / l[i][i];
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = (i + 1..n).map(|k| l[k][i] * x[k]).sum();
        x[i] = (y[i] - s) / l[i][i];
    }
    Ok(x)
}

impl Classifier for LinearDiscriminant {
    fn fit(train: &LabeledDataset) -> Result<Self> {
        let d = train.n_features();
        let [neg, pos] = class_rows(train);
        let (m0, m1) = (mean(&neg, d), mean(&pos, d));

        let mut cov = vec![vec![0.0; d]; d];
        for (rows, m) in [(&neg, &m0), (&pos, &m1)] {
            for r in rows.iter() {
                for i in 0..d {
                    for j in 0..d {
                        cov[i][j] += (r[i] - m[i]) * (r[j] - m[j]);
                    }
                }
            }
        }
        let dof = (train.len() - 2) as f64;
        for (i, row) in cov.iter_mut().enumerate() {
            for v in row.iter_mut() {
                *v /= dof;
            }
            row[i] += RIDGE;
        }

        let diff: Vec<f64> = m1.iter().zip(&m0).map(|(a, b)| a - b).collect();
        let weights = solve_spd(&cov, &diff)?;
        let midpoint: f64 = weights
            .iter()
            .zip(m0.iter().zip(&m1))
            .map(|(w, (a, b))| w * 0.5 * (a + b))
            .sum();
        let prior = (pos.len() as f64 / neg.len() as f64).ln();
        Ok(Self {
            weights,
            bias: prior - midpoint,
        })
    }

    fn score(&self, x: &[f64]) -> f64 {
        let z: f64 = self.bias + self.weights.iter().zip(x).map(|(w, v)| w * v).sum::<f64>();
        sigmoid(z)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cholesky_solve() {
        let a = vec![vec![4.0, 2.0], vec![2.0, 3.0]];
        let x = solve_spd(&a, &[2.0, 1.0]).unwrap();
        assert!((x[0] - 0.5).abs() < 1e-15 && x[1].abs() < 1e-15);
        assert!(solve_spd(&[vec![0.0]], &[1.0]).is_err());
    }

    #[test]
    fn one_dimensional_boundary_is_midpoint() {
        let ds = LabeledDataset::from_rows(vec![
            (vec![-1.5], 0),
            (vec![-0.5], 0),
            (vec![0.5], 1),
            (vec![1.5], 1),
        ])
        .unwrap();
        let m = LinearDiscriminant::fit(&ds).unwrap();
        assert!((m.score(&[0.0]) - 0.5).abs() < 1e-12);
        assert!(m.score(&[0.1]) > 0.5);
    }
}
