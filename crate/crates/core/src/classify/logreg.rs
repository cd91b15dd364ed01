//! L2-regularized logistic regression fitted by full-batch gradient descent.
//!
//! Features are standardized with the training-fold mean and population
//! standard deviation. With `theta = [bias, w_1, ..., w_d]` and
//! `z_i = bias + w . x_i` the minimized objective is
//!
//! ```text
//! J(theta) = sum_i [ ln(1 + e^{z_i}) - y_i z_i ] + (lambda / 2) |w|^2
//! ```
//!
//! (the bias is not penalized). The step size is `1 / L` with
//! `L = sum_i (1 + |x_i|^2) / 4 + lambda`, an upper bound on the Hessian's
//! largest eigenvalue, so every step decreases `J`.

use super::{Classifier, LabeledDataset, Standardizer};
use crate::error::Result;

pub const DEFAULT_LAMBDA: f64 = 1.0;
pub const DEFAULT_TOLERANCE: f64 = 1e-8;
pub const DEFAULT_MAX_ITER: usize = 10_000;

pub(crate) fn sigmoid(z: f64) -> f64 {
    if z >= 0.0 {
        1.0 / (1.0 + (-z).exp())
    } else {
        let e = z.exp();
        e / (1.0 + e)
    }
}

/// `ln(1 + e^z)` without overflow.
fn softplus(z: f64) -> f64 {
    if z > 0.0 {
        z + (-z).exp().ln_1p()
    } else {
        z.exp().ln_1p()
    }
}

fn linear(theta: &[f64], x: &[f64]) -> f64 {
    theta[0] + theta[1..].iter().zip(x).map(|(w, v)| w * v).sum::<f64>()
}

/// Regularized negative log-likelihood.
pub fn objective(theta: &[f64], xs: &[Vec<f64>], ys: &[u8], lambda: f64) -> f64 {
    let nll: f64 = xs
        .iter()
        .zip(ys)
        .map(|(x, &y)| {
            let z = linear(theta, x);
            softplus(z) - f64::from(y) * z
        })
        .sum();
    nll + 0.5 * lambda * theta[1..].iter().map(|w| w * w).sum::<f64>()
}

/// Analytic gradient of [`objective`].
pub fn gradient(theta: &[f64], xs: &[Vec<f64>], ys: &[u8], lambda: f64) -> Vec<f64> {
    let mut g = vec![0.0; theta.len()];
    for (x, &y) in xs.iter().zip(ys) {
        let r = sigmoid(linear(theta, x)) - f64::from(y);
        g[0] += r;
        for (gj, xj) in g[1..].iter_mut().zip(x) {
            *gj += r * xj;
        }
    }
    for (gj, wj) in g[1..].iter_mut().zip(&theta[1..]) {
        *gj += lambda * wj;
    }
    g
}

#[derive(Debug, Clone)]
pub struct LogisticRegression {
    pub lambda: f64,
    pub tolerance: f64,
    pub max_iter: usize,
    theta: Vec<f64>,
    scaler: Standardizer,
    iterations: usize,
}

impl Default for LogisticRegression {
    fn default() -> Self {
        Self {
            lambda: DEFAULT_LAMBDA,
            tolerance: DEFAULT_TOLERANCE,
            max_iter: DEFAULT_MAX_ITER,
            theta: Vec::new(),
            scaler: Standardizer::default(),
            iterations: 0,
        }
    }
}

impl LogisticRegression {
    /// `[bias, weights...]` in standardized feature space.
    pub fn coefficients(&self) -> &[f64] {
        &self.theta
    }

    /// Gradient steps taken by the last fit.
    pub fn iterations(&self) -> usize {
        self.iterations
    }

    pub fn fit_with(mut self, train: &LabeledDataset) -> Result<Self> {
        let (raw, ys) = train.xy();
        self.scaler = Standardizer::fit(&raw);
        let xs: Vec<Vec<f64>> = raw.iter().map(|x| self.scaler.apply(x)).collect();
        let dim = train.n_features() + 1;

        let lipschitz = 0.25
            * xs.iter()
                .map(|x| 1.0 + x.iter().map(|v| v * v).sum::<f64>())
                .sum::<f64>()
            + self.lambda;
        let step = 1.0 / lipschitz;

        let mut theta = vec![0.0; dim];
        self.iterations = self.max_iter;
        for it in 0..self.max_iter {
            let g = gradient(&theta, &xs, &ys, self.lambda);
            if g.iter().fold(0.0f64, |m, v| m.max(v.abs())) < self.tolerance {
                self.iterations = it;
                break;
            }
            for (t, gi) in theta.iter_mut().zip(&g) {
                *t -= step * gi;
            }
        }
        self.theta = theta;
        Ok(self)
    }
}

impl Classifier for LogisticRegression {
    fn fit(train: &LabeledDataset) -> Result<Self> {
        Self::default().fit_with(train)
    }

    fn score(&self, x: &[f64]) -> f64 {
        sigmoid(linear(&self.theta, &self.scaler.apply(x)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigmoid_is_stable() {
        assert_eq!(sigmoid(0.0), 0.5);
        assert!(sigmoid(800.0) == 1.0 && sigmoid(-800.0) >= 0.0);
        assert!((softplus(-800.0)).abs() < 1e-300 && softplus(800.0) == 800.0);
    }

    #[test]
    fn gradient_vanishes_at_fit() {
        let ds = LabeledDataset::from_rows(vec![
            (vec![0.0, 1.0], 0),
            (vec![0.3, 0.1], 0),
            (vec![0.6, 0.9], 1),
            (vec![1.0, 0.2], 1),
            (vec![0.5, 0.5], 0),
            (vec![0.4, 0.6], 1),
        ])
        .unwrap();
        let model = LogisticRegression::fit(&ds).unwrap();
        assert!(model.iterations() < DEFAULT_MAX_ITER);
        let (raw, ys) = ds.xy();
        let xs: Vec<Vec<f64>> = raw.iter().map(|x| model.scaler.apply(x)).collect();
        let g = gradient(model.coefficients(), &xs, &ys, 1.0);
        assert!(g.iter().all(|v| v.abs() < 1e-8));
    }
}
