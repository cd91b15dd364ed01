//! Shared oracles and fixture builders for the integration tests.
#![allow(dead_code)]

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

pub fn fixtures() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn fixture_lexicon() -> PathBuf {
    fixtures().join("lexicon/synthetic_dal.tsv")
}

pub fn fixture_manifest(name: &str) -> PathBuf {
    fixtures().join("corpus").join(name)
}

/// Double-exponential quadrature over an interval of length `width`. The
/// integrand receives the distances to the left and right endpoints, which
/// stay accurate next to an endpoint singularity.
pub fn tanh_sinh(width: f64, f: impl Fn(f64, f64) -> f64) -> f64 {
    let h = 1.0 / 128.0;
    let mut sum = 0.0;
    for k in 0i64.. {
        let u = k as f64 * h;
        let s = FRAC_PI_2 * u.sinh();
        let e = (-2.0 * s).exp();
        let near = width * e / (1.0 + e);
        let far = width / (1.0 + e);
        if near == 0.0 {
            break;
        }
        let weight = width / 2.0 * h * FRAC_PI_2 * u.cosh() * 4.0 * e / ((1.0 + e) * (1.0 + e));
        if k == 0 {
            sum += weight * f(far, near);
        } else {
            sum += weight * (f(far, near) + f(near, far));
        }
    }
    sum
}

/// Two-sided Student t p-value from the density alone.
///
/// With `t = sqrt(df) tan(theta)` the density becomes proportional to
/// `cos(theta)^(df - 1)`, so the tail beyond `|t|` is a ratio of two
/// trigonometric integrals and no gamma or beta function is involved.
pub fn t_two_sided_p_quadrature(t: f64, df: f64) -> f64 {
    let t = t.abs();
    let power = df - 1.0;
    let full = tanh_sinh(PI, |dl, dr| dl.min(dr).sin().powf(power));
    // theta runs from atan(t / sqrt(df)) to pi/2; cos(theta) = sin(distance to pi/2)
    let width = df.sqrt().atan2(t);
    let tail = tanh_sinh(width, |_, dr| dr.sin().powf(power));
    2.0 * tail / full
}

/// Textbook Welch statistic and Welch-Satterthwaite degrees of freedom.
pub fn welch_textbook(a: &[f64], b: &[f64]) -> (f64, f64) {
    let mean = |x: &[f64]| x.iter().sum::<f64>() / x.len() as f64;
    let var = |x: &[f64]| {
        let m = mean(x);
        x.iter().map(|v| (v - m) * (v - m)).sum::<f64>() / (x.len() as f64 - 1.0)
    };
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (va, vb) = (var(a) / na, var(b) / nb);
    let t = (mean(a) - mean(b)) / (va + vb).sqrt();
    let df = (va + vb).powi(2) / (va * va / (na - 1.0) + vb * vb / (nb - 1.0));
    (t, df)
}

/// Fraction of ordered (positive, negative) pairs ranked correctly, ties
/// counting one half.
pub fn auc_brute_force(scores: &[f64], labels: &[u8]) -> f64 {
    let mut twice = 0u64;
    let (mut np, mut nn) = (0u64, 0u64);
    for (i, &li) in labels.iter().enumerate() {
        if li == 1 {
            np += 1;
        } else {
            nn += 1;
        }
        for (j, &lj) in labels.iter().enumerate() {
            if li == 1 && lj == 0 {
                if scores[i] > scores[j] {
                    twice += 2;
                } else if scores[i] == scores[j] {
                    twice += 1;
                }
            }
        }
    }
    twice as f64 / (2 * np * nn) as f64
}

pub const CONTROL_MEAN: f64 = 0.1168;
pub const CONTROL_SD: f64 = 0.0277;
pub const CASE_MEAN: f64 = 0.1380;
pub const CASE_SD: f64 = 0.0193;

/// One synthetic cohort of mean-intensity features: `n` controls (label 0)
/// then `n` cases (label 1).
pub fn cohort(rng: &mut ChaCha8Rng, n: usize) -> Vec<(Vec<f64>, u8)> {
    let control = Normal::new(CONTROL_MEAN, CONTROL_SD).unwrap();
    let case = Normal::new(CASE_MEAN, CASE_SD).unwrap();
    let mut rows: Vec<(Vec<f64>, u8)> = (0..n).map(|_| (vec![control.sample(rng)], 0)).collect();
    rows.extend((0..n).map(|_| (vec![case.sample(rng)], 1)));
    rows
}

/// Accuracy of the likelihood-ratio rule for the cohort generator, estimated
/// from `draws` samples per class.
pub fn bayes_accuracy_monte_carlo(draws: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let control = Normal::new(CONTROL_MEAN, CONTROL_SD).unwrap();
    let case = Normal::new(CASE_MEAN, CASE_SD).unwrap();
    let log_pdf = |x: f64, m: f64, s: f64| -s.ln() - 0.5 * ((x - m) / s).powi(2);
    let says_case = |x: f64| log_pdf(x, CASE_MEAN, CASE_SD) > log_pdf(x, CONTROL_MEAN, CONTROL_SD);
    let mut correct = 0usize;
    for _ in 0..draws {
        correct += usize::from(!says_case(control.sample(&mut rng)));
        correct += usize::from(says_case(case.sample(&mut rng)));
    }
    correct as f64 / (2 * draws) as f64
}

/// Writes one text per subject whose emotional-word share tracks a value
/// drawn from the cohort generator, plus a manifest. Returns the manifest
/// path.
pub fn write_cohort_corpus(dir: &Path, per_class: usize, seed: u64) -> PathBuf {
    const EMOTIONAL: [&str; 8] = [
        "grief", "tears", "sorrow", "despair", "love", "joy", "delight", "bliss",
    ];
    const NEUTRAL: [&str; 10] = [
        "table", "window", "road", "paper", "river", "stone", "street", "chair", "door", "wall",
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = cohort(&mut rng, per_class);
    let mut manifest = String::from("doc_id,path,label\n");
    for (i, (x, label)) in rows.iter().enumerate() {
        let p = x[0].clamp(0.0, 1.0);
        let mut text = String::new();
        for _ in 0..12 {
            let words: Vec<&str> = (0..20)
                .map(|_| {
                    if rng.random::<f64>() < p {
                        EMOTIONAL[rng.random_range(0..EMOTIONAL.len())]
                    } else {
                        NEUTRAL[rng.random_range(0..NEUTRAL.len())]
                    }
                })
                .collect();
            writeln!(text, "{}.", words.join(" ")).unwrap();
        }
        let name = format!("s{i:02}.txt");
        fs::write(dir.join(&name), text).unwrap();
        let group = if *label == 1 { "case" } else { "control" };
        writeln!(manifest, "subject{i:02},{name},{group}").unwrap();
    }
    let path = dir.join("cohort.csv");
    fs::write(&path, manifest).unwrap();
    path
}
