//! Descriptive statistics and two-sample t-tests.
//!
//! Group-level summaries use the sample standard deviation (divisor `n - 1`),
//! unlike the per-document spread in [`crate::intensity`], which treats the
//! sentences of one document as the whole population.
//!
//! The Student-t CDF is evaluated through the regularized incomplete beta
//! function, `P(T <= -|t|) = I_x(df/2, 1/2) / 2` with `x = df / (df + t^2)`,
//! using a modified Lentz continued fraction.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const CF_TOLERANCE: f64 = 1e-12;
const CF_MAX_ITER: usize = 300;
const CF_TINY: f64 = 1e-300;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SampleSummary {
    pub n: usize,
    pub mean: f64,
    pub sd: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TTestKind {
    #[default]
    Welch,
    Pooled,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TTestResult {
    pub t: f64,
    pub df: f64,
    pub p_two_sided: f64,
    pub kind: TTestKind,
}

fn check_finite(xs: &[f64], what: &str) -> Result<()> {
    if let Some(x) = xs.iter().find(|x| !x.is_finite()) {
        return Err(Error::arg(format!("{what} contains non-finite value {x}")));
    }
    Ok(())
}

/// Mean and sample variance, with a constant sample reported exactly.
fn mean_var(xs: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    if xs.iter().all(|&x| x == xs[0]) {
        return (xs[0], 0.0);
    }
    let mean = xs.iter().sum::<f64>() / n;
    let ss: f64 = xs.iter().map(|x| (x - mean).powi(2)).sum();
    (mean, if xs.len() > 1 { ss / (n - 1.0) } else { 0.0 })
}

pub fn summarize(xs: &[f64]) -> Result<SampleSummary> {
    if xs.is_empty() {
        return Err(Error::arg("cannot summarize an empty sample"));
    }
    check_finite(xs, "sample")?;
    let (mean, var) = mean_var(xs);
    Ok(SampleSummary {
        n: xs.len(),
        mean,
        sd: var.sqrt(),
    })
}

pub fn two_sample_ttest(a: &[f64], b: &[f64], kind: TTestKind) -> Result<TTestResult> {
    if a.len() < 2 || b.len() < 2 {
        return Err(Error::arg(format!(
            "t-test needs at least 2 observations per group, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    check_finite(a, "first sample")?;
    check_finite(b, "second sample")?;

    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (ma, va) = mean_var(a);
    let (mb, vb) = mean_var(b);
    let diff = ma - mb;

    let (se2, df) = match kind {
        TTestKind::Welch => {
            let (qa, qb) = (va / na, vb / nb);
            let se2 = qa + qb;
            let denom = qa * qa / (na - 1.0) + qb * qb / (nb - 1.0);
            let df = if denom > 0.0 {
                se2 * se2 / denom
            } else {
                na + nb - 2.0
            };
            (se2, df)
        }
        TTestKind::Pooled => {
            let df = na + nb - 2.0;
            let pooled = ((na - 1.0) * va + (nb - 1.0) * vb) / df;
            (pooled * (1.0 / na + 1.0 / nb), df)
        }
    };

    if se2 == 0.0 {
        if diff == 0.0 {
            return Err(Error::DegenerateTest(
                "both samples are constant with equal means".into(),
            ));
        }
        return Ok(TTestResult {
            t: diff.signum() * f64::INFINITY,
            df,
            p_two_sided: 0.0,
            kind,
        });
    }

    let t = diff / se2.sqrt();
    let p_two_sided = t_two_sided_p(t, df)?;
    Ok(TTestResult {
        t,
        df,
        p_two_sided,
        kind,
    })
}

/// `P(|T| >= |t|)` for `T ~ Student-t(df)`.
pub fn t_two_sided_p(t: f64, df: f64) -> Result<f64> {
    Ok((2.0 * t_lower_tail(-t.abs(), df)?).clamp(0.0, 1.0))
}

/// `P(T <= t)` for `t <= 0`.
fn t_lower_tail(t: f64, df: f64) -> Result<f64> {
    if t.is_infinite() {
        return Ok(0.0);
    }
    let t2 = t * t;
    let x = df / (df + t2);
    let y = t2 / (df + t2);
    Ok(0.5 * reg_inc_beta(df / 2.0, 0.5, x, y)?)
}

pub fn student_t_cdf(t: f64, df: f64) -> Result<f64> {
    if df.is_nan() || df <= 0.0 {
        return Err(Error::arg(format!(
            "degrees of freedom must be positive, got {df}"
        )));
    }
    if t.is_nan() {
        return Err(Error::arg("t is NaN"));
    }
    let tail = t_lower_tail(-t.abs(), df)?;
    Ok(if t > 0.0 { 1.0 - tail } else { tail })
}

/// `ln Γ(x)` for `x > 0` (Lanczos, g = 7, 9 terms; ~1e-15 relative).
pub fn ln_gamma(x: f64) -> f64 {
    const G: f64 = 7.0;
    #[allow(clippy::excessive_precision)]
    const COEF: [f64; 9] = [
        0.999_999_999_999_809_93,
        676.520_368_121_885_1,
        -1_259.139_216_722_402_8,
        771.323_428_777_653_13,
        -176.615_029_162_140_59,
        12.507_343_278_686_905,
        -0.138_571_095_265_720_12,
        9.984_369_578_019_571_6e-6,
        1.505_632_735_149_311_6e-7,
    ];
    if x < 0.5 {
        // reflection
        let pi = std::f64::consts::PI;
        return (pi / (pi * x).sin()).ln() - ln_gamma(1.0 - x);
    }
    let x = x - 1.0;
    let mut acc = COEF[0];
    for (i, c) in COEF.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + G + 0.5;
    0.5 * (2.0 * std::f64::consts::PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

/// Regularized incomplete beta `I_x(a, b)`; `y` must equal `1 - x` and is
/// passed separately so callers can supply it without cancellation.
pub fn reg_inc_beta(a: f64, b: f64, x: f64, y: f64) -> Result<f64> {
    if !(a > 0.0 && b > 0.0) {
        return Err(Error::arg(format!(
            "beta parameters must be positive, got ({a}, {b})"
        )));
    }
    if !(0.0..=1.0).contains(&x) || !(0.0..=1.0).contains(&y) {
        return Err(Error::arg(format!(
            "incomplete beta argument {x} outside [0, 1]"
        )));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if y == 0.0 {
        return Ok(1.0);
    }
    if x > (a + 1.0) / (a + b + 2.0) {
        return Ok(1.0 - reg_inc_beta(b, a, y, x)?);
    }
    let ln_front = a * x.ln() + b * y.ln() - ln_beta(a, b);
    Ok(ln_front.exp() * beta_continued_fraction(a, b, x)? / a)
}

fn ln_beta(a: f64, b: f64) -> f64 {
    ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b)
}

fn beta_continued_fraction(a: f64, b: f64, x: f64) -> Result<f64> {
    let guard = |v: f64| if v.abs() < CF_TINY { CF_TINY } else { v };
    let (qab, qap, qam) = (a + b, a + 1.0, a - 1.0);
    let mut c = 1.0;
    let mut d = 1.0 / guard(1.0 - qab * x / qap);
    let mut h = d;

    for m in 1..=CF_MAX_ITER {
        let m = m as f64;
        let m2 = 2.0 * m;

        let even = m * (b - m) * x / ((qam + m2) * (a + m2));
        d = 1.0 / guard(1.0 + even * d);
        c = guard(1.0 + even / c);
        h *= d * c;

        let odd = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
        d = 1.0 / guard(1.0 + odd * d);
        c = guard(1.0 + odd / c);
        let delta = d * c;
        h *= delta;

        if (delta - 1.0).abs() < CF_TOLERANCE {
            return Ok(h);
        }
    }
    Err(Error::Numerical(format!(
        "incomplete beta continued fraction did not converge in {CF_MAX_ITER} iterations (a={a}, b={b}, x={x})"
    )))
}
