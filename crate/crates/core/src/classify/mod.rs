//! Subject-level classification on document intensity features.
//!
//! Each subject (one document) becomes a feature vector, `[mean_ei]` or
//! `[mean_ei, std_ei]`, with a binary group label. Five classifiers are
//! available, all fitted from scratch with fixed defaults, and evaluated by
//! seeded stratified k-fold cross-validation on accuracy, ROC AUC and F1.

pub mod dtree;
pub mod gnb;
pub mod knn;
pub mod lda;
pub mod logreg;
pub mod metrics;

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::io::Write;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intensity::{mean_std, DocumentProfile, StdMode};

pub use dtree::DecisionTree;
pub use gnb::GaussianNb;
pub use knn::KNearest;
pub use lda::LinearDiscriminant;
pub use logreg::LogisticRegression;
pub use metrics::{accuracy, f1_score, roc_auc};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FeatureVector {
    pub subject_id: String,
    pub values: Vec<f64>,
}

impl FeatureVector {
    pub fn new(subject_id: impl Into<String>, values: Vec<f64>) -> Self {
        Self {
            subject_id: subject_id.into(),
            values,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FeatureMode {
    #[default]
    MeanOnly,
    MeanAndStd,
}

/// Feature rows with 0/1 labels.
///
/// Construction checks uniform feature length, finite values, unique subject
/// ids and 0/1 labels. The two-rows-per-class requirement for fitting is
/// checked by [`LabeledDataset::check_trainable`], which every fit calls.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LabeledDataset {
    rows: Vec<(FeatureVector, u8)>,
    class_names: (String, String),
}

impl LabeledDataset {
    pub fn new(rows: Vec<(FeatureVector, u8)>, class_names: (String, String)) -> Result<Self> {
        let width = rows.first().map_or(0, |(f, _)| f.values.len());
        let mut seen = HashSet::new();
        for (f, label) in &rows {
            if f.values.len() != width {
                return Err(Error::arg(format!(
                    "subject `{}` has {} features, expected {width}",
                    f.subject_id,
                    f.values.len()
                )));
            }
            if f.values.iter().any(|v| !v.is_finite()) {
                return Err(Error::arg(format!(
                    "subject `{}` has a non-finite feature",
                    f.subject_id
                )));
            }
            if *label > 1 {
                return Err(Error::arg(format!(
                    "subject `{}` has label {label}",
                    f.subject_id
                )));
            }
            if !seen.insert(f.subject_id.as_str()) {
                return Err(Error::DuplicateId(f.subject_id.clone()));
            }
        }
        Ok(Self { rows, class_names })
    }

    /// Rows with generated ids `row0000`, `row0001`, ...
    pub fn from_rows(rows: Vec<(Vec<f64>, u8)>) -> Result<Self> {
        Self::new(
            rows.into_iter()
                .enumerate()
                .map(|(i, (v, l))| (FeatureVector::new(format!("row{i:04}"), v), l))
                .collect(),
            ("0".into(), "1".into()),
        )
    }

    pub fn rows(&self) -> &[(FeatureVector, u8)] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn n_features(&self) -> usize {
        self.rows.first().map_or(0, |(f, _)| f.values.len())
    }

    pub fn class_names(&self) -> &(String, String) {
        &self.class_names
    }

    pub fn labels(&self) -> Vec<u8> {
        self.rows.iter().map(|(_, l)| *l).collect()
    }

    pub fn class_counts(&self) -> [usize; 2] {
        let pos = self.rows.iter().filter(|(_, l)| *l == 1).count();
        [self.rows.len() - pos, pos]
    }

    pub fn check_trainable(&self) -> Result<()> {
        let [neg, pos] = self.class_counts();
        if neg < 2 || pos < 2 {
            return Err(Error::arg(format!(
                "training data needs at least 2 rows per class, found {neg} and {pos}"
            )));
        }
        Ok(())
    }

    pub(crate) fn xy(&self) -> (Vec<Vec<f64>>, Vec<u8>) {
        self.rows
            .iter()
            .map(|(f, l)| (f.values.clone(), *l))
            .unzip()
    }

    /// Rows sorted by subject id.
    pub fn canonical(&self) -> Self {
        let mut rows = self.rows.clone();
        rows.sort_by(|a, b| a.0.subject_id.cmp(&b.0.subject_id));
        Self {
            rows,
            class_names: self.class_names.clone(),
        }
    }

    pub fn subset(&self, idx: &[usize]) -> Self {
        Self {
            rows: idx.iter().map(|&i| self.rows[i].clone()).collect(),
            class_names: self.class_names.clone(),
        }
    }

    /// The same rows with every feature mapped through `f`.
    pub fn map_features(&self, f: impl Fn(f64) -> f64) -> Self {
        Self {
            rows: self
                .rows
                .iter()
                .map(|(fv, l)| {
                    (
                        FeatureVector::new(
                            fv.subject_id.clone(),
                            fv.values.iter().map(|&v| f(v)).collect(),
                        ),
                        *l,
                    )
                })
                .collect(),
            class_names: self.class_names.clone(),
        }
    }
}

pub(crate) fn class_rows(ds: &LabeledDataset) -> [Vec<&[f64]>; 2] {
    let mut out = [Vec::new(), Vec::new()];
    for (f, l) in ds.rows() {
        out[usize::from(*l)].push(f.values.as_slice());
    }
    out
}

/// Per-feature centering and scaling with population statistics; constant
/// features are only centered.
#[derive(Debug, Clone, Default)]
pub struct Standardizer {
    mean: Vec<f64>,
    scale: Vec<f64>,
}

impl Standardizer {
    pub fn fit(xs: &[Vec<f64>]) -> Self {
        let d = xs.first().map_or(0, Vec::len);
        let n = xs.len() as f64;
        let mean: Vec<f64> = (0..d)
            .map(|j| xs.iter().map(|x| x[j]).sum::<f64>() / n)
            .collect();
        let scale = (0..d)
            .map(|j| {
                let v = xs.iter().map(|x| (x[j] - mean[j]).powi(2)).sum::<f64>() / n;
                if v > 0.0 {
                    v.sqrt()
                } else {
                    1.0
                }
            })
            .collect();
        Self { mean, scale }
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        x.iter()
            .zip(self.mean.iter().zip(&self.scale))
            .map(|(v, (m, s))| (v - m) / s)
            .collect()
    }
}

pub fn features_from_profiles(
    profiles: &[DocumentProfile],
    labels: &HashMap<String, u8>,
    mode: FeatureMode,
) -> Result<LabeledDataset> {
    let rows = profiles
        .iter()
        .map(|p| {
            let label = *labels
                .get(&p.doc_id)
                .ok_or_else(|| Error::MissingLabel(p.doc_id.clone()))?;
            let values = match mode {
                FeatureMode::MeanOnly => vec![p.mean_ei],
                FeatureMode::MeanAndStd => vec![p.mean_ei, p.std_ei],
            };
            Ok((FeatureVector::new(p.doc_id.clone(), values), label))
        })
        .collect::<Result<Vec<_>>>()?;
    LabeledDataset::new(rows, ("0".into(), "1".into()))
}

/// Fold assignment for every row of a dataset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FoldPlan {
    pub k: usize,
    pub assignments: Vec<usize>,
    pub seed: u64,
}

impl FoldPlan {
    /// `(train, test)` row indices for fold `f`, each in row order.
    pub fn split(&self, f: usize) -> (Vec<usize>, Vec<usize>) {
        (0..self.assignments.len()).partition(|&i| self.assignments[i] != f)
    }

    pub fn fold_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.k];
        for &a in &self.assignments {
            sizes[a] += 1;
        }
        sizes
    }
}

/// Stratified fold assignment.
///
/// Rows are put in subject-id order, each class is shuffled with a ChaCha8
/// generator seeded from `seed` (class 0 first), and rows are dealt to folds
/// round-robin with a single counter running across both classes.
pub fn stratified_kfold(ds: &LabeledDataset, k: usize, seed: u64) -> Result<FoldPlan> {
    let [neg, pos] = ds.class_counts();
    if k < 2 {
        return Err(Error::arg(format!("k must be at least 2, got {k}")));
    }
    if k > neg.min(pos) {
        return Err(Error::arg(format!(
            "k = {k} exceeds the smaller class size ({})",
            neg.min(pos)
        )));
    }

    let mut order: Vec<usize> = (0..ds.len()).collect();
    order.sort_by(|&a, &b| ds.rows[a].0.subject_id.cmp(&ds.rows[b].0.subject_id));

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut assignments = vec![usize::MAX; ds.len()];
    let mut next = 0;
    for class in [0u8, 1] {
        let mut members: Vec<usize> = order
            .iter()
            .copied()
            .filter(|&i| ds.rows[i].1 == class)
            .collect();
        members.shuffle(&mut rng);
        for i in members {
            assignments[i] = next % k;
            next += 1;
        }
    }
    Ok(FoldPlan {
        k,
        assignments,
        seed,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ClassifierKind {
    LogReg,
    Lda,
    Gnb,
    Knn,
    DTree,
}

/// Methods from the comparison table that are recognised but not provided.
pub const UNIMPLEMENTED_CLASSIFIERS: [&str; 4] =
    ["svc", "gradient_boosting", "bagging", "random_forest"];

impl ClassifierKind {
    pub const ALL: [ClassifierKind; 5] = [
        ClassifierKind::LogReg,
        ClassifierKind::Lda,
        ClassifierKind::Gnb,
        ClassifierKind::Knn,
        ClassifierKind::DTree,
    ];

    pub fn id(self) -> &'static str {
        match self {
            ClassifierKind::LogReg => "logreg",
            ClassifierKind::Lda => "lda",
            ClassifierKind::Gnb => "gnb",
            ClassifierKind::Knn => "knn",
            ClassifierKind::DTree => "dtree",
        }
    }

    /// Name used in the comparison table.
    pub fn display_name(self) -> &'static str {
        match self {
            ClassifierKind::LogReg => "LogisticRegression",
            ClassifierKind::Lda => "LDA",
            ClassifierKind::Gnb => "GaussianNB",
            ClassifierKind::Knn => "KNeighborsClassifier",
            ClassifierKind::DTree => "DecisionTreeClassifier",
        }
    }
}

impl fmt::Display for ClassifierKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for ClassifierKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.trim().to_ascii_lowercase().replace(['-', ' '], "_");
        if let Some(kind) = Self::ALL
            .into_iter()
            .find(|k| k.id() == key || k.display_name().to_ascii_lowercase() == key)
        {
            return Ok(kind);
        }
        let unimplemented = match key.as_str() {
            "svc" | "svm" => Some("svc"),
            "gradient_boosting" | "gradientboostingclassifier" | "gbc" => Some("gradient_boosting"),
            "bagging" | "baggingclassifier" => Some("bagging"),
            "random_forest" | "randomforestclassifier" | "rf" => Some("random_forest"),
            _ => None,
        };
        match unimplemented {
            Some(id) => Err(Error::NotImplemented(id.into())),
            None => Err(Error::arg(format!(
                "unknown classifier `{s}` (expected one of logreg, lda, gnb, knn, dtree)"
            ))),
        }
    }
}

pub trait Classifier {
    fn fit(train: &LabeledDataset) -> Result<Self>
    where
        Self: Sized;

    /// Continuous score for class 1, in [0, 1].
    fn score(&self, x: &[f64]) -> f64;

    fn predict(&self, x: &[f64]) -> Prediction {
        let score = self.score(x);
        Prediction {
            label: u8::from(score >= 0.5),
            score,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Prediction {
    pub label: u8,
    pub score: f64,
}

pub fn fit(
    kind: ClassifierKind,
    train: &LabeledDataset,
) -> Result<Box<dyn Classifier + Send + Sync>> {
    train.check_trainable()?;
    Ok(match kind {
        ClassifierKind::LogReg => Box::new(LogisticRegression::fit(train)?),
        ClassifierKind::Lda => Box::new(LinearDiscriminant::fit(train)?),
        ClassifierKind::Gnb => Box::new(GaussianNb::fit(train)?),
        ClassifierKind::Knn => Box::new(KNearest::fit(train)?),
        ClassifierKind::DTree => Box::new(DecisionTree::fit(train)?),
    })
}

pub fn fit_predict(
    kind: ClassifierKind,
    train: &LabeledDataset,
    test: &[FeatureVector],
) -> Result<Vec<Prediction>> {
    let width = train.n_features();
    if let Some(bad) = test.iter().find(|f| f.values.len() != width) {
        return Err(Error::arg(format!(
            "test subject `{}` has {} features, model expects {width}",
            bad.subject_id,
            bad.values.len()
        )));
    }
    let model = fit(kind, train)?;
    Ok(test.iter().map(|f| model.predict(&f.values)).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MeanStd {
    pub mean: f64,
    pub std: f64,
}

impl MeanStd {
    /// Mean and population standard deviation.
    pub fn of(xs: &[f64]) -> Self {
        let (mean, std) = mean_std(xs, StdMode::Population);
        Self { mean, std }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FoldMetrics {
    pub accuracy: f64,
    /// `None` when the fold's test split holds a single class.
    pub roc_auc: Option<f64>,
    pub f1: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EvalReport {
    pub classifier_id: String,
    pub k: usize,
    pub seed: u64,
    pub accuracy: MeanStd,
    /// Over folds with a defined AUC; `None` if there were none.
    pub roc_auc: Option<MeanStd>,
    pub auc_excluded_folds: usize,
    pub f1: MeanStd,
    pub per_fold: Vec<FoldMetrics>,
}

/// Stratified k-fold evaluation. Rows are put in subject-id order first, so
/// the result does not depend on the order rows were supplied in.
pub fn cross_validate(
    kind: ClassifierKind,
    ds: &LabeledDataset,
    k: usize,
    seed: u64,
) -> Result<EvalReport> {
    let ds = ds.canonical();
    let plan = stratified_kfold(&ds, k, seed)?;
    let mut per_fold = Vec::with_capacity(k);

    for fold in 0..k {
        let (train_idx, test_idx) = plan.split(fold);
        let train = ds.subset(&train_idx);
        let test = ds.subset(&test_idx);
        let test_x: Vec<FeatureVector> = test.rows().iter().map(|(f, _)| f.clone()).collect();
        let truth = test.labels();

        let preds = fit_predict(kind, &train, &test_x)?;
        let labels: Vec<u8> = preds.iter().map(|p| p.label).collect();
        let scores: Vec<f64> = preds.iter().map(|p| p.score).collect();
        let roc_auc = match metrics::roc_auc(&scores, &truth) {
            Ok(v) => Some(v),
            Err(Error::UndefinedMetric(_)) => None,
            Err(e) => return Err(e),
        };
        per_fold.push(FoldMetrics {
            accuracy: metrics::accuracy(&labels, &truth)?,
            roc_auc,
            f1: metrics::f1_score(&labels, &truth)?,
        });
    }

    let accs: Vec<f64> = per_fold.iter().map(|f| f.accuracy).collect();
    let f1s: Vec<f64> = per_fold.iter().map(|f| f.f1).collect();
    let aucs: Vec<f64> = per_fold.iter().filter_map(|f| f.roc_auc).collect();
    Ok(EvalReport {
        classifier_id: kind.id().to_string(),
        k,
        seed,
        accuracy: MeanStd::of(&accs),
        roc_auc: (!aucs.is_empty()).then(|| MeanStd::of(&aucs)),
        auc_excluded_folds: k - aucs.len(),
        f1: MeanStd::of(&f1s),
        per_fold,
    })
}

pub const TABLE1_HEADER: [&str; 7] = [
    "classifier",
    "perf_mean",
    "perf_std",
    "auc_mean",
    "auc_std",
    "f1_mean",
    "f1_std",
];

/// Writes reports as CSV in the comparison-table layout, four decimals.
pub fn write_table1<W: Write>(reports: &[EvalReport], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(TABLE1_HEADER)?;
    for r in reports {
        let name = r.classifier_id.parse::<ClassifierKind>().map_or_else(
            |_| r.classifier_id.clone(),
            |k| k.display_name().to_string(),
        );
        let (auc_mean, auc_std) = match r.roc_auc {
            Some(m) => (format!("{:.4}", m.mean), format!("{:.4}", m.std)),
            None => ("NA".into(), "NA".into()),
        };
        w.write_record([
            name,
            format!("{:.4}", r.accuracy.mean),
            format!("{:.4}", r.accuracy.std),
            auc_mean,
            auc_std,
            format!("{:.4}", r.f1.mean),
            format!("{:.4}", r.f1.std),
        ])?;
    }
    w.flush().map_err(|e| Error::io("table1", e))?;
    Ok(())
}
