//! Command-line front end.
//!
//! Every command reads its inputs, computes all results in memory and only
//! then writes files into the output directory, so a failing run leaves
//! nothing behind.

use std::collections::HashMap;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::classify::{
    cross_validate, features_from_profiles, write_table1, ClassifierKind, EvalReport, FeatureMode,
    LabeledDataset,
};
use crate::corpus::{
    load_manifest, write_profiles_csv, CorpusManifest, CorpusRun, CorpusScorer, Histogram,
    HISTOGRAM_BINS,
};
use crate::error::{Error, Result};
use crate::intensity::{AdjectiveLexicon, StdMode};
use crate::lexicon::{build_emotion_list, AffectLexicon, EmotionWordList};
use crate::stats::{two_sample_ttest, SampleSummary, TTestKind, TTestResult};
use crate::textproc::Segmenter;

pub const SEED_ENV: &str = "AFFECTIX_SEED";
pub const DEFAULT_SEED: u64 = 42;
pub const DEFAULT_K_FOLDS: usize = 10;
const SAMPLE_WORDS: usize = 10;

#[derive(Debug, Parser)]
#[command(
    name = "affectix",
    version,
    about = "Emotion intensity scoring and corpus analysis"
)]
pub struct Cli {
    #[command(flatten)]
    pub options: Options,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StdModeArg {
    Population,
    Sample,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FeaturesArg {
    Mean,
    #[value(name = "mean_std")]
    MeanStd,
}

#[derive(Debug, Clone, Args)]
pub struct Options {
    /// Affect lexicon in tab-separated `word pleasantness activation imagery` form
    #[arg(long, global = true, value_name = "PATH")]
    pub lexicon: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 0.2, value_name = "F")]
    pub lower_frac: f64,
    #[arg(long, global = true, default_value_t = 0.2, value_name = "F")]
    pub upper_frac: f64,
    /// Spread of sentence intensities within a document
    #[arg(long, global = true, value_enum, default_value_t = StdModeArg::Population)]
    pub std_mode: StdModeArg,
    #[arg(long, global = true, default_value_t = DEFAULT_K_FOLDS, value_name = "INT")]
    pub k: usize,
    #[arg(long, global = true, env = SEED_ENV, default_value_t = DEFAULT_SEED, value_name = "INT")]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = FeaturesArg::Mean)]
    pub features: FeaturesArg,
    #[arg(
        long,
        global = true,
        default_value = "affectix-out",
        value_name = "DIR"
    )]
    pub out: PathBuf,
    /// Abbreviations, one per line, replacing the built-in list
    #[arg(long, global = true, value_name = "FILE")]
    pub abbrev: Option<PathBuf>,
    /// Adjectives, one per line, replacing the built-in list
    #[arg(long, global = true, value_name = "FILE")]
    pub adjectives: Option<PathBuf>,
    /// Suffix rules, `suffix<TAB>adj|notadj` per line
    #[arg(long, global = true, value_name = "FILE")]
    pub adjective_suffixes: Option<PathBuf>,
    /// Classifier id; repeat to run several (default: all implemented)
    #[arg(long = "classifier", global = true, value_name = "ID")]
    pub classifiers: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Score every document of a manifest
    Score { manifest: PathBuf },
    /// Welch tests between two corpora on intensity and adjective rate
    Compare {
        manifest_a: PathBuf,
        manifest_b: PathBuf,
    },
    /// Cross-validated classification of a two-label manifest
    Classify { manifest: PathBuf },
    /// Print lexicon size and tail contents
    LexiconInfo,
    /// Score, compare and classify two corpora in one run
    Replicate {
        manifest_a: PathBuf,
        manifest_b: PathBuf,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunConfig {
    pub lexicon_path: Option<PathBuf>,
    pub lower_frac: f64,
    pub upper_frac: f64,
    pub std_mode: StdMode,
    pub k_folds: usize,
    pub seed: u64,
    pub feature_mode: FeatureMode,
    pub output_dir: PathBuf,
    pub abbreviations: Option<PathBuf>,
    pub adjectives: Option<PathBuf>,
    pub adjective_suffixes: Option<PathBuf>,
    pub classifiers: Vec<String>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            lexicon_path: None,
            lower_frac: 0.2,
            upper_frac: 0.2,
            std_mode: StdMode::Population,
            k_folds: DEFAULT_K_FOLDS,
            seed: DEFAULT_SEED,
            feature_mode: FeatureMode::MeanOnly,
            output_dir: PathBuf::from("affectix-out"),
            abbreviations: None,
            adjectives: None,
            adjective_suffixes: None,
            classifiers: Vec::new(),
        }
    }
}

impl From<&Options> for RunConfig {
    fn from(o: &Options) -> Self {
        Self {
            lexicon_path: o.lexicon.clone(),
            lower_frac: o.lower_frac,
            upper_frac: o.upper_frac,
            std_mode: match o.std_mode {
                StdModeArg::Population => StdMode::Population,
                StdModeArg::Sample => StdMode::Sample,
            },
            k_folds: o.k,
            seed: o.seed,
            feature_mode: match o.features {
                FeaturesArg::Mean => FeatureMode::MeanOnly,
                FeaturesArg::MeanStd => FeatureMode::MeanAndStd,
            },
            output_dir: o.out.clone(),
            abbreviations: o.abbrev.clone(),
            adjectives: o.adjectives.clone(),
            adjective_suffixes: o.adjective_suffixes.clone(),
            classifiers: o.classifiers.clone(),
        }
    }
}

impl RunConfig {
    fn lexicon(&self) -> Result<AffectLexicon> {
        let path = self
            .lexicon_path
            .as_ref()
            .ok_or_else(|| Error::arg("--lexicon is required"))?;
        AffectLexicon::from_path(path)
    }

    fn emotion_list(&self) -> Result<EmotionWordList> {
        build_emotion_list(&self.lexicon()?, self.lower_frac, self.upper_frac)
    }

    fn adjective_lexicon(&self) -> Result<AdjectiveLexicon> {
        AdjectiveLexicon::from_files(
            self.adjectives.as_deref(),
            self.adjective_suffixes.as_deref(),
        )
    }

    fn segmenter(&self) -> Result<Segmenter> {
        match &self.abbreviations {
            Some(p) => Segmenter::from_abbreviation_file(p),
            None => Ok(Segmenter::default()),
        }
    }

    fn classifier_kinds(&self) -> Result<Vec<ClassifierKind>> {
        if self.classifiers.is_empty() {
            return Ok(ClassifierKind::ALL.to_vec());
        }
        let mut kinds = Vec::new();
        for id in &self.classifiers {
            let kind: ClassifierKind = id.parse()?;
            if !kinds.contains(&kind) {
                kinds.push(kind);
            }
        }
        Ok(kinds)
    }
}

/// Resources shared by the commands of one invocation.
struct Scoring {
    list: EmotionWordList,
    adjectives: AdjectiveLexicon,
    segmenter: Segmenter,
    std_mode: StdMode,
}

impl Scoring {
    fn new(cfg: &RunConfig) -> Result<Self> {
        Ok(Self {
            list: cfg.emotion_list()?,
            adjectives: cfg.adjective_lexicon()?,
            segmenter: cfg.segmenter()?,
            std_mode: cfg.std_mode,
        })
    }

    fn run(&self, manifest: &CorpusManifest) -> Result<CorpusRun> {
        CorpusScorer {
            list: &self.list,
            adjectives: &self.adjectives,
            segmenter: self.segmenter.clone(),
            std_mode: self.std_mode,
        }
        .run(manifest)
    }
}

/// Files produced by a command, written together at the end.
#[derive(Default)]
struct Outputs {
    files: Vec<(String, Vec<u8>)>,
}

impl Outputs {
    fn add(&mut self, name: impl Into<String>, bytes: Vec<u8>) {
        self.files.push((name.into(), bytes));
    }

    fn add_json<T: Serialize>(&mut self, name: &str, value: &T) -> Result<()> {
        let mut bytes = serde_json::to_vec_pretty(value)?;
        bytes.push(b'\n');
        self.add(name, bytes);
        Ok(())
    }

    /// Writes everything under `dir`; on failure removes what was written.
    fn commit(self, dir: &Path) -> Result<()> {
        let mut created_dirs = Vec::new();
        let mut written = Vec::new();
        let result = (|| {
            for (name, bytes) in &self.files {
                let path = dir.join(name);
                let parent = path.parent().unwrap_or(dir);
                let mut missing = Vec::new();
                let mut p = Some(parent);
                while let Some(d) = p {
                    if d.as_os_str().is_empty() || d.exists() {
                        break;
                    }
                    missing.push(d.to_path_buf());
                    p = d.parent();
                }
                fs::create_dir_all(parent).map_err(|e| Error::io(parent, e))?;
                created_dirs.extend(missing.into_iter().rev());
                fs::write(&path, bytes).map_err(|e| Error::io(&path, e))?;
                written.push(path);
            }
            Ok(())
        })();
        if result.is_err() {
            for f in &written {
                let _ = fs::remove_file(f);
            }
            for d in created_dirs.iter().rev() {
                let _ = fs::remove_dir(d);
            }
        }
        result
    }
}

fn fmt_summary(s: &SampleSummary) -> String {
    format!("n={} mean={:.4} sd={:.4}", s.n, s.mean, s.sd)
}

fn fmt_test(t: &TTestResult) -> String {
    format!("t={:.4} df={:.2} p={:.3e}", t.t, t.df, t.p_two_sided)
}

#[derive(Serialize)]
struct ScoreReport<'a> {
    config: &'a RunConfig,
    run: &'a CorpusRun,
}

fn score_outputs(cfg: &RunConfig, run: &CorpusRun, prefix: &str, out: &mut Outputs) -> Result<()> {
    let mut csv = Vec::new();
    write_profiles_csv(run, &mut csv)?;
    out.add(format!("{prefix}profiles.csv"), csv);
    out.add_json(
        &format!("{prefix}profiles.json"),
        &ScoreReport { config: cfg, run },
    )?;
    let mut hist = Vec::new();
    Histogram::of_mean_ei(run, HISTOGRAM_BINS).write_csv(&mut hist)?;
    out.add(format!("{prefix}histogram.csv"), hist);
    Ok(())
}

fn print_run(run: &CorpusRun, w: &mut dyn Write) -> io::Result<()> {
    writeln!(
        w,
        "scored {} documents, skipped {}",
        run.profiles.len(),
        run.skipped.len()
    )?;
    for s in &run.skipped {
        writeln!(w, "  skipped {}: {}", s.doc_id, s.reason)?;
    }
    for (label, s) in &run.group_summaries {
        writeln!(w, "  {label}: mean_ei {}", fmt_summary(s))?;
    }
    Ok(())
}

fn score(cfg: &RunConfig, manifest: &Path, w: &mut dyn Write) -> Result<()> {
    let manifest = load_manifest(manifest)?;
    let run = Scoring::new(cfg)?.run(&manifest)?;
    let mut out = Outputs::default();
    score_outputs(cfg, &run, "", &mut out)?;
    out.commit(&cfg.output_dir)?;
    print_run(&run, w).map_err(|e| Error::io("stdout", e))
}

#[derive(Debug, Serialize)]
struct GroupReport {
    name: String,
    documents: usize,
    skipped: usize,
    mean_ei: SampleSummary,
    adjective_rate: SampleSummary,
}

#[derive(Debug, Serialize)]
struct Comparison {
    groups: [GroupReport; 2],
    mean_ei: TTestResult,
    adjective_rate: TTestResult,
}

fn group_names(a: &Path, b: &Path) -> (String, String) {
    let stem = |p: &Path| {
        p.file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_default()
    };
    let (sa, sb) = (stem(a), stem(b));
    if sa.is_empty() || sb.is_empty() || sa == sb {
        ("a".into(), "b".into())
    } else {
        (sa, sb)
    }
}

fn pooled(run: &CorpusRun) -> (Vec<f64>, Vec<f64>) {
    run.profiles
        .iter()
        .map(|d| (d.profile.mean_ei, d.adjective_rate))
        .unzip()
}

fn compare_runs(names: (String, String), a: &CorpusRun, b: &CorpusRun) -> Result<Comparison> {
    let (ei_a, adj_a) = pooled(a);
    let (ei_b, adj_b) = pooled(b);
    let group = |name: String, run: &CorpusRun, ei: &[f64], adj: &[f64]| -> Result<GroupReport> {
        Ok(GroupReport {
            name,
            documents: run.profiles.len(),
            skipped: run.skipped.len(),
            mean_ei: crate::stats::summarize(ei)?,
            adjective_rate: crate::stats::summarize(adj)?,
        })
    };
    let mean_ei = two_sample_ttest(&ei_a, &ei_b, TTestKind::Welch)?;
    let adjective_rate = two_sample_ttest(&adj_a, &adj_b, TTestKind::Welch)?;
    Ok(Comparison {
        groups: [
            group(names.0, a, &ei_a, &adj_a)?,
            group(names.1, b, &ei_b, &adj_b)?,
        ],
        mean_ei,
        adjective_rate,
    })
}

fn print_comparison(c: &Comparison, w: &mut dyn Write) -> io::Result<()> {
    for g in &c.groups {
        writeln!(
            w,
            "{}: {} documents ({} skipped)",
            g.name, g.documents, g.skipped
        )?;
        writeln!(w, "  mean_ei        {}", fmt_summary(&g.mean_ei))?;
        writeln!(w, "  adjective_rate {}", fmt_summary(&g.adjective_rate))?;
    }
    writeln!(w, "welch mean_ei:        {}", fmt_test(&c.mean_ei))?;
    writeln!(w, "welch adjective_rate: {}", fmt_test(&c.adjective_rate))
}

fn compare(cfg: &RunConfig, a: &Path, b: &Path, w: &mut dyn Write) -> Result<()> {
    let scoring = Scoring::new(cfg)?;
    let run_a = scoring.run(&load_manifest(a)?)?;
    let run_b = scoring.run(&load_manifest(b)?)?;
    let c = compare_runs(group_names(a, b), &run_a, &run_b)?;
    let mut out = Outputs::default();
    out.add_json("comparison.json", &c)?;
    out.commit(&cfg.output_dir)?;
    print_comparison(&c, w).map_err(|e| Error::io("stdout", e))
}

#[derive(Debug, Serialize)]
struct ClassifyReport<'a> {
    config: &'a RunConfig,
    class_names: (String, String),
    class_counts: [usize; 2],
    skipped: usize,
    reports: Vec<EvalReport>,
}

/// Builds the subject dataset from a run. Class 1 is the label that sorts
/// second.
fn dataset_from_run(run: &CorpusRun, mode: FeatureMode) -> Result<LabeledDataset> {
    let labels = run.labels();
    if labels.len() != 2 {
        return Err(Error::arg(format!(
            "classification needs exactly 2 labels, found {}: {}",
            labels.len(),
            labels.join(", ")
        )));
    }
    let by_doc: HashMap<String, u8> = run
        .profiles
        .iter()
        .map(|d| (d.doc_id.clone(), u8::from(d.label == labels[1])))
        .collect();
    let profiles: Vec<_> = run.profiles.iter().map(|d| d.profile.clone()).collect();
    let ds = features_from_profiles(&profiles, &by_doc, mode)?;
    LabeledDataset::new(ds.rows().to_vec(), (labels[0].clone(), labels[1].clone()))
}

fn classify_outputs(
    cfg: &RunConfig,
    run: &CorpusRun,
    kinds: &[ClassifierKind],
    prefix: &str,
    out: &mut Outputs,
) -> Result<Vec<EvalReport>> {
    let ds = dataset_from_run(run, cfg.feature_mode)?;
    let counts = ds.class_counts();
    if counts.iter().any(|&c| c < cfg.k_folds) {
        return Err(Error::arg(format!(
            "each label needs at least {} documents for {}-fold validation, found {} and {}",
            cfg.k_folds, cfg.k_folds, counts[0], counts[1]
        )));
    }
    let reports = kinds
        .iter()
        .map(|&kind| cross_validate(kind, &ds, cfg.k_folds, cfg.seed))
        .collect::<Result<Vec<_>>>()?;

    let mut table = Vec::new();
    write_table1(&reports, &mut table)?;
    out.add(format!("{prefix}table1.csv"), table);

    let mut features = csv::Writer::from_writer(Vec::new());
    features.write_record(["subject_id", "label", "mean_ei", "std_ei"])?;
    for d in &run.profiles {
        features.write_record([
            d.doc_id.clone(),
            d.label.clone(),
            d.profile.mean_ei.to_string(),
            d.profile.std_ei.to_string(),
        ])?;
    }
    let features = features
        .into_inner()
        .map_err(|e| Error::io("features.csv", e.into_error()))?;
    out.add(format!("{prefix}features.csv"), features);

    out.add_json(
        &format!("{prefix}classify.json"),
        &ClassifyReport {
            config: cfg,
            class_names: ds.class_names().clone(),
            class_counts: counts,
            skipped: run.skipped.len(),
            reports: reports.clone(),
        },
    )?;
    Ok(reports)
}

fn print_reports(reports: &[EvalReport], w: &mut dyn Write) -> Result<()> {
    let mut table = Vec::new();
    write_table1(reports, &mut table)?;
    w.write_all(&table).map_err(|e| Error::io("stdout", e))
}

fn classify(cfg: &RunConfig, manifest: &Path, w: &mut dyn Write) -> Result<()> {
    let kinds = cfg.classifier_kinds()?;
    let manifest = load_manifest(manifest)?;
    let run = Scoring::new(cfg)?.run(&manifest)?;
    let mut out = Outputs::default();
    let reports = classify_outputs(cfg, &run, &kinds, "", &mut out)?;
    out.commit(&cfg.output_dir)?;
    print_reports(&reports, w)
}

fn lexicon_info(cfg: &RunConfig, w: &mut dyn Write) -> Result<()> {
    let lex = cfg.lexicon()?;
    let list = build_emotion_list(&lex, cfg.lower_frac, cfg.upper_frac)?;
    let sample = |words: &[String]| {
        words
            .iter()
            .take(SAMPLE_WORDS)
            .cloned()
            .collect::<Vec<_>>()
            .join(", ")
    };
    (|| -> io::Result<()> {
        writeln!(w, "lexicon: {}", lex.source_id())?;
        writeln!(w, "entries: {}", lex.len())?;
        writeln!(w, "duplicates ignored: {}", lex.duplicates())?;
        writeln!(
            w,
            "lower tail ({}): {} words",
            cfg.lower_frac,
            list.negative().len()
        )?;
        writeln!(
            w,
            "upper tail ({}): {} words",
            cfg.upper_frac,
            list.positive().len()
        )?;
        writeln!(w, "least pleasant: {}", sample(list.negative()))?;
        writeln!(w, "most pleasant: {}", sample(list.positive()))
    })()
    .map_err(|e| Error::io("stdout", e))
}

fn replicate(cfg: &RunConfig, a: &Path, b: &Path, w: &mut dyn Write) -> Result<()> {
    let kinds = cfg.classifier_kinds()?;
    let scoring = Scoring::new(cfg)?;
    let names = group_names(a, b);
    let ma = load_manifest(a)?.relabel(&names.0);
    let mb = load_manifest(b)?.relabel(&names.1);
    let combined = CorpusManifest::merge(&[ma.clone(), mb.clone()])?;

    let run = scoring.run(&combined)?;
    let run_a = scoring.run(&ma)?;
    let run_b = scoring.run(&mb)?;
    let comparison = compare_runs(names, &run_a, &run_b)?;

    let mut out = Outputs::default();
    score_outputs(cfg, &run, "score/", &mut out)?;
    out.add_json("compare/comparison.json", &comparison)?;
    let reports = classify_outputs(cfg, &run, &kinds, "classify/", &mut out)?;
    out.commit(&cfg.output_dir)?;

    print_run(&run, w).map_err(|e| Error::io("stdout", e))?;
    print_comparison(&comparison, w).map_err(|e| Error::io("stdout", e))?;
    print_reports(&reports, w)
}

fn report(result: Result<()>) -> i32 {
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn cmd_score(cfg: &RunConfig, manifest: &Path) -> i32 {
    report(score(cfg, manifest, &mut io::stdout()))
}

pub fn cmd_compare(cfg: &RunConfig, manifest_a: &Path, manifest_b: &Path) -> i32 {
    report(compare(cfg, manifest_a, manifest_b, &mut io::stdout()))
}

pub fn cmd_classify(cfg: &RunConfig, manifest: &Path) -> i32 {
    report(classify(cfg, manifest, &mut io::stdout()))
}

pub fn cmd_lexicon_info(cfg: &RunConfig) -> i32 {
    report(lexicon_info(cfg, &mut io::stdout()))
}

pub fn cmd_replicate(cfg: &RunConfig, manifest_a: &Path, manifest_b: &Path) -> i32 {
    report(replicate(cfg, manifest_a, manifest_b, &mut io::stdout()))
}

/// Runs a parsed command line, writing human-readable output to `w`.
pub fn execute(cli: &Cli, w: &mut dyn Write) -> Result<()> {
    let cfg = RunConfig::from(&cli.options);
    match &cli.command {
        Command::Score { manifest } => score(&cfg, manifest, w),
        Command::Compare {
            manifest_a,
            manifest_b,
        } => compare(&cfg, manifest_a, manifest_b, w),
        Command::Classify { manifest } => classify(&cfg, manifest, w),
        Command::LexiconInfo => lexicon_info(&cfg, w),
        Command::Replicate {
            manifest_a,
            manifest_b,
        } => replicate(&cfg, manifest_a, manifest_b, w),
    }
}

/// Parses `args` and runs the command; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    report(execute(&cli, &mut io::stdout()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seed_flag_and_defaults() {
        let cli = Cli::try_parse_from(["affectix", "lexicon-info", "--seed", "7"]).unwrap();
        assert_eq!(cli.options.seed, 7);
        let cli = Cli::try_parse_from(["affectix", "score", "m.csv"]).unwrap();
        let cfg = RunConfig::from(&cli.options);
        assert_eq!(cfg.k_folds, 10);
        assert_eq!(cfg.lower_frac, 0.2);
        assert_eq!(cfg.feature_mode, FeatureMode::MeanOnly);
        assert_eq!(cfg.std_mode, StdMode::Population);
    }

    #[test]
    fn value_enums() {
        let cli = Cli::try_parse_from([
            "affectix",
            "classify",
            "m.csv",
            "--features",
            "mean_std",
            "--std-mode",
            "sample",
            "--classifier",
            "lda",
            "--classifier",
            "knn",
        ])
        .unwrap();
        let cfg = RunConfig::from(&cli.options);
        assert_eq!(cfg.feature_mode, FeatureMode::MeanAndStd);
        assert_eq!(cfg.std_mode, StdMode::Sample);
        assert_eq!(
            cfg.classifier_kinds().unwrap(),
            [ClassifierKind::Lda, ClassifierKind::Knn]
        );
        assert!(Cli::try_parse_from(["affectix", "score", "m", "--features", "x"]).is_err());
    }

    #[test]
    fn unimplemented_classifier_is_exit_4() {
        let cfg = RunConfig {
            classifiers: vec!["svc".into()],
            ..RunConfig::default()
        };
        let err = cfg.classifier_kinds().unwrap_err();
        assert_eq!(err.exit_code(), 4);
        assert!(err.to_string().contains("svc"));
    }

    #[test]
    fn failed_commit_removes_partial_files() {
        let dir = tempfile::tempdir().unwrap();
        let target = dir.path().join("out");
        let mut out = Outputs::default();
        out.add("a.txt", b"a".to_vec());
        out.add("sub/b.txt", b"b".to_vec());
        // a directory where a file should go
        fs::create_dir_all(target.join("c.txt")).unwrap();
        out.add("c.txt", b"c".to_vec());
        assert!(out.commit(&target).is_err());
        assert!(!target.join("a.txt").exists());
        assert!(!target.join("sub").exists());
    }

    #[test]
    fn group_names_fall_back() {
        assert_eq!(
            group_names(Path::new("x/poems.csv"), Path::new("y/wiki.csv")),
            ("poems".into(), "wiki".into())
        );
        assert_eq!(
            group_names(Path::new("x/m.csv"), Path::new("y/m.csv")),
            ("a".into(), "b".into())
        );
    }
}
