//! Labeled document collections and batch scoring.
//!
//! A manifest is a CSV file with the header `doc_id,path,label`. Paths are
//! relative to the directory holding the manifest and may not leave it.
//! Documents are plain UTF-8 text; one that cannot be read, is not valid
//! UTF-8, or has no scorable sentence is recorded as skipped and the run
//! carries on.

use std::collections::{BTreeMap, HashSet};
use std::fs;
use std::io::Write;
use std::path::{Component, Path, PathBuf};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::intensity::{
    adjective_rate, profile_document_with, AdjectiveLexicon, DocumentProfile, StdMode,
};
use crate::lexicon::EmotionWordList;
use crate::stats::{summarize, SampleSummary};
use crate::textproc::Segmenter;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub doc_id: String,
    pub path: PathBuf,
    pub label: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorpusManifest {
    pub root: PathBuf,
    pub entries: Vec<ManifestEntry>,
}

/// Lexical check that `rel` stays under its root.
fn escapes_root(rel: &Path) -> bool {
    let mut depth = 0i32;
    for c in rel.components() {
        match c {
            Component::Normal(_) => depth += 1,
            Component::CurDir => {}
            Component::ParentDir => {
                depth -= 1;
                if depth < 0 {
                    return true;
                }
            }
            Component::RootDir | Component::Prefix(_) => return true,
        }
    }
    false
}

impl CorpusManifest {
    /// Validates ids and paths against `root`.
    pub fn new(root: impl Into<PathBuf>, entries: Vec<ManifestEntry>) -> Result<Self> {
        let root = root.into();
        let canonical_root = root.canonicalize().map_err(|e| Error::io(&root, e))?;
        let mut ids = HashSet::new();
        for e in &entries {
            if e.doc_id.is_empty() {
                return Err(Error::arg("empty doc_id in manifest"));
            }
            if !ids.insert(e.doc_id.as_str()) {
                return Err(Error::DuplicateId(e.doc_id.clone()));
            }
            if escapes_root(&e.path) {
                return Err(Error::PathTraversal(e.path.clone()));
            }
            let full = root.join(&e.path);
            if !full.is_file() {
                return Err(Error::MissingFile(full));
            }
            // symlinks may still point elsewhere
            let resolved = full.canonicalize().map_err(|err| Error::io(&full, err))?;
            if !resolved.starts_with(&canonical_root) {
                return Err(Error::PathTraversal(e.path.clone()));
            }
        }
        Ok(Self { root, entries })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Distinct labels, sorted.
    pub fn labels(&self) -> Vec<String> {
        let set: std::collections::BTreeSet<&str> =
            self.entries.iter().map(|e| e.label.as_str()).collect();
        set.into_iter().map(str::to_string).collect()
    }

    pub fn resolve(&self, entry: &ManifestEntry) -> PathBuf {
        self.root.join(&entry.path)
    }

    /// Concatenates manifests that may live in different directories.
    pub fn merge(manifests: &[CorpusManifest]) -> Result<Self> {
        let mut entries = Vec::new();
        for m in manifests {
            let root = m.root.canonicalize().map_err(|e| Error::io(&m.root, e))?;
            for e in &m.entries {
                entries.push(ManifestEntry {
                    doc_id: e.doc_id.clone(),
                    path: root.join(&e.path),
                    label: e.label.clone(),
                });
            }
        }
        // absolute paths only pass the root check against "/"
        let mut ids = HashSet::new();
        for e in &entries {
            if !ids.insert(e.doc_id.as_str()) {
                return Err(Error::DuplicateId(e.doc_id.clone()));
            }
        }
        Ok(Self {
            root: PathBuf::from("/"),
            entries,
        })
    }

    /// Copy of this manifest with every label replaced.
    pub fn relabel(&self, label: &str) -> Self {
        let mut out = self.clone();
        for e in &mut out.entries {
            e.label = label.to_string();
        }
        out
    }
}

pub fn load_manifest(path: impl AsRef<Path>) -> Result<CorpusManifest> {
    let path = path.as_ref();
    let file = fs::File::open(path).map_err(|e| Error::io(path, e))?;
    let mut reader = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(file);
    let headers = reader.headers()?.clone();
    if headers.iter().collect::<Vec<_>>() != ["doc_id", "path", "label"] {
        return Err(Error::Parse {
            source_id: path.display().to_string(),
            line: 1,
            message: "manifest header must be `doc_id,path,label`".into(),
        });
    }
    let entries = reader
        .deserialize()
        .collect::<std::result::Result<Vec<ManifestEntry>, _>>()?;
    let root = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => PathBuf::from("."),
    };
    CorpusManifest::new(root, entries)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScoredDocument {
    pub doc_id: String,
    pub label: String,
    pub profile: DocumentProfile,
    pub adjective_rate: f64,
    pub n_tokens: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkippedDocument {
    pub doc_id: String,
    pub label: String,
    pub reason: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CorpusRun {
    pub profiles: Vec<ScoredDocument>,
    pub skipped: Vec<SkippedDocument>,
    /// Per label, over document mean intensity (sample sd).
    pub group_summaries: BTreeMap<String, SampleSummary>,
    /// Per label, over document adjective rate (sample sd).
    pub adjective_summaries: BTreeMap<String, SampleSummary>,
}

impl CorpusRun {
    pub fn mean_ei_by_label(&self, label: &str) -> Vec<f64> {
        self.values_by_label(label, |d| d.profile.mean_ei)
    }

    pub fn adjective_rate_by_label(&self, label: &str) -> Vec<f64> {
        self.values_by_label(label, |d| d.adjective_rate)
    }

    fn values_by_label(&self, label: &str, f: impl Fn(&ScoredDocument) -> f64) -> Vec<f64> {
        self.profiles
            .iter()
            .filter(|d| d.label == label)
            .map(f)
            .collect()
    }

    /// Labels of scored documents, sorted.
    pub fn labels(&self) -> Vec<String> {
        self.group_summaries.keys().cloned().collect()
    }
}

/// Everything needed to score documents.
#[derive(Debug, Clone)]
pub struct CorpusScorer<'a> {
    pub list: &'a EmotionWordList,
    pub adjectives: &'a AdjectiveLexicon,
    pub segmenter: Segmenter,
    pub std_mode: StdMode,
}

enum Outcome {
    Scored(ScoredDocument),
    Skipped(SkippedDocument),
}

impl<'a> CorpusScorer<'a> {
    pub fn new(list: &'a EmotionWordList, adjectives: &'a AdjectiveLexicon) -> Self {
        Self {
            list,
            adjectives,
            segmenter: Segmenter::default(),
            std_mode: StdMode::Population,
        }
    }

    pub fn score_text(&self, doc_id: &str, label: &str, text: &str) -> Result<ScoredDocument> {
        let doc = self.segmenter.segment_document(doc_id, text);
        let profile = profile_document_with(&doc, self.list, self.std_mode)?;
        Ok(ScoredDocument {
            doc_id: doc_id.to_string(),
            label: label.to_string(),
            adjective_rate: adjective_rate(&doc, self.adjectives)?,
            n_tokens: doc.n_tokens(),
            profile,
        })
    }

    fn score_entry(&self, manifest: &CorpusManifest, entry: &ManifestEntry) -> Outcome {
        let skip = |reason: String| {
            Outcome::Skipped(SkippedDocument {
                doc_id: entry.doc_id.clone(),
                label: entry.label.clone(),
                reason,
            })
        };
        let bytes = match fs::read(manifest.resolve(entry)) {
            Ok(b) => b,
            Err(e) => return skip(format!("unreadable: {e}")),
        };
        let text = match String::from_utf8(bytes) {
            Ok(t) => t,
            Err(_) => return skip("invalid UTF-8".into()),
        };
        match self.score_text(&entry.doc_id, &entry.label, &text) {
            Ok(d) => Outcome::Scored(d),
            Err(Error::EmptyDocument(_)) => skip("empty after segmentation".into()),
            Err(e) => skip(e.to_string()),
        }
    }

    /// Scores every entry, in parallel, reporting results in manifest order.
    pub fn run(&self, manifest: &CorpusManifest) -> Result<CorpusRun> {
        let outcomes: Vec<Outcome> = manifest
            .entries
            .par_iter()
            .map(|e| self.score_entry(manifest, e))
            .collect();

        let mut profiles = Vec::new();
        let mut skipped = Vec::new();
        for o in outcomes {
            match o {
                Outcome::Scored(d) => profiles.push(d),
                Outcome::Skipped(s) => skipped.push(s),
            }
        }
        if profiles.is_empty() {
            return Err(Error::EmptyRun);
        }

        let mut by_label: BTreeMap<String, (Vec<f64>, Vec<f64>)> = BTreeMap::new();
        for d in &profiles {
            let slot = by_label.entry(d.label.clone()).or_default();
            slot.0.push(d.profile.mean_ei);
            slot.1.push(d.adjective_rate);
        }
        let mut group_summaries = BTreeMap::new();
        let mut adjective_summaries = BTreeMap::new();
        for (label, (eis, adjs)) in by_label {
            group_summaries.insert(label.clone(), summarize(&eis)?);
            adjective_summaries.insert(label, summarize(&adjs)?);
        }

        Ok(CorpusRun {
            profiles,
            skipped,
            group_summaries,
            adjective_summaries,
        })
    }
}

/// [`CorpusScorer::run`] with the default segmenter and population spread.
pub fn run_corpus(
    manifest: &CorpusManifest,
    list: &EmotionWordList,
    adj: &AdjectiveLexicon,
) -> Result<CorpusRun> {
    CorpusScorer::new(list, adj).run(manifest)
}

pub const PROFILES_HEADER: [&str; 6] = [
    "doc_id",
    "label",
    "n_sentences",
    "mean_ei",
    "std_ei",
    "adjective_rate",
];

pub fn write_profiles_csv<W: Write>(run: &CorpusRun, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(PROFILES_HEADER)?;
    for d in &run.profiles {
        w.write_record([
            d.doc_id.clone(),
            d.label.clone(),
            d.profile.n_sentences().to_string(),
            d.profile.mean_ei.to_string(),
            d.profile.std_ei.to_string(),
            d.adjective_rate.to_string(),
        ])?;
    }
    w.flush().map_err(|e| Error::io("profiles.csv", e))?;
    Ok(())
}

pub const HISTOGRAM_BINS: usize = 30;

/// Counts of document mean intensity per label over equal-width bins
/// spanning `[0, max]`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Histogram {
    pub edges: Vec<f64>,
    pub labels: Vec<String>,
    /// `counts[label][bin]`
    pub counts: Vec<Vec<usize>>,
}

impl Histogram {
    pub fn of_mean_ei(run: &CorpusRun, bins: usize) -> Self {
        let bins = bins.max(1);
        let max = run
            .profiles
            .iter()
            .map(|d| d.profile.mean_ei)
            .fold(0.0f64, f64::max);
        // an all-zero corpus still gets a usable axis
        let upper = if max > 0.0 { max } else { 1.0 };
        let width = upper / bins as f64;
        let edges: Vec<f64> = (0..=bins).map(|i| i as f64 * width).collect();
        let labels = run.labels();
        let counts = labels
            .iter()
            .map(|label| {
                let mut c = vec![0; bins];
                for v in run.mean_ei_by_label(label) {
                    let b = ((v / width).floor() as usize).min(bins - 1);
                    c[b] += 1;
                }
                c
            })
            .collect();
        Self {
            edges,
            labels,
            counts,
        }
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        let mut header = vec!["bin_start".to_string(), "bin_end".to_string()];
        header.extend(self.labels.iter().cloned());
        w.write_record(&header)?;
        for b in 0..self.edges.len() - 1 {
            let mut row = vec![self.edges[b].to_string(), self.edges[b + 1].to_string()];
            row.extend(self.counts.iter().map(|c| c[b].to_string()));
            w.write_record(&row)?;
        }
        w.flush().map_err(|e| Error::io("histogram.csv", e))?;
        Ok(())
    }
}
