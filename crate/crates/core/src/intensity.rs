//! Emotion intensity scoring and the adjective-rate control.
//!
//! The intensity of a sentence is the fraction of its words that belong to
//! the high-emotion list. A document is summarized by the mean and standard
//! deviation of its per-sentence series. The deviation inside a document uses
//! the population divisor `n` by default; [`StdMode::Sample`] switches to
//! `n - 1` (and reports 0 for a single sentence).

use std::collections::HashSet;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lexicon::EmotionWordList;
use crate::textproc::{normalize_word, Document, Sentence};

const DEFAULT_ADJECTIVES: &str = include_str!("../data/adjectives.txt");
const DEFAULT_SUFFIX_RULES: &str = include_str!("../data/adjective_suffixes.tsv");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StdMode {
    #[default]
    Population,
    Sample,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SentenceScore {
    pub ei: f64,
    pub n_words: usize,
    pub n_emotional: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DocumentProfile {
    pub doc_id: String,
    pub series: Vec<SentenceScore>,
    pub mean_ei: f64,
    pub std_ei: f64,
}

impl DocumentProfile {
    pub fn n_sentences(&self) -> usize {
        self.series.len()
    }

    pub fn n_words(&self) -> usize {
        self.series.iter().map(|s| s.n_words).sum()
    }
}

pub fn ei_sentence(s: &Sentence, list: &EmotionWordList) -> SentenceScore {
    let n_words = s.tokens.len();
    let n_emotional = s
        .tokens
        .iter()
        .map(|t| usize::from(list.is_emotional(t)))
        .sum();
    let ei = if n_words == 0 {
        0.0
    } else {
        n_emotional as f64 / n_words as f64
    };
    SentenceScore {
        ei,
        n_words,
        n_emotional,
    }
}

/// Mean and spread of a series. A constant series reports exactly its value
/// and zero spread.
pub fn mean_std(xs: &[f64], mode: StdMode) -> (f64, f64) {
    let n = xs.len();
    if n == 0 {
        return (f64::NAN, f64::NAN);
    }
    if xs.iter().all(|&x| x == xs[0]) {
        return (xs[0], 0.0);
    }
    let mean = xs.iter().sum::<f64>() / n as f64;
    let ss: f64 = xs.iter().map(|x| (x - mean).powi(2)).sum();
    let std = match mode {
        StdMode::Population => (ss / n as f64).sqrt(),
        StdMode::Sample if n > 1 => (ss / (n - 1) as f64).sqrt(),
        StdMode::Sample => 0.0,
    };
    (mean, std)
}

pub fn profile_document(d: &Document, list: &EmotionWordList) -> Result<DocumentProfile> {
    profile_document_with(d, list, StdMode::Population)
}

pub fn profile_document_with(
    d: &Document,
    list: &EmotionWordList,
    mode: StdMode,
) -> Result<DocumentProfile> {
    let series: Vec<SentenceScore> = d
        .sentences
        .iter()
        .filter(|s| !s.tokens.is_empty())
        .map(|s| ei_sentence(s, list))
        .collect();
    if series.is_empty() {
        return Err(Error::EmptyDocument(d.doc_id.clone()));
    }
    let eis: Vec<f64> = series.iter().map(|s| s.ei).collect();
    let (mean_ei, std_ei) = mean_std(&eis, mode);
    Ok(DocumentProfile {
        doc_id: d.doc_id.clone(),
        series,
        mean_ei,
        std_ei,
    })
}

/// Adjective identification by word list, falling back to suffix rules.
#[derive(Debug, Clone)]
pub struct AdjectiveLexicon {
    adjectives: HashSet<String>,
    suffix_rules: Vec<(String, bool)>,
}

impl Default for AdjectiveLexicon {
    fn default() -> Self {
        Self::parse(DEFAULT_ADJECTIVES, DEFAULT_SUFFIX_RULES)
            .expect("bundled adjective data is valid")
    }
}

impl AdjectiveLexicon {
    pub fn new(
        adjectives: impl IntoIterator<Item = String>,
        suffix_rules: Vec<(String, bool)>,
    ) -> Result<Self> {
        let adjectives: HashSet<String> =
            adjectives.into_iter().map(|w| normalize_word(&w)).collect();
        let suffix_rules: Vec<(String, bool)> = suffix_rules
            .into_iter()
            .map(|(s, flag)| (normalize_word(&s), flag))
            .collect();
        if adjectives.is_empty() {
            return Err(Error::arg("adjective list is empty"));
        }
        if suffix_rules.is_empty() {
            return Err(Error::arg("adjective suffix rule list is empty"));
        }
        Ok(Self {
            adjectives,
            suffix_rules,
        })
    }

    /// `words`: one adjective per line. `rules`: `suffix<TAB>adj|notadj`
    /// per line. Both accept `#` comments and blank lines.
    pub fn parse(words: &str, rules: &str) -> Result<Self> {
        let adjectives = content_lines(words).map(|(_, l)| l.to_string());
        let mut suffix_rules = Vec::new();
        for (no, line) in content_lines(rules) {
            let (suffix, flag) = line
                .split_once('\t')
                .ok_or_else(|| suffix_error(no, "expected suffix<TAB>adj|notadj"))?;
            let flag = match flag.trim() {
                "adj" => true,
                "notadj" => false,
                other => return Err(suffix_error(no, &format!("unknown flag {other:?}"))),
            };
            let suffix = suffix.trim();
            if suffix.is_empty() {
                return Err(suffix_error(no, "empty suffix"));
            }
            suffix_rules.push((suffix.to_string(), flag));
        }
        Self::new(adjectives, suffix_rules)
    }

    pub fn from_files(words: Option<&Path>, rules: Option<&Path>) -> Result<Self> {
        let read = |p: &Path| fs::read_to_string(p).map_err(|e| Error::io(p, e));
        let words = words.map(read).transpose()?;
        let rules = rules.map(read).transpose()?;
        Self::parse(
            words.as_deref().unwrap_or(DEFAULT_ADJECTIVES),
            rules.as_deref().unwrap_or(DEFAULT_SUFFIX_RULES),
        )
    }

    /// `token` must already be normalized.
    pub fn is_adjective(&self, token: &str) -> bool {
        if self.adjectives.contains(token) {
            return true;
        }
        let mut best: Option<&(String, bool)> = None;
        for rule in &self.suffix_rules {
            if token.ends_with(rule.0.as_str()) && best.is_none_or(|b| rule.0.len() > b.0.len()) {
                best = Some(rule);
            }
        }
        best.is_some_and(|r| r.1)
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
        .map(|(i, l)| (i, l.trim_start()))
}

fn suffix_error(line: usize, message: &str) -> Error {
    Error::Parse {
        source_id: "adjective suffix rules".into(),
        line,
        message: message.into(),
    }
}

/// `(adjective tokens, total tokens)` over the document's token stream.
pub fn adjective_counts(d: &Document, adj: &AdjectiveLexicon) -> (usize, usize) {
    d.tokens().fold((0, 0), |(hits, total), t| {
        (hits + usize::from(adj.is_adjective(t)), total + 1)
    })
}

pub fn adjective_rate(d: &Document, adj: &AdjectiveLexicon) -> Result<f64> {
    let (hits, total) = adjective_counts(d, adj);
    if total == 0 {
        return Err(Error::EmptyDocument(d.doc_id.clone()));
    }
    Ok(hits as f64 / total as f64)
}
