//! Affect dictionary loading and the high-emotion word lists.
//!
//! The dictionary is a plain TSV file, one word per line:
//!
//! ```text
//! # comment
//! word<TAB>pleasantness<TAB>activation<TAB>imagery
//! ```
//!
//! Blank lines and lines starting with `#` are skipped. There is no header
//! row. Words are case-folded on load; when two lines fold to the same word
//! the first one wins and the collision is counted in
//! [`AffectLexicon::duplicates`].
//!
//! An [`EmotionWordList`] is derived from a lexicon by ranking every word on
//! pleasantness and keeping the two extreme tails. Selection is purely
//! rank-based, so any strictly increasing rescaling of the ratings yields the
//! same lists.

use std::collections::{BTreeMap, HashSet};
use std::fs::File;
use std::io::{BufRead, BufReader, Read};
use std::path::Path;

use crate::error::{Error, Result};
use crate::textproc::normalize_word;

/// Smallest lexicon accepted by [`parse_dal`].
pub const MIN_LEXICON_SIZE: usize = 10;

pub const DEFAULT_LOWER_FRAC: f64 = 0.2;
pub const DEFAULT_UPPER_FRAC: f64 = 0.2;

#[derive(Debug, Clone, PartialEq)]
pub struct DalEntry {
    pub word: String,
    pub pleasantness: f64,
    pub activation: f64,
    pub imagery: f64,
}

#[derive(Debug, Clone)]
pub struct AffectLexicon {
    entries: BTreeMap<String, DalEntry>,
    source_id: String,
    duplicates: usize,
}

impl AffectLexicon {
    /// Builds a lexicon from already-parsed entries, applying the same
    /// normalization, first-wins and minimum-size rules as [`parse_dal`].
    pub fn from_entries(
        entries: impl IntoIterator<Item = DalEntry>,
        source_id: impl Into<String>,
    ) -> Result<Self> {
        let source_id = source_id.into();
        let mut map = BTreeMap::new();
        let mut duplicates = 0;
        for mut entry in entries {
            entry.word = normalize_word(&entry.word);
            if entry.word.is_empty() || entry.word.chars().any(char::is_whitespace) {
                return Err(Error::arg(format!("invalid lexicon word {:?}", entry.word)));
            }
            if ![entry.pleasantness, entry.activation, entry.imagery]
                .iter()
                .all(|v| v.is_finite())
            {
                return Err(Error::arg(format!(
                    "non-finite rating for {:?}",
                    entry.word
                )));
            }
            if map.contains_key(&entry.word) {
                duplicates += 1;
            } else {
                map.insert(entry.word.clone(), entry);
            }
        }
        if map.len() < MIN_LEXICON_SIZE {
            return Err(Error::LexiconTooSmall {
                source_id,
                found: map.len(),
                required: MIN_LEXICON_SIZE,
            });
        }
        Ok(Self {
            entries: map,
            source_id,
            duplicates,
        })
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let file = File::open(path).map_err(|e| Error::io(path, e))?;
        parse_dal(file, path.display().to_string())
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, word: &str) -> Option<&DalEntry> {
        self.entries.get(word)
    }

    /// Entries in word order.
    pub fn entries(&self) -> impl Iterator<Item = &DalEntry> {
        self.entries.values()
    }

    pub fn source_id(&self) -> &str {
        &self.source_id
    }

    /// Number of lines dropped because their word had already been seen.
    pub fn duplicates(&self) -> usize {
        self.duplicates
    }
}

/// Parses a DAL-format TSV stream.
pub fn parse_dal(stream: impl Read, source_id: impl Into<String>) -> Result<AffectLexicon> {
    let source_id = source_id.into();
    let reader = BufReader::new(stream);
    let mut entries = Vec::new();

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| Error::Parse {
            source_id: source_id.clone(),
            line: line_no,
            message: e.to_string(),
        })?;
        let line = line.strip_suffix('\r').unwrap_or(&line);
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        entries.push(parse_line(line).map_err(|message| Error::Parse {
            source_id: source_id.clone(),
            line: line_no,
            message,
        })?);
    }

    AffectLexicon::from_entries(entries, source_id)
}

fn parse_line(line: &str) -> std::result::Result<DalEntry, String> {
    let fields: Vec<&str> = line.split('\t').collect();
    if fields.len() != 4 {
        return Err(format!(
            "expected 4 tab-separated fields, found {}",
            fields.len()
        ));
    }
    let word = normalize_word(fields[0]);
    if word.is_empty() || word.chars().any(char::is_whitespace) {
        return Err(format!("invalid word field {:?}", fields[0]));
    }
    let rating = |name: &str, raw: &str| -> std::result::Result<f64, String> {
        match raw.trim().parse::<f64>() {
            Ok(v) if v.is_finite() => Ok(v),
            _ => Err(format!("{name} rating {raw:?} is not a finite number")),
        }
    };
    Ok(DalEntry {
        word,
        pleasantness: rating("pleasantness", fields[1])?,
        activation: rating("activation", fields[2])?,
        imagery: rating("imagery", fields[3])?,
    })
}

/// The high-emotion vocabulary: the most and least pleasant words of a
/// lexicon.
#[derive(Debug, Clone)]
pub struct EmotionWordList {
    /// Most pleasant first.
    positive: Vec<String>,
    /// Least pleasant first.
    negative: Vec<String>,
    members: HashSet<String>,
    lower_frac: f64,
    upper_frac: f64,
    source_id: String,
}

/// `ceil(frac * n)`, tolerant of the representation error in `frac`
/// (e.g. `0.1 * 30` evaluating to `3.0000000000000004`).
pub fn tail_size(frac: f64, n: usize) -> usize {
    let raw = frac * n as f64;
    (raw - 1e-9 * raw.max(1.0)).ceil().max(0.0) as usize
}

fn check_frac(name: &str, frac: f64) -> Result<()> {
    if !(frac > 0.0 && frac <= 0.5) {
        return Err(Error::arg(format!(
            "{name} must lie in (0, 0.5], got {frac}"
        )));
    }
    Ok(())
}

/// Ranks the lexicon by `(pleasantness, word)` ascending and takes the
/// bottom `ceil(lower_frac * n)` words as the negative list and the top
/// `ceil(upper_frac * n)` as the positive list.
pub fn build_emotion_list(
    lex: &AffectLexicon,
    lower_frac: f64,
    upper_frac: f64,
) -> Result<EmotionWordList> {
    check_frac("lower fraction", lower_frac)?;
    check_frac("upper fraction", upper_frac)?;
    if lower_frac + upper_frac > 1.0 {
        return Err(Error::arg("lower + upper fraction exceeds 1"));
    }

    let mut ranked: Vec<&DalEntry> = lex.entries().collect();
    ranked.sort_by(|a, b| {
        a.pleasantness
            .total_cmp(&b.pleasantness)
            .then_with(|| a.word.cmp(&b.word))
    });

    let n = ranked.len();
    let n_neg = tail_size(lower_frac, n);
    let n_pos = tail_size(upper_frac, n);
    if n_neg + n_pos > n {
        return Err(Error::arg(format!(
            "tails of {n_neg} and {n_pos} words overlap in a lexicon of {n}"
        )));
    }

    let negative: Vec<String> = ranked[..n_neg].iter().map(|e| e.word.clone()).collect();
    let positive: Vec<String> = ranked[n - n_pos..]
        .iter()
        .rev()
        .map(|e| e.word.clone())
        .collect();
    let members = negative.iter().chain(&positive).cloned().collect();

    Ok(EmotionWordList {
        positive,
        negative,
        members,
        lower_frac,
        upper_frac,
        source_id: lex.source_id().to_string(),
    })
}

impl EmotionWordList {
    /// 1 when `word` (already normalized) is in either tail, else 0.
    pub fn is_emotional(&self, word: &str) -> u8 {
        u8::from(self.members.contains(word))
    }

    pub fn contains(&self, word: &str) -> bool {
        self.members.contains(word)
    }

    pub fn is_positive(&self, word: &str) -> bool {
        self.members.contains(word) && self.positive.iter().any(|w| w == word)
    }

    pub fn is_negative(&self, word: &str) -> bool {
        self.members.contains(word) && self.negative.iter().any(|w| w == word)
    }

    /// Positive tail, most pleasant word first.
    pub fn positive(&self) -> &[String] {
        &self.positive
    }

    /// Negative tail, least pleasant word first.
    pub fn negative(&self) -> &[String] {
        &self.negative
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn lower_frac(&self) -> f64 {
        self.lower_frac
    }

    pub fn upper_frac(&self) -> f64 {
        self.upper_frac
    }

    pub fn source_id(&self) -> &str {
        &self.source_id
    }
}
