//! Sentence segmentation and word tokenization.
//!
//! Sentences end at `.`, `!`, `?`, `…` or at a blank line (two or more
//! newlines). A period does not end a sentence when it is directly followed
//! by a letter or digit (`3.14`, `a.m`), or when the word before it is a
//! single letter or a known abbreviation (`Dr.`, `etc.`). Runs of terminal
//! punctuation and closing quotes or brackets stay attached to the sentence
//! they end.
//!
//! Words are maximal runs of letters, where an apostrophe or hyphen between
//! two letters is part of the word (`don't`, `well-known`). Digits and other
//! symbols are separators. Every word is case-folded.

use std::collections::HashSet;
use std::fs;
use std::path::Path;
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};

const DEFAULT_ABBREVIATIONS: &str = include_str!("../data/abbreviations.txt");

/// Byte range `[start, end)` into the source text.
pub type Span = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Sentence {
    pub tokens: Vec<String>,
    pub raw_span: Span,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Document {
    pub doc_id: String,
    pub sentences: Vec<Sentence>,
    pub source_chars: usize,
}

impl Document {
    pub fn n_tokens(&self) -> usize {
        self.sentences.iter().map(|s| s.tokens.len()).sum()
    }

    pub fn tokens(&self) -> impl Iterator<Item = &str> {
        self.sentences
            .iter()
            .flat_map(|s| s.tokens.iter().map(String::as_str))
    }
}

/// Full Unicode case fold, with typographic apostrophes and hyphens mapped
/// to their ASCII forms.
pub fn normalize_word(word: &str) -> String {
    caseless::default_case_fold_str(word)
        .chars()
        .map(|c| match c {
            '\u{2019}' | '\u{02BC}' => '\'',
            '\u{2010}' | '\u{2011}' => '-',
            other => other,
        })
        .collect()
}

fn is_joiner(c: char) -> bool {
    matches!(c, '\'' | '\u{2019}' | '-' | '\u{2010}' | '\u{2011}')
}

fn is_terminal(c: char) -> bool {
    matches!(c, '.' | '!' | '?' | '\u{2026}')
}

fn is_closer(c: char) -> bool {
    matches!(
        c,
        '"' | '\'' | ')' | ']' | '}' | '\u{2019}' | '\u{201D}' | '\u{00BB}'
    )
}

/// Rule-based sentence splitter holding the abbreviation list.
#[derive(Debug, Clone)]
pub struct Segmenter {
    abbreviations: HashSet<String>,
}

impl Default for Segmenter {
    fn default() -> Self {
        Self::from_abbreviation_list(DEFAULT_ABBREVIATIONS)
    }
}

impl Segmenter {
    /// One abbreviation per line, trailing period optional, `#` comments.
    pub fn from_abbreviation_list(text: &str) -> Self {
        let abbreviations = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'))
            .map(|l| normalize_word(l.trim_end_matches('.')))
            .collect();
        Self { abbreviations }
    }

    pub fn from_abbreviation_file(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Ok(Self::from_abbreviation_list(&text))
    }

    pub fn is_abbreviation(&self, word: &str) -> bool {
        self.abbreviations.contains(&normalize_word(word))
    }

    /// Splits `text` into trimmed, non-empty sentence spans.
    pub fn split_sentences(&self, text: &str) -> Vec<Span> {
        let chars: Vec<(usize, char)> = text.char_indices().collect();
        let mut spans = Vec::new();
        let mut start = 0;
        let mut i = 0;

        while i < chars.len() {
            let (pos, c) = chars[i];
            if is_terminal(c) && (c != '.' || self.period_ends_sentence(text, &chars, i)) {
                let mut j = i + 1;
                while j < chars.len() && (is_terminal(chars[j].1) || is_closer(chars[j].1)) {
                    j += 1;
                }
                let end = chars.get(j).map_or(text.len(), |&(p, _)| p);
                push_trimmed(text, start, end, &mut spans);
                start = end;
                i = j;
                continue;
            }
            if c == '\n' {
                let mut j = i;
                let mut newlines = 0;
                while j < chars.len() && chars[j].1.is_whitespace() {
                    if chars[j].1 == '\n' {
                        newlines += 1;
                    }
                    j += 1;
                }
                if newlines >= 2 {
                    push_trimmed(text, start, pos, &mut spans);
                    start = chars.get(j).map_or(text.len(), |&(p, _)| p);
                }
                i = j;
                continue;
            }
            i += 1;
        }
        push_trimmed(text, start, text.len(), &mut spans);
        spans
    }

    fn period_ends_sentence(&self, text: &str, chars: &[(usize, char)], i: usize) -> bool {
        if let Some(&(_, next)) = chars.get(i + 1) {
            if next.is_alphanumeric() {
                return false;
            }
        }
        // the word immediately before the period
        let mut k = i;
        while k > 0 && (chars[k - 1].1.is_alphabetic() || is_joiner(chars[k - 1].1)) {
            k -= 1;
        }
        let word = text[chars[k].0..chars[i].0].trim_matches(is_joiner);
        if word.is_empty() {
            return true;
        }
        word.chars().count() > 1 && !self.is_abbreviation(word)
    }

    /// Splits and tokenizes; sentences without words are dropped.
    pub fn segment_document(&self, doc_id: impl Into<String>, text: &str) -> Document {
        let sentences = self
            .split_sentences(text)
            .into_iter()
            .filter_map(|span| {
                let tokens = tokenize(&text[span.0..span.1]);
                (!tokens.is_empty()).then_some(Sentence {
                    tokens,
                    raw_span: span,
                })
            })
            .collect();
        Document {
            doc_id: doc_id.into(),
            sentences,
            source_chars: text.chars().count(),
        }
    }
}

fn push_trimmed(text: &str, start: usize, end: usize, spans: &mut Vec<Span>) {
    let slice = &text[start..end];
    let lead = slice.len() - slice.trim_start().len();
    let trail = slice.len() - slice.trim_end().len();
    if lead + trail < slice.len() {
        spans.push((start + lead, end - trail));
    }
}

/// Splits a span of text into normalized words.
pub fn tokenize(text: &str) -> Vec<String> {
    let chars: Vec<char> = text.chars().collect();
    let mut tokens = Vec::new();
    let mut current = String::new();

    for (i, &c) in chars.iter().enumerate() {
        let joins = is_joiner(c)
            && !current.is_empty()
            && chars.get(i + 1).is_some_and(|n| n.is_alphabetic());
        if c.is_alphabetic() || joins {
            current.push(c);
        } else if !current.is_empty() {
            tokens.push(normalize_word(&current));
            current.clear();
        }
    }
    if !current.is_empty() {
        tokens.push(normalize_word(&current));
    }
    tokens
}

fn default_segmenter() -> &'static Segmenter {
    static DEFAULT: OnceLock<Segmenter> = OnceLock::new();
    DEFAULT.get_or_init(Segmenter::default)
}

/// [`Segmenter::split_sentences`] with the built-in abbreviation list.
pub fn split_sentences(text: &str) -> Vec<Span> {
    default_segmenter().split_sentences(text)
}

/// [`Segmenter::segment_document`] with the built-in abbreviation list.
pub fn segment_document(doc_id: impl Into<String>, text: &str) -> Document {
    default_segmenter().segment_document(doc_id, text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pieces<'a>(text: &'a str, spans: &[Span]) -> Vec<&'a str> {
        spans.iter().map(|&(s, e)| &text[s..e]).collect()
    }

    #[test]
    fn empty_text() {
        assert!(split_sentences("").is_empty());
        assert!(split_sentences("  \n\n ").is_empty());
    }

    #[test]
    fn two_terminals() {
        let text = "I slept. I dreamed!";
        assert_eq!(
            pieces(text, &split_sentences(text)),
            ["I slept.", "I dreamed!"]
        );
    }

    #[test]
    fn abbreviation_does_not_split() {
        let text = "Dr. Smith arrived. He left.";
        assert_eq!(
            pieces(text, &split_sentences(text)),
            ["Dr. Smith arrived.", "He left."]
        );
    }

    #[test]
    fn initials_decimals_and_times() {
        let text = "J. R. Tolkien wrote it in 1937. It cost 3.50 at 2 a.m. on Sunday.";
        assert_eq!(
            pieces(text, &split_sentences(text)),
            [
                "J. R. Tolkien wrote it in 1937.",
                "It cost 3.50 at 2 a.m. on Sunday."
            ]
        );
    }

    #[test]
    fn punctuation_runs_and_quotes() {
        let text = "\"Really?!\" she asked... Then silence\u{2026} The end";
        assert_eq!(
            pieces(text, &split_sentences(text)),
            [
                "\"Really?!\"",
                "she asked...",
                "Then silence\u{2026}",
                "The end"
            ]
        );
    }

    #[test]
    fn blank_lines_split_single_newlines_do_not() {
        let text = "a title\n\nfirst line\nsecond line\n \n\nlast";
        assert_eq!(
            pieces(text, &split_sentences(text)),
            ["a title", "first line\nsecond line", "last"]
        );
    }

    #[test]
    fn custom_abbreviations() {
        let seg = Segmenter::from_abbreviation_list("approx.\n# c\nkm\n");
        let text = "It is 5 km. Dr. Who came.";
        assert_eq!(
            pieces(text, &seg.split_sentences(text)),
            ["It is 5 km. Dr.", "Who came."]
        );
    }

    #[test]
    fn contraction_before_period_still_splits() {
        let text = "I said I don't. Then I left.";
        assert_eq!(split_sentences(text).len(), 2);
    }

    #[test]
    fn five_words() {
        assert_eq!(
            tokenize("This is a beautiful day"),
            ["this", "is", "a", "beautiful", "day"]
        );
    }

    #[test]
    fn apostrophes_digits_and_dots() {
        assert_eq!(tokenize("it's 2 a.m."), ["it's", "a", "m"]);
        assert_eq!(
            tokenize("A well-known -dash- 'quote' rock'n'roll"),
            ["a", "well-known", "dash", "quote", "rock'n'roll"]
        );
        assert_eq!(tokenize("don\u{2019}t"), ["don't"]);
        assert_eq!(tokenize("abc123def"), ["abc", "def"]);
    }

    #[test]
    fn punctuation_only() {
        assert!(tokenize("!!! ???").is_empty());
        assert!(tokenize("42 3.14 -- ''").is_empty());
    }

    #[test]
    fn full_case_fold() {
        assert_eq!(
            tokenize("STRASSE Straße ÉTÉ"),
            ["strasse", "strasse", "été"]
        );
    }

    #[test]
    fn document_drops_wordless_sentences() {
        let doc = segment_document("d", "We walked home. ?! 123.");
        assert_eq!(doc.sentences.len(), 1);
        assert_eq!(doc.sentences[0].tokens, ["we", "walked", "home"]);
        assert_eq!(doc.sentences[0].raw_span, (0, 15));
    }

    #[test]
    fn document_two_sentences() {
        let doc = segment_document("d", "I slept. I dreamed!");
        assert_eq!(doc.doc_id, "d");
        assert_eq!(doc.sentences.len(), 2);
        assert!(doc.sentences.iter().all(|s| s.tokens.len() == 2));
        assert_eq!(doc.source_chars, 19);
    }

    #[test]
    fn empty_document() {
        let doc = segment_document("e", "");
        assert!(doc.sentences.is_empty());
        assert_eq!(doc.n_tokens(), 0);
    }

    fn texty() -> impl Strategy<Value = String> {
        prop::collection::vec(
            prop_oneof![
                Just("Dr".to_string()),
                Just("a".to_string()),
                "[a-zA-Z]{1,8}",
                "[0-9]{1,3}",
                Just("ÉtÉ".to_string()),
                Just("Straße".to_string()),
                Just(". ".to_string()),
                Just(".".to_string()),
                Just("!".to_string()),
                Just("?".to_string()),
                Just("\u{2026}".to_string()),
                Just("\n\n".to_string()),
                Just("\n".to_string()),
                Just("'".to_string()),
                Just("-".to_string()),
                Just("\"".to_string()),
                Just(" ".to_string()),
            ],
            0..60,
        )
        .prop_map(|v| v.concat())
    }

    proptest! {
        #[test]
        fn segmentation_preserves_tokens(text in texty()) {
            let spans = split_sentences(&text);
            let per_span: Vec<String> = spans
                .iter()
                .flat_map(|&(s, e)| tokenize(&text[s..e]))
                .collect();
            prop_assert_eq!(per_span, tokenize(&text));

            let mut last_end = 0;
            for &(s, e) in &spans {
                prop_assert!(s < e && e <= text.len() && s >= last_end);
                last_end = e;
            }
            let doc = segment_document("p", &text);
            prop_assert!(doc.sentences.iter().all(|s| !s.tokens.is_empty()));
            prop_assert_eq!(doc.n_tokens(), tokenize(&text).len());
        }

        #[test]
        fn normalization_is_idempotent(text in "\\PC{0,40}") {
            for tok in tokenize(&text) {
                prop_assert!(!tok.is_empty());
                prop_assert!(tok.chars().any(char::is_alphabetic));
                prop_assert_eq!(normalize_word(&tok), tok.clone());
            }
        }
    }
}
