//! Emotion intensity scoring for plain-text documents.
//!
//! An affect lexicon rates words on pleasantness. The least and most pleasant
//! tails of the lexicon form an emotion word list, and a sentence's intensity
//! is the share of its tokens found in that list. Documents are summarised by
//! the mean and spread of their sentence intensities; labeled groups of
//! documents can be compared with a two-sample t-test or used to train and
//! cross-validate binary classifiers.
//!
//! ```
//! use affectix::lexicon::{build_emotion_list, parse_dal};
//! use affectix::intensity::profile_document;
//! use affectix::textproc::segment_document;
//!
//! let mut dal = String::new();
//! for (i, w) in ["grief", "fear", "calm", "wall", "door", "lamp", "road", "cup", "joy", "love"]
//!     .iter()
//!     .enumerate()
//! {
//!     dal.push_str(&format!("{w}\t{}\t2.0\t2.0\n", 1.0 + i as f64 * 0.2));
//! }
//! let lexicon = parse_dal(dal.as_bytes(), "inline").unwrap();
//! let list = build_emotion_list(&lexicon, 0.2, 0.2).unwrap();
//! let doc = segment_document("d1", "Joy filled the old road. The cup sat by the lamp.");
//! let profile = profile_document(&doc, &list).unwrap();
//! assert!((profile.mean_ei - 0.1).abs() < 1e-12);
//! ```

pub mod classify;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod intensity;
pub mod lexicon;
pub mod stats;
pub mod textproc;

pub use error::{Error, Result};
