//! Score a manifest of documents and print per-document profiles.
//!
//! `cargo run --example score_corpus -- [MANIFEST] [LEXICON]`

use std::path::PathBuf;

use affectix::corpus::{load_manifest, run_corpus, write_profiles_csv, Histogram, HISTOGRAM_BINS};
use affectix::intensity::AdjectiveLexicon;
use affectix::lexicon::{build_emotion_list, AffectLexicon};

fn main() -> affectix::Result<()> {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let mut args = std::env::args().skip(1).map(PathBuf::from);
    let manifest = args
        .next()
        .unwrap_or_else(|| root.join("corpus/combined.csv"));
    let lexicon = args
        .next()
        .unwrap_or_else(|| root.join("lexicon/synthetic_dal.tsv"));

    let list = build_emotion_list(&AffectLexicon::from_path(lexicon)?, 0.2, 0.2)?;
    let run = run_corpus(
        &load_manifest(manifest)?,
        &list,
        &AdjectiveLexicon::default(),
    )?;

    write_profiles_csv(&run, std::io::stdout())?;
    for (label, s) in &run.group_summaries {
        println!("{label}: n={} mean_ei={:.4} sd={:.4}", s.n, s.mean, s.sd);
    }
    for s in &run.skipped {
        println!("skipped {}: {}", s.doc_id, s.reason);
    }

    let hist = Histogram::of_mean_ei(&run, HISTOGRAM_BINS);
    println!("histogram columns: {:?}", hist.labels);
    Ok(())
}
