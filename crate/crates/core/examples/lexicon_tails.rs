//! Build the high-emotion word list from a lexicon file.
//!
//! `cargo run --example lexicon_tails -- [LEXICON] [FRACTION]`

use std::path::PathBuf;

use affectix::lexicon::{build_emotion_list, tail_size, AffectLexicon};

fn main() -> affectix::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args.next().map(PathBuf::from).unwrap_or_else(|| {
        PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures/lexicon/synthetic_dal.tsv")
    });
    let frac: f64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(0.2);

    let lexicon = AffectLexicon::from_path(&path)?;
    let list = build_emotion_list(&lexicon, frac, frac)?;
    println!(
        "{} words, tails of {} each",
        lexicon.len(),
        tail_size(frac, lexicon.len())
    );
    println!("least pleasant:");
    for w in list.negative() {
        println!("  {w:<12} {:.3}", lexicon.get(w).unwrap().pleasantness);
    }
    println!("most pleasant:");
    for w in list.positive() {
        println!("  {w:<12} {:.3}", lexicon.get(w).unwrap().pleasantness);
    }
    Ok(())
}
