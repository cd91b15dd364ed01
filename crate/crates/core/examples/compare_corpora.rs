//! Compare two corpora on emotion intensity and on adjective rate.

use std::path::PathBuf;

use affectix::corpus::{load_manifest, run_corpus};
use affectix::intensity::AdjectiveLexicon;
use affectix::lexicon::{build_emotion_list, AffectLexicon};
use affectix::stats::{summarize, two_sample_ttest, TTestKind};

fn main() -> affectix::Result<()> {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let list = build_emotion_list(
        &AffectLexicon::from_path(root.join("lexicon/synthetic_dal.tsv"))?,
        0.2,
        0.2,
    )?;
    let adj = AdjectiveLexicon::default();
    let a = run_corpus(
        &load_manifest(root.join("corpus/intense.csv"))?,
        &list,
        &adj,
    )?;
    let b = run_corpus(
        &load_manifest(root.join("corpus/neutral.csv"))?,
        &list,
        &adj,
    )?;

    let ei = |r: &affectix::corpus::CorpusRun| -> Vec<f64> {
        r.profiles.iter().map(|d| d.profile.mean_ei).collect()
    };
    let rate = |r: &affectix::corpus::CorpusRun| -> Vec<f64> {
        r.profiles.iter().map(|d| d.adjective_rate).collect()
    };
    for (name, xa, xb) in [
        ("mean_ei", ei(&a), ei(&b)),
        ("adjective_rate", rate(&a), rate(&b)),
    ] {
        let (sa, sb) = (summarize(&xa)?, summarize(&xb)?);
        let t = two_sample_ttest(&xa, &xb, TTestKind::Welch)?;
        println!(
            "{name:<15} intense {:.4} ± {:.4}  neutral {:.4} ± {:.4}  t = {:.3}  p = {:.3e}",
            sa.mean, sa.sd, sb.mean, sb.sd, t.t, t.p_two_sided
        );
    }
    Ok(())
}
