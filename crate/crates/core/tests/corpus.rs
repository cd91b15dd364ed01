mod common;

use std::fs;

use affectix::corpus::{
    load_manifest, run_corpus, write_profiles_csv, CorpusManifest, ManifestEntry,
};
use affectix::intensity::AdjectiveLexicon;
use affectix::lexicon::{build_emotion_list, AffectLexicon, EmotionWordList};
use affectix::stats::{two_sample_ttest, TTestKind};

fn list() -> EmotionWordList {
    let lex = AffectLexicon::from_path(common::fixture_lexicon()).unwrap();
    build_emotion_list(&lex, 0.2, 0.2).unwrap()
}

#[test]
fn fixture_corpora_separate() {
    let m = load_manifest(common::fixture_manifest("combined.csv")).unwrap();
    let run = run_corpus(&m, &list(), &AdjectiveLexicon::default()).unwrap();
    let hi = run.mean_ei_by_label("intense");
    let lo = run.mean_ei_by_label("neutral");
    assert_eq!((hi.len(), lo.len()), (10, 10));
    assert!(run.group_summaries["intense"].mean > run.group_summaries["neutral"].mean);
    assert!(
        two_sample_ttest(&hi, &lo, TTestKind::Welch)
            .unwrap()
            .p_two_sided
            < 0.01
    );
    let adj = two_sample_ttest(
        &run.adjective_rate_by_label("intense"),
        &run.adjective_rate_by_label("neutral"),
        TTestKind::Welch,
    )
    .unwrap();
    assert!(adj.p_two_sided > 0.05);
}

#[test]
fn reruns_are_bit_identical_and_ordered() {
    let dir = tempfile::tempdir().unwrap();
    let mut entries = Vec::new();
    for i in 0..200 {
        let name = format!("d{i:03}.txt");
        let text = "Joy came to the road. The wall stood. ".repeat(1 + i % 7);
        fs::write(dir.path().join(&name), text).unwrap();
        entries.push(ManifestEntry {
            doc_id: format!("z{}", 199 - i),
            path: name.into(),
            label: format!("g{}", i % 2),
        });
    }
    let m = CorpusManifest::new(dir.path(), entries).unwrap();
    let adj = AdjectiveLexicon::default();
    let (a, b) = (
        run_corpus(&m, &list(), &adj).unwrap(),
        run_corpus(&m, &list(), &adj).unwrap(),
    );
    assert_eq!(a, b);
    let ids: Vec<&str> = a.profiles.iter().map(|d| d.doc_id.as_str()).collect();
    let want: Vec<&str> = m.entries.iter().map(|e| e.doc_id.as_str()).collect();
    assert_eq!(ids, want);
    let (mut ca, mut cb) = (Vec::new(), Vec::new());
    write_profiles_csv(&a, &mut ca).unwrap();
    write_profiles_csv(&b, &mut cb).unwrap();
    assert_eq!(ca, cb);
}
