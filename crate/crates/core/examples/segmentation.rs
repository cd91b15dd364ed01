//! Sentence splitting and tokenization.

use affectix::textproc::{normalize_word, Segmenter};

fn main() {
    let text = "Dr. Silva arrived at 5 p.m. on Friday! She said: \"It’s over…\" \
                Then she left.\n\nA new paragraph without a full stop\n\nand one more";
    let segmenter = Segmenter::default();
    let doc = segmenter.segment_document("demo", text);
    for (i, s) in doc.sentences.iter().enumerate() {
        let (start, end) = s.raw_span;
        println!("{i}: {:?}", &text[start..end]);
        println!("   {:?}", s.tokens);
    }
    for word in ["STRASSE", "Don’t", "co‑operate"] {
        println!("{word} -> {}", normalize_word(word));
    }

    let custom = Segmenter::from_abbreviation_list("approx\n");
    println!(
        "{:?}",
        custom.split_sentences("It weighs approx. two kilos. Dr. Who.")
    );
}
