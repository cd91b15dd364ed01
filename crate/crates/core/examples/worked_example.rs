//! Emotion intensity of a single sentence.

use affectix::intensity::ei_sentence;
use affectix::lexicon::{build_emotion_list, parse_dal};
use affectix::textproc::segment_document;

const LEXICON: &str = "\
beautiful\t3.0\t2.5\t2.5
lovely\t2.9\t2.2\t2.0
ugly\t1.0\t2.0\t2.0
awful\t1.1\t2.3\t1.9
this\t2.0\t1.5\t1.5
is\t2.0\t1.5\t1.5
a\t2.0\t1.5\t1.5
day\t2.1\t1.6\t1.8
chair\t1.9\t1.4\t2.6
road\t1.8\t1.6\t2.4
";

fn main() -> affectix::Result<()> {
    let lexicon = parse_dal(LEXICON.as_bytes(), "inline")?;
    let list = build_emotion_list(&lexicon, 0.2, 0.2)?;
    let doc = segment_document("example", "This is a beautiful day");
    let score = ei_sentence(&doc.sentences[0], &list);
    println!("tokens: {:?}", doc.sentences[0].tokens);
    println!(
        "{} of {} tokens are emotional, EI = {}",
        score.n_emotional, score.n_words, score.ei
    );
    Ok(())
}
