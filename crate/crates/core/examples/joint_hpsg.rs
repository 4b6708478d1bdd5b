//! Exhaustive joint decoding: every span considers every head word.

use jointparse::io::{conll, ptb};
use jointparse::{hpsg_decode, random_chart, synth, Sentence};

fn main() -> jointparse::Result<()> {
    let chart = random_chart(6, &synth::const_labels(), &synth::dep_labels(), 3)?;
    let r = hpsg_decode(&chart)?;
    let s = Sentence::placeholder(chart.len());
    println!("score {:.4}", r.score);
    println!("joint {}", r.joint.as_ref().unwrap().root);
    println!("{}", ptb::write_tree(&s, r.const_tree.as_ref().unwrap()));
    let mut text = String::new();
    conll::write_sentence(&s, r.dep_tree.as_ref().unwrap(), &mut text);
    print!("{}", text);
    Ok(())
}
