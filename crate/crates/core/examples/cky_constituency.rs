//! Best binarized constituent tree of a random chart, then the n-ary tree
//! recovered from it.

use jointparse::io::ptb::write_tree;
use jointparse::{cky_decode, random_chart, synth, Sentence};

fn main() -> jointparse::Result<()> {
    let chart = random_chart(7, &synth::const_labels(), &synth::dep_labels(), 7)?;
    let r = cky_decode(&chart)?;
    let s = Sentence::placeholder(chart.len());
    println!("score      {:.4}", r.score);
    println!(
        "binarized  {}",
        write_tree(&s, r.binarized.as_ref().unwrap())
    );
    println!(
        "n-ary      {}",
        write_tree(&s, r.const_tree.as_ref().unwrap())
    );
    Ok(())
}
