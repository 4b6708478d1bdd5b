//! Projective (Eisner) against unrestricted (Chu-Liu-Edmonds) arc search on
//! the same chart. The unrestricted optimum can only be higher.

use jointparse::{eisner_decode, mst_decode, random_chart, synth};

fn main() -> jointparse::Result<()> {
    for seed in 0..5 {
        let chart = random_chart(8, &synth::const_labels(), &synth::dep_labels(), seed)?;
        let e = eisner_decode(&chart)?;
        let m = mst_decode(&chart)?;
        let (ed, md) = (e.dep_tree.unwrap(), m.dep_tree.unwrap());
        println!("seed {}", seed);
        println!("  eisner {:>8.4} {:?}", e.score, ed.heads);
        println!(
            "  mst    {:>8.4} {:?} projective={}",
            m.score,
            md.heads,
            md.is_projective()
        );
    }
    Ok(())
}
