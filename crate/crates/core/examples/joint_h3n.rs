//! Cubic joint decoding steered by per-word head levels.
//!
//! With random levels the fast decoder is restricted and falls below the
//! exhaustive one. Setting the levels from the exhaustive output closes the
//! gap exactly.

use jointparse::heads::gold_head_levels;
use jointparse::{h3n_decode, hpsg_decode, random_chart, synth, CAP};

fn main() -> jointparse::Result<()> {
    let mut chart = random_chart(9, &synth::const_labels(), &synth::dep_labels(), 1)?;
    let full = hpsg_decode(&chart)?;
    let fast = h3n_decode(&chart)?;
    println!("hpsg               {:.4}", full.score);
    println!("h3n, random levels {:.4}", fast.score);

    chart.set_head_levels(&gold_head_levels(full.joint.as_ref().unwrap(), CAP));
    let guided = h3n_decode(&chart)?;
    println!("h3n, levels of the hpsg tree {:.4}", guided.score);
    assert_eq!(guided.score, full.score);
    Ok(())
}
