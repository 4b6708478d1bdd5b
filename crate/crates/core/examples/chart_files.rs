//! Writing score charts to the text format and reading them back.

use jointparse::chart::{read_charts, write_charts};
use jointparse::{random_chart, synth};

fn main() -> jointparse::Result<()> {
    let charts = vec![
        random_chart(2, &synth::const_labels(), &synth::dep_labels(), 1)?,
        random_chart(3, &synth::const_labels(), &synth::dep_labels(), 2)?,
    ];
    let text = write_charts(&charts);
    for line in text.lines().take(12) {
        println!("{}", line);
    }
    println!("... {} lines", text.lines().count());
    let back = read_charts(text.as_bytes())?;
    println!(
        "read {} charts, lengths {:?}",
        back.len(),
        back.iter().map(|c| c.len()).collect::<Vec<_>>()
    );
    Ok(())
}
