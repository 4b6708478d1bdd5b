//! A short timing run of the two joint decoders.

use jointparse::bench::{run_bench, BenchConfig, Bucket};

fn main() -> jointparse::Result<()> {
    let cfg = BenchConfig {
        buckets: vec![
            Bucket::fixed(10),
            Bucket::fixed(20),
            Bucket { lo: 25, hi: 35 },
        ],
        sentences: 20,
        repeats: 2,
        ..BenchConfig::default()
    };
    print!("{}", run_bench(&cfg)?);
    Ok(())
}
