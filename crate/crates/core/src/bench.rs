//! Decoding-time benchmark over seeded random charts.
//!
//! Charts are built before any clock starts; only decode calls are timed.
//! The chart construction counter is compared before and after timing to
//! make sure no chart was built inside a measured region.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::chart::{self, random_chart, ScoreChart};
use crate::decode::Algorithm;
use crate::error::{Error, Result};
use crate::synth;

/// Sentence lengths `lo..=hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bucket {
    pub lo: usize,
    pub hi: usize,
}

impl Bucket {
    pub fn fixed(n: usize) -> Self {
        Bucket { lo: n, hi: n }
    }
}

impl FromStr for Bucket {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Usage(format!("bad bucket `{}`, expected `n` or `lo-hi`", s));
        let (lo, hi) = match s.split_once('-') {
            Some((a, b)) => (
                a.trim().parse().map_err(|_| bad())?,
                b.trim().parse().map_err(|_| bad())?,
            ),
            None => {
                let n = s.trim().parse().map_err(|_| bad())?;
                (n, n)
            }
        };
        if lo == 0 {
            return Err(Error::Usage(format!("bucket `{}` contains length 0", s)));
        }
        if lo > hi {
            return Err(bad());
        }
        Ok(Bucket { lo, hi })
    }
}

impl fmt::Display for Bucket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}-{}", self.lo, self.hi)
        }
    }
}

/// Longest sentence `hpsg` is run on without `force`.
pub const HPSG_AUTO_LIMIT: usize = 150;

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub buckets: Vec<Bucket>,
    pub sentences: usize,
    pub algos: Vec<Algorithm>,
    pub seed: u64,
    pub repeats: usize,
    /// 1 times each decode call on the calling thread; more decodes the
    /// bucket on a pool and reports wall-clock time.
    pub threads: usize,
    pub force: bool,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            buckets: vec![Bucket::fixed(27), Bucket::fixed(50), Bucket::fixed(100)],
            sentences: 50,
            algos: vec![Algorithm::Hpsg, Algorithm::H3n],
            seed: 1,
            repeats: 5,
            threads: 1,
            force: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub bucket: Bucket,
    pub algo: Algorithm,
    pub sentences: usize,
    pub avg_len: f64,
    /// Mean over repeats of the time to decode the whole bucket.
    pub seconds: f64,
    /// Sentences per second.
    pub speed: f64,
    /// `hpsg` time over this algorithm's time, when both ran on the bucket.
    pub speedup: Option<f64>,
    /// Sum of decoded scores; independent of timing and thread count.
    pub score_sum: f64,
}

#[derive(Clone, Debug, Default)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
    pub notices: Vec<String>,
}

impl BenchReport {
    pub fn row(&self, bucket: Bucket, algo: Algorithm) -> Option<&BenchRow> {
        self.rows
            .iter()
            .find(|r| r.bucket == bucket && r.algo == algo)
    }
}

/// The charts of one bucket, deterministic in `seed` and the bucket index.
pub fn bucket_charts(
    bucket: Bucket,
    index: usize,
    sentences: usize,
    seed: u64,
) -> Result<Vec<ScoreChart>> {
    let labels_c = synth::const_labels();
    let labels_d = synth::dep_labels();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((index as u64 + 1) << 32));
    (0..sentences)
        .map(|_| {
            let n = rng.gen_range(bucket.lo..=bucket.hi);
            random_chart(n, &labels_c, &labels_d, rng.gen())
        })
        .collect()
}

fn time_bucket(
    algo: Algorithm,
    charts: &[ScoreChart],
    pool: Option<&rayon::ThreadPool>,
) -> Result<(Duration, f64)> {
    match pool {
        None => {
            let mut total = Duration::ZERO;
            let mut sum = 0.0;
            for c in charts {
                let start = Instant::now();
                let r = algo.decode(c)?;
                total += start.elapsed();
                sum += r.score;
            }
            Ok((total, sum))
        }
        Some(pool) => {
            let start = Instant::now();
            let scores: Result<Vec<f64>> = pool.install(|| {
                charts
                    .par_iter()
                    .map(|c| algo.decode(c).map(|r| r.score))
                    .collect()
            });
            let elapsed = start.elapsed();
            Ok((elapsed, scores?.iter().sum()))
        }
    }
}

pub fn run_bench(cfg: &BenchConfig) -> Result<BenchReport> {
    if cfg.sentences == 0 || cfg.repeats == 0 || cfg.threads == 0 {
        return Err(Error::Usage(
            "sentences, repeats and threads must be positive".into(),
        ));
    }
    let pool = if cfg.threads > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(cfg.threads)
                .build()
                .map_err(|e| Error::Usage(e.to_string()))?,
        )
    } else {
        None
    };
    let mut report = BenchReport::default();
    for (index, &bucket) in cfg.buckets.iter().enumerate() {
        let charts = bucket_charts(bucket, index, cfg.sentences, cfg.seed)?;
        let avg_len = charts.iter().map(|c| c.len()).sum::<usize>() as f64 / charts.len() as f64;
        let mut rows: Vec<BenchRow> = Vec::new();
        for &algo in &cfg.algos {
            if algo == Algorithm::Hpsg && bucket.hi > HPSG_AUTO_LIMIT && !cfg.force {
                report.notices.push(format!(
                    "skipping hpsg on bucket {}: lengths above {} need --force",
                    bucket, HPSG_AUTO_LIMIT
                ));
                continue;
            }
            let built = chart::constructions();
            let mut total = Duration::ZERO;
            let mut score_sum = 0.0;
            for _ in 0..cfg.repeats {
                let (t, s) = time_bucket(algo, &charts, pool.as_ref())?;
                total += t;
                score_sum = s;
            }
            if chart::constructions() != built {
                return Err(Error::Malformed(
                    "a chart was built inside a timed region".into(),
                ));
            }
            let seconds = total.as_secs_f64() / cfg.repeats as f64;
            rows.push(BenchRow {
                bucket,
                algo,
                sentences: charts.len(),
                avg_len,
                seconds,
                speed: charts.len() as f64 / seconds,
                speedup: None,
                score_sum,
            });
        }
        let hpsg = rows
            .iter()
            .find(|r| r.algo == Algorithm::Hpsg)
            .map(|r| r.seconds);
        if let Some(base) = hpsg {
            for r in rows.iter_mut().filter(|r| r.algo != Algorithm::Hpsg) {
                r.speedup = Some(base / r.seconds);
            }
        }
        report.rows.extend(rows);
    }
    Ok(report)
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for n in &self.notices {
            writeln!(f, "# {}", n)?;
        }
        writeln!(
            f,
            "{:<10} {:>7} {:<7} {:<7} {:>12} {:>12} {:>8}",
            "Length", "AvgLen", "Algo", "Comp.", "Time(s)", "Speed(s/s)", "Speedup"
        )?;
        for r in &self.rows {
            let speedup = r
                .speedup
                .map_or_else(|| "-".to_string(), |s| format!("{:.2}x", s));
            writeln!(
                f,
                "{:<10} {:>7.1} {:<7} {:<7} {:>12.4} {:>12.1} {:>8}",
                r.bucket.to_string(),
                r.avg_len,
                r.algo.name(),
                r.algo.complexity(),
                r.seconds,
                r.speed,
                speedup
            )?;
        }
        Ok(())
    }
}
