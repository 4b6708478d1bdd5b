use super::{check_len, DecodeResult, DecodeStats};
use crate::chart::ScoreChart;
use crate::error::Result;

const RIGHT: usize = 0;
const LEFT: usize = 1;

struct Tables {
    n1: usize,
    complete: Vec<[f64; 2]>,
    incomplete: Vec<[f64; 2]>,
    complete_back: Vec<[usize; 2]>,
    incomplete_back: Vec<[usize; 2]>,
}

impl Tables {
    #[inline]
    fn at(&self, s: usize, t: usize) -> usize {
        s * self.n1 + t
    }
}

/// Best projective tree with a single root word, by first-order Eisner
/// over words `1..=n` and a final choice of the root word.
pub fn eisner_decode(chart: &ScoreChart) -> Result<DecodeResult> {
    let n = check_len(chart)?;
    let n1 = n + 1;
    let mut tb = Tables {
        n1,
        complete: vec![[0.0; 2]; n1 * n1],
        incomplete: vec![[f64::NEG_INFINITY; 2]; n1 * n1],
        complete_back: vec![[0; 2]; n1 * n1],
        incomplete_back: vec![[0; 2]; n1 * n1],
    };
    let mut stats = DecodeStats::default();

    for len in 1..n {
        for s in 1..=n - len {
            let t = s + len;
            let st = tb.at(s, t);
            stats.cells += 4;

            let mut best = f64::NEG_INFINITY;
            let mut arg = s;
            for r in s..t {
                let v = tb.complete[tb.at(s, r)][RIGHT] + tb.complete[tb.at(r + 1, t)][LEFT];
                if v > best {
                    best = v;
                    arg = r;
                }
            }
            stats.split_evals += (t - s) as u64;
            tb.incomplete[st] = [best + chart.arc_score(s, t), best + chart.arc_score(t, s)];
            tb.incomplete_back[st] = [arg, arg];

            let mut best = f64::NEG_INFINITY;
            let mut arg = s;
            for r in s..t {
                let v = tb.complete[tb.at(s, r)][LEFT] + tb.incomplete[tb.at(r, t)][LEFT];
                if v > best {
                    best = v;
                    arg = r;
                }
            }
            tb.complete[st][LEFT] = best;
            tb.complete_back[st][LEFT] = arg;

            let mut best = f64::NEG_INFINITY;
            let mut arg = s + 1;
            for r in s + 1..=t {
                let v = tb.incomplete[tb.at(s, r)][RIGHT] + tb.complete[tb.at(r, t)][RIGHT];
                if v > best {
                    best = v;
                    arg = r;
                }
            }
            tb.complete[st][RIGHT] = best;
            tb.complete_back[st][RIGHT] = arg;
            stats.split_evals += 2 * (t - s) as u64;
        }
    }

    let mut score = f64::NEG_INFINITY;
    let mut root = 1;
    for r in 1..=n {
        let v = tb.complete[tb.at(1, r)][LEFT]
            + tb.complete[tb.at(r, n)][RIGHT]
            + chart.arc_score(0, r);
        if v > score {
            score = v;
            root = r;
        }
    }

    let mut heads = vec![0; n];
    heads[root - 1] = 0;
    backtrack_complete(&tb, 1, root, LEFT, &mut heads);
    backtrack_complete(&tb, root, n, RIGHT, &mut heads);
    Ok(DecodeResult::from_heads(chart, heads, score, stats))
}

fn backtrack_complete(tb: &Tables, s: usize, t: usize, dir: usize, heads: &mut [usize]) {
    if s == t {
        return;
    }
    let r = tb.complete_back[tb.at(s, t)][dir];
    if dir == LEFT {
        backtrack_complete(tb, s, r, LEFT, heads);
        backtrack_incomplete(tb, r, t, LEFT, heads);
    } else {
        backtrack_incomplete(tb, s, r, RIGHT, heads);
        backtrack_complete(tb, r, t, RIGHT, heads);
    }
}

fn backtrack_incomplete(tb: &Tables, s: usize, t: usize, dir: usize, heads: &mut [usize]) {
    if dir == LEFT {
        heads[s - 1] = t;
    } else {
        heads[t - 1] = s;
    }
    let r = tb.incomplete_back[tb.at(s, t)][dir];
    backtrack_complete(tb, s, r, RIGHT, heads);
    backtrack_complete(tb, r + 1, t, LEFT, heads);
}
