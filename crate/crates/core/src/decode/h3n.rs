//! Joint decoding in Θ(n³) with heads fixed by head scores.
//!
//! Every cell `(i, j)` is headed by the leftmost word of maximal head score
//! in `i + 1 ..= j`. That word does not depend on the split, and for any
//! split it lies in exactly one daughter and is also that daughter's head,
//! so the cell needs one complete and one incomplete value instead of one
//! per head word. Both share the same best split and differ only in the
//! label maximum.

use super::{augmented_arcs, check_len, DecodeResult, DecodeStats, LabelMax};
use crate::chart::ScoreChart;
use crate::error::Result;
use crate::tree::{JointNode, JointTree};

/// Leftmost argmax head word of every span, `[i * (n + 1) + j]`.
fn span_heads(scores: &[f64]) -> Vec<usize> {
    let n = scores.len();
    let n1 = n + 1;
    let mut heads = vec![0; n1 * n1];
    for i in 0..n {
        let mut best = i + 1;
        for j in i + 1..=n {
            if scores[j - 1] > scores[best - 1] {
                best = j;
            }
            heads[i * n1 + j] = best;
        }
    }
    heads
}

pub fn h3n_decode(chart: &ScoreChart) -> Result<DecodeResult> {
    let n = check_len(chart)?;
    let n1 = n + 1;
    let labels = LabelMax::new(chart);
    let arcs = augmented_arcs(chart);
    let hs = span_heads(&chart.head_scores());
    let mut complete = vec![0.0; n1 * n1];
    let mut incomplete = vec![0.0; n1 * n1];
    let mut back = vec![0usize; n1 * n1];
    let mut stats = DecodeStats::default();

    for i in 0..n {
        let c = i * n1 + i + 1;
        complete[c] = labels.non_empty(i, i + 1).1;
        incomplete[c] = labels.all(i, i + 1).1;
        stats.cells += 1;
    }
    for len in 2..=n {
        for i in 0..=n - len {
            let j = i + len;
            let h = hs[i * n1 + j];
            let mut top = f64::NEG_INFINITY;
            let mut arg = 0;
            for k in i + 1..j {
                let (left, right) = (i * n1 + k, k * n1 + j);
                let mut v = chart.span_score(i, k) + chart.span_score(k, j);
                if h <= k {
                    v += complete[left] + incomplete[right] + arcs[h * n1 + hs[right]];
                } else {
                    v += incomplete[left] + complete[right] + arcs[h * n1 + hs[left]];
                }
                if v > top {
                    top = v;
                    arg = k;
                }
            }
            let c = i * n1 + j;
            back[c] = arg;
            complete[c] = top + labels.non_empty(i, j).1;
            incomplete[c] = top + labels.all(i, j).1;
            stats.cells += 1;
            stats.split_evals += (len - 1) as u64;
        }
    }

    let root_head = hs[n];
    let score = complete[n] + arcs[root_head];

    let root = build(chart, &labels, &hs, &back, n1, 0, n, true);
    let joint = JointTree {
        root,
        dep_labels: vec![String::new(); n],
    };
    Ok(DecodeResult::from_joint(chart, joint, score, stats))
}

#[allow(clippy::too_many_arguments)]
fn build(
    chart: &ScoreChart,
    labels: &LabelMax,
    hs: &[usize],
    back: &[usize],
    n1: usize,
    i: usize,
    j: usize,
    complete: bool,
) -> JointNode {
    let idx = if complete {
        labels.non_empty(i, j).0
    } else {
        labels.all(i, j).0
    };
    let label = chart.labels_c()[idx].clone();
    if j == i + 1 {
        return JointNode::leaf(label, j);
    }
    let k = back[i * n1 + j];
    let head_left = hs[i * n1 + j] <= k;
    let left = build(chart, labels, hs, back, n1, i, k, head_left);
    let right = build(chart, labels, hs, back, n1, k, j, !head_left);
    JointNode::join(label, left, right, head_left)
}
