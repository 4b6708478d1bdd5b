//! Exhaustive joint decoding with head-indexed chart cells, Θ(n⁵).

use super::{augmented_arcs, check_len, DecodeResult, DecodeStats, LabelMax};
use crate::chart::ScoreChart;
use crate::error::Result;
use crate::tree::{JointNode, JointTree};

struct Chart3 {
    n1: usize,
    /// best split value of `(i, j)` headed by `h`, label of `(i, j)` excluded
    split: Vec<f64>,
    back_k: Vec<u32>,
    back_m: Vec<u32>,
}

impl Chart3 {
    #[inline]
    fn at(&self, i: usize, j: usize, h: usize) -> usize {
        (i * self.n1 + j) * self.n1 + h
    }
}

/// Best joint tree when every split searches all head/modifier word pairs.
///
/// A cell `(i, j)` headed by `h` is *complete* (label `≠ ∅`) when it is the
/// head daughter or the root, otherwise it may take any label. At split `k`
/// the head daughter contributes its complete score, the other daughter its
/// best score for the modifier head `m`, plus the relation-augmented arc
/// `h -> m`. The root adds the arc `0 -> h`.
pub fn hpsg_decode(chart: &ScoreChart) -> Result<DecodeResult> {
    let n = check_len(chart)?;
    let n1 = n + 1;
    let labels = LabelMax::new(chart);
    let arcs = augmented_arcs(chart);
    let mut t = Chart3 {
        n1,
        split: vec![f64::NEG_INFINITY; n1 * n1 * n1],
        back_k: vec![0; n1 * n1 * n1],
        back_m: vec![0; n1 * n1 * n1],
    };
    let mut stats = DecodeStats::default();

    for i in 0..n {
        let at = t.at(i, i + 1, i + 1);
        t.split[at] = 0.0;
        stats.cells += 1;
    }

    // modifier-side maxima for one split, reused across head words
    let mut modifier_best = vec![0.0f64; n1];
    for len in 2..=n {
        for i in 0..=n - len {
            let j = i + len;
            stats.cells += len as u64;
            for k in i + 1..j {
                let spans = chart.span_score(i, k) + chart.span_score(k, j);
                let left_ne = labels.non_empty(i, k).1;
                let left_all = labels.all(i, k).1;
                let right_ne = labels.non_empty(k, j).1;
                let right_all = labels.all(k, j).1;

                // head in the left daughter, modifier in the right
                for m in k + 1..=j {
                    modifier_best[m] = t.split[t.at(k, j, m)] + right_all;
                }
                for h in i + 1..=k {
                    let head_part = t.split[t.at(i, k, h)] + left_ne;
                    let row = &arcs[h * n1..h * n1 + n1];
                    let mut best = f64::NEG_INFINITY;
                    let mut arg = 0;
                    for m in k + 1..=j {
                        let v = modifier_best[m] + row[m];
                        if v > best {
                            best = v;
                            arg = m;
                        }
                    }
                    let cand = spans + head_part + best;
                    let at = t.at(i, j, h);
                    if cand > t.split[at] {
                        t.split[at] = cand;
                        t.back_k[at] = k as u32;
                        t.back_m[at] = arg as u32;
                    }
                }

                // head in the right daughter, modifier in the left
                for m in i + 1..=k {
                    modifier_best[m] = t.split[t.at(i, k, m)] + left_all;
                }
                for h in k + 1..=j {
                    let head_part = t.split[t.at(k, j, h)] + right_ne;
                    let row = &arcs[h * n1..h * n1 + n1];
                    let mut best = f64::NEG_INFINITY;
                    let mut arg = 0;
                    for m in i + 1..=k {
                        let v = modifier_best[m] + row[m];
                        if v > best {
                            best = v;
                            arg = m;
                        }
                    }
                    let cand = spans + head_part + best;
                    let at = t.at(i, j, h);
                    if cand > t.split[at] {
                        t.split[at] = cand;
                        t.back_k[at] = k as u32;
                        t.back_m[at] = arg as u32;
                    }
                }
                stats.split_evals += 2 * ((k - i) * (j - k)) as u64;
            }
        }
    }

    let root_label = labels.non_empty(0, n).1;
    let mut score = f64::NEG_INFINITY;
    let mut root_head = 1;
    for h in 1..=n {
        let v = t.split[t.at(0, n, h)] + root_label + arcs[h];
        if v > score {
            score = v;
            root_head = h;
        }
    }

    let root = build(chart, &labels, &t, 0, n, root_head, true);
    let joint = JointTree {
        root,
        dep_labels: vec![String::new(); n],
    };
    Ok(DecodeResult::from_joint(chart, joint, score, stats))
}

fn build(
    chart: &ScoreChart,
    labels: &LabelMax,
    t: &Chart3,
    i: usize,
    j: usize,
    h: usize,
    complete: bool,
) -> JointNode {
    let label_idx = if complete {
        labels.non_empty(i, j).0
    } else {
        labels.all(i, j).0
    };
    let label = chart.labels_c()[label_idx].clone();
    if j == i + 1 {
        return JointNode::leaf(label, j);
    }
    let at = t.at(i, j, h);
    let k = t.back_k[at] as usize;
    let m = t.back_m[at] as usize;
    if h <= k {
        let left = build(chart, labels, t, i, k, h, true);
        let right = build(chart, labels, t, k, j, m, false);
        JointNode::join(label, left, right, true)
    } else {
        let left = build(chart, labels, t, i, k, m, false);
        let right = build(chart, labels, t, k, j, h, true);
        JointNode::join(label, left, right, false)
    }
}
