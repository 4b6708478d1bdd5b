//! Maximum spanning arborescence by Chu-Liu-Edmonds on a dense matrix.

use super::objective::score_dep;
use super::{check_len, DecodeResult, DecodeStats};
use crate::chart::ScoreChart;
use crate::error::Result;
use crate::tree::DepTree;

/// Best (possibly non-projective) tree rooted at 0 with a single root word.
///
/// Root arcs are penalized by a constant larger than the score spread of any
/// two trees, so the unconstrained optimum uses exactly one root arc.
pub fn mst_decode(chart: &ScoreChart) -> Result<DecodeResult> {
    let n = check_len(chart)?;
    let mut spread = 0.0;
    for m in 1..=n {
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for h in (0..=n).filter(|&h| h != m) {
            lo = lo.min(chart.arc_score(h, m));
            hi = hi.max(chart.arc_score(h, m));
        }
        spread += hi - lo;
    }
    // a power of two keeps penalized grid scores exact
    let penalty = (spread + 1.0).max(1.0).log2().ceil().exp2() * 2.0;

    let mut weights = vec![vec![f64::NEG_INFINITY; n + 1]; n + 1];
    for (h, row) in weights.iter_mut().enumerate() {
        for (m, w) in row.iter_mut().enumerate().skip(1) {
            if h != m {
                *w = chart.arc_score(h, m) - if h == 0 { penalty } else { 0.0 };
            }
        }
    }
    let mut stats = DecodeStats::default();
    let parents = chu_liu_edmonds(&weights, &mut stats);
    let heads = parents[1..].to_vec();
    let tree = DepTree::unlabeled(heads.clone())?;
    let score = score_dep(chart, &tree);
    Ok(DecodeResult::from_heads(chart, heads, score, stats))
}

/// Parent of every vertex in a maximum arborescence rooted at vertex 0.
/// `weights[u][v]` scores the arc `u -> v`; missing arcs are `-inf`.
pub(crate) fn chu_liu_edmonds(weights: &[Vec<f64>], stats: &mut DecodeStats) -> Vec<usize> {
    let k = weights.len();
    let mut parent = vec![0usize; k];
    for v in 1..k {
        let mut best = f64::NEG_INFINITY;
        for (u, row) in weights.iter().enumerate() {
            if u != v && row[v] > best {
                best = row[v];
                parent[v] = u;
            }
        }
    }
    stats.cells += 1;
    stats.split_evals += (k * k) as u64;

    let cycle = match find_cycle(&parent) {
        Some(c) => c,
        None => return parent,
    };
    let mut in_cycle = vec![false; k];
    for &v in &cycle {
        in_cycle[v] = true;
    }

    // contracted vertex numbering: outside vertices keep their order, the
    // cycle becomes the last vertex
    let mut new_index = vec![usize::MAX; k];
    let mut old_index = Vec::new();
    for v in 0..k {
        if !in_cycle[v] {
            new_index[v] = old_index.len();
            old_index.push(v);
        }
    }
    let c = old_index.len();
    let k2 = c + 1;
    let mut w2 = vec![vec![f64::NEG_INFINITY; k2]; k2];
    let mut enter = vec![usize::MAX; k];
    let mut leave = vec![usize::MAX; k];

    for u in 0..k {
        if in_cycle[u] {
            continue;
        }
        for v in 0..k {
            if in_cycle[v] || u == v {
                continue;
            }
            w2[new_index[u]][new_index[v]] = weights[u][v];
        }
        let mut best = f64::NEG_INFINITY;
        for &v in &cycle_sorted(&cycle) {
            let val = weights[u][v] - weights[parent[v]][v];
            if val > best {
                best = val;
                enter[u] = v;
            }
        }
        w2[new_index[u]][c] = best;
    }
    for v in 1..k {
        if in_cycle[v] {
            continue;
        }
        let mut best = f64::NEG_INFINITY;
        for &u in &cycle_sorted(&cycle) {
            if weights[u][v] > best {
                best = weights[u][v];
                leave[v] = u;
            }
        }
        w2[c][new_index[v]] = best;
    }

    let sub = chu_liu_edmonds(&w2, stats);
    let mut result = vec![0usize; k];
    for v in 1..k {
        if in_cycle[v] {
            result[v] = parent[v];
        } else {
            let p = sub[new_index[v]];
            result[v] = if p == c { leave[v] } else { old_index[p] };
        }
    }
    let entering_from = old_index[sub[c]];
    result[enter[entering_from]] = entering_from;
    result
}

fn cycle_sorted(cycle: &[usize]) -> Vec<usize> {
    let mut c = cycle.to_vec();
    c.sort_unstable();
    c
}

fn find_cycle(parent: &[usize]) -> Option<Vec<usize>> {
    let k = parent.len();
    // 0 unvisited, 1 on path, 2 done
    let mut state = vec![0u8; k];
    state[0] = 2;
    for start in 1..k {
        let mut path = Vec::new();
        let mut v = start;
        while state[v] == 0 {
            state[v] = 1;
            path.push(v);
            v = parent[v];
        }
        if state[v] == 1 {
            let pos = path.iter().position(|&p| p == v).unwrap();
            return Some(path[pos..].to_vec());
        }
        for p in path {
            state[p] = 2;
        }
    }
    None
}
