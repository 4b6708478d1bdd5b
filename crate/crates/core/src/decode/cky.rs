use super::{check_len, DecodeResult, DecodeStats, LabelMax};
use crate::chart::ScoreChart;
use crate::error::Result;
use crate::tree::{ConstTree, Node, EMPTY_LABEL};

/// Chart-form node for a cell: an `∅` word cell is the bare leaf.
pub(crate) fn cell_node(label: &str, i: usize, j: usize, children: Option<(Node, Node)>) -> Node {
    match children {
        None if label == EMPTY_LABEL => Node::Leaf(i),
        None => Node::phrase(label, vec![Node::Leaf(i)]),
        Some((l, r)) => {
            debug_assert_eq!((l.start(), r.end()), (i, j));
            Node::phrase(label, vec![l, r])
        }
    }
}

/// Best constituent tree under
/// `s(i, j) = max_{l, k} s_label((i, j), l) + s_span(i, k) + s_span(k, j) + s(i, k) + s(k, j)`
/// with `s(i, i + 1) = max_l s_label`. The root label excludes `∅`.
pub fn cky_decode(chart: &ScoreChart) -> Result<DecodeResult> {
    let n = check_len(chart)?;
    let n1 = n + 1;
    let labels = LabelMax::new(chart);
    // best split value per cell, label excluded
    let mut split = vec![0.0; n1 * n1];
    let mut best = vec![0.0; n1 * n1];
    let mut back = vec![0usize; n1 * n1];
    let mut stats = DecodeStats::default();

    for i in 0..n {
        best[i * n1 + i + 1] = labels.all(i, i + 1).1;
        stats.cells += 1;
    }
    for len in 2..=n {
        for i in 0..=n - len {
            let j = i + len;
            let mut top = f64::NEG_INFINITY;
            let mut arg = 0;
            for k in i + 1..j {
                let v = chart.span_score(i, k)
                    + chart.span_score(k, j)
                    + best[i * n1 + k]
                    + best[k * n1 + j];
                if v > top {
                    top = v;
                    arg = k;
                }
            }
            stats.cells += 1;
            stats.split_evals += (len - 1) as u64;
            split[i * n1 + j] = top;
            back[i * n1 + j] = arg;
            best[i * n1 + j] = top + labels.all(i, j).1;
        }
    }

    let (root_label, root_score) = labels.non_empty(0, n);
    let score = split[n] + root_score;

    fn build(
        chart: &ScoreChart,
        labels: &LabelMax,
        back: &[usize],
        n1: usize,
        i: usize,
        j: usize,
        label: usize,
    ) -> Node {
        let name = &chart.labels_c()[label];
        if j == i + 1 {
            return cell_node(name, i, j, None);
        }
        let k = back[i * n1 + j];
        let left = build(chart, labels, back, n1, i, k, labels.all(i, k).0);
        let right = build(chart, labels, back, n1, k, j, labels.all(k, j).0);
        cell_node(name, i, j, Some((left, right)))
    }

    let root = build(chart, &labels, &back, n1, 0, n, root_label);
    let binarized = ConstTree::new(root)?;
    let const_tree = binarized.debinarize()?.expand_unary();
    Ok(DecodeResult {
        const_tree: Some(const_tree),
        binarized: Some(binarized),
        dep_tree: None,
        joint: None,
        score,
        stats,
    })
}
