//! Exhaustive reference decoders for short sentences.
//!
//! They enumerate every candidate structure and score it with the direct
//! objective functions, sharing no chart recursion with the fast decoders.

use super::objective::{score_binarized, score_dep, score_joint};
use super::{argmax, check_len, DecodeResult, DecodeStats};
use crate::chart::ScoreChart;
use crate::error::{Error, Result};
use crate::tree::{ConstTree, DepTree, JointNode, JointTree, Node, EMPTY_LABEL};

pub const MAX_CONST_LEN: usize = 8;
pub const MAX_DEP_LEN: usize = 7;
pub const MAX_JOINT_LEN: usize = 5;

fn bounded(chart: &ScoreChart, max: usize) -> Result<usize> {
    let n = check_len(chart)?;
    if n > max {
        return Err(Error::TooLong { n, max });
    }
    Ok(n)
}

/// Every binary bracketing of `(i, j)` as lists of internal spans.
fn shapes(i: usize, j: usize) -> Vec<Vec<(usize, usize, usize)>> {
    if j == i + 1 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for k in i + 1..j {
        let lefts = shapes(i, k);
        let rights = shapes(k, j);
        for l in &lefts {
            for r in &rights {
                let mut s = Vec::with_capacity(l.len() + r.len() + 1);
                s.push((i, k, j));
                s.extend_from_slice(l);
                s.extend_from_slice(r);
                out.push(s);
            }
        }
    }
    out
}

fn best_label(chart: &ScoreChart, i: usize, j: usize, non_empty: bool) -> &str {
    let scores = chart.label_scores(i, j);
    let idx = if non_empty {
        argmax(&scores[1..]).0 + 1
    } else {
        argmax(scores).0
    };
    &chart.labels_c()[idx]
}

fn const_node(
    chart: &ScoreChart,
    splits: &[(usize, usize, usize)],
    i: usize,
    j: usize,
    root: bool,
) -> Node {
    let label = best_label(chart, i, j, root);
    if j == i + 1 {
        return if label == EMPTY_LABEL {
            Node::Leaf(i)
        } else {
            Node::phrase(label, vec![Node::Leaf(i)])
        };
    }
    let &(_, k, _) = splits
        .iter()
        .find(|s| s.0 == i && s.2 == j)
        .expect("span in shape");
    Node::phrase(
        label,
        vec![
            const_node(chart, splits, i, k, false),
            const_node(chart, splits, k, j, false),
        ],
    )
}

/// Best chart-form constituent tree over all binary bracketings.
pub fn brute_force_const(chart: &ScoreChart) -> Result<DecodeResult> {
    let n = bounded(chart, MAX_CONST_LEN)?;
    let mut best: Option<(f64, ConstTree)> = None;
    let mut stats = DecodeStats::default();
    for shape in shapes(0, n) {
        let tree = ConstTree::new(const_node(chart, &shape, 0, n, true))?;
        let s = score_binarized(chart, &tree)?;
        stats.cells += 1;
        if best.as_ref().is_none_or(|(b, _)| s > *b) {
            best = Some((s, tree));
        }
    }
    let (score, binarized) = best.expect("at least one bracketing");
    Ok(DecodeResult {
        const_tree: Some(binarized.debinarize()?.expand_unary()),
        binarized: Some(binarized),
        dep_tree: None,
        joint: None,
        score,
        stats,
    })
}

/// All single-root dependency trees over `n` words, optionally only the
/// projective ones, as head vectors in lexicographic order.
pub fn enumerate_dep_trees(n: usize, projective: bool) -> Vec<Vec<usize>> {
    fn reaches_root(heads: &[usize], mut w: usize, assigned: usize) -> bool {
        // follows heads among assigned words; false on a cycle
        for _ in 0..=assigned {
            if w == 0 || w > assigned {
                return true;
            }
            w = heads[w - 1];
        }
        false
    }

    fn go(
        n: usize,
        heads: &mut Vec<usize>,
        roots: usize,
        projective: bool,
        out: &mut Vec<Vec<usize>>,
    ) {
        let m = heads.len() + 1;
        if m > n {
            if roots == 1 {
                let ok = !projective
                    || DepTree::unlabeled(heads.clone()).is_ok_and(|t| t.is_projective());
                if ok {
                    out.push(heads.clone());
                }
            }
            return;
        }
        for h in 0..=n {
            if h == m || (h == 0 && roots == 1) {
                continue;
            }
            heads.push(h);
            // a cycle closes only through already assigned words
            if reaches_root(heads, m, m) {
                go(n, heads, roots + usize::from(h == 0), projective, out);
            }
            heads.pop();
        }
    }

    let mut out = Vec::new();
    if n > 0 {
        go(n, &mut Vec::with_capacity(n), 0, projective, &mut out);
    }
    out
}

/// Best single-root dependency tree by enumeration; the objective is the
/// sum of arc scores, relations are assigned afterwards.
pub fn brute_force_dep(chart: &ScoreChart, projective: bool) -> Result<DecodeResult> {
    let n = bounded(chart, MAX_DEP_LEN)?;
    let mut best: Option<(f64, Vec<usize>)> = None;
    let mut stats = DecodeStats::default();
    for heads in enumerate_dep_trees(n, projective) {
        let tree = DepTree::unlabeled(heads)?;
        let s = score_dep(chart, &tree);
        stats.cells += 1;
        if best.as_ref().is_none_or(|(b, _)| s > *b) {
            best = Some((s, tree.heads));
        }
    }
    let (score, heads) = best.expect("at least one tree");
    Ok(DecodeResult::from_heads(chart, heads, score, stats))
}

/// Every binary tree over `(i, j)` with every choice of head daughter;
/// labels are left blank.
fn headed_trees(i: usize, j: usize) -> Vec<JointNode> {
    if j == i + 1 {
        return vec![JointNode::leaf(String::new(), j)];
    }
    let mut out = Vec::new();
    for k in i + 1..j {
        let lefts = headed_trees(i, k);
        let rights = headed_trees(k, j);
        for l in &lefts {
            for r in &rights {
                out.push(JointNode::join(String::new(), l.clone(), r.clone(), true));
                out.push(JointNode::join(String::new(), l.clone(), r.clone(), false));
            }
        }
    }
    out
}

/// Labels every node with its best allowed label: head daughters and the
/// root exclude `∅`.
fn label_tree(chart: &ScoreChart, node: &mut JointNode, complete: bool) {
    node.label = best_label(chart, node.start, node.end, complete).to_string();
    let head = node.head;
    if let Some(c) = node.children.as_mut() {
        let left_is_head = c.0.head == head;
        label_tree(chart, &mut c.0, left_is_head);
        label_tree(chart, &mut c.1, !left_is_head);
    }
}

/// Best decodable joint tree over all bracketings and head assignments.
pub fn brute_force_joint(chart: &ScoreChart) -> Result<DecodeResult> {
    let n = bounded(chart, MAX_JOINT_LEN)?;
    let mut best: Option<(f64, JointTree)> = None;
    let mut stats = DecodeStats::default();
    for mut root in headed_trees(0, n) {
        label_tree(chart, &mut root, true);
        let tree = JointTree::new(root, vec![chart.labels_d()[0].clone(); n])?;
        let s = score_joint(chart, &tree)?;
        stats.cells += 1;
        if best.as_ref().is_none_or(|(b, _)| s > *b) {
            best = Some((s, tree));
        }
    }
    let (score, joint) = best.expect("at least one tree");
    Ok(DecodeResult::from_joint(chart, joint, score, stats))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shape_counts_are_catalan() {
        let counts: Vec<usize> = (1..=7).map(|n| shapes(0, n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 14, 42, 132]);
    }

    #[test]
    fn headed_tree_counts() {
        // Catalan(n - 1) * 2^(n - 1)
        assert_eq!(headed_trees(0, 3).len(), 8);
        assert_eq!(headed_trees(0, 4).len(), 40);
    }

    #[test]
    fn dependency_tree_counts() {
        // single-root trees: n^(n-1) labeled rooted trees
        assert_eq!(enumerate_dep_trees(3, false).len(), 9);
        assert_eq!(enumerate_dep_trees(4, false).len(), 64);
        assert_eq!(enumerate_dep_trees(4, true).len(), 30);
        assert_eq!(enumerate_dep_trees(1, true), vec![vec![0]]);
    }

    #[test]
    fn rejects_long_sentences() {
        let c = ScoreChart::zeros(
            "t",
            9,
            vec![EMPTY_LABEL.into(), "X".into()],
            vec!["d".into()],
        )
        .unwrap();
        assert!(matches!(
            brute_force_const(&c),
            Err(Error::TooLong { n: 9, max: 8 })
        ));
        assert!(matches!(brute_force_joint(&c), Err(Error::TooLong { .. })));
        assert!(matches!(
            brute_force_dep(&c, true),
            Err(Error::TooLong { .. })
        ));
    }
}
