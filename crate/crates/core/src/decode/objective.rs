//! Direct evaluation of decoder objectives on finished structures.
//!
//! Constituent part: every chart cell of the binarized tree contributes its
//! label score, every cell except the root its span score. Joint trees add
//! `s_arc(h, m) + max_l s_label((h, m), l)` per arc, root arc included.
//! Dependency decoders score `s_arc` only.

use crate::chart::ScoreChart;
use crate::error::{Error, Result};
use crate::tree::{ConstTree, DepTree, JointNode, JointTree, Node, EMPTY_LABEL};

fn label_index(chart: &ScoreChart, label: &str) -> Result<usize> {
    chart
        .constituent_label_index(label)
        .ok_or_else(|| Error::Malformed(format!("label {} not in the chart", label)))
}

fn cell_score(chart: &ScoreChart, node: &Node, is_root: bool) -> Result<f64> {
    let (label, children): (&str, &[Node]) = match node {
        Node::Leaf(_) => (EMPTY_LABEL, &[]),
        Node::Phrase(ph) => match ph.children.as_slice() {
            [Node::Leaf(_)] => (&ph.label, &[]),
            [_, _] => (&ph.label, &ph.children),
            _ => {
                return Err(Error::InvalidTree(format!(
                    "({}, {}) is not a binary chart cell",
                    ph.start, ph.end
                )))
            }
        },
    };
    let (i, j) = (node.start(), node.end());
    let mut s = chart.label_score(i, j, label_index(chart, label)?);
    if !is_root {
        s += chart.span_score(i, j);
    }
    for child in children {
        s += cell_score(chart, child, false)?;
    }
    Ok(s)
}

/// Objective of a chart-form (binarized, unary-collapsed) constituent tree.
pub fn score_binarized(chart: &ScoreChart, tree: &ConstTree) -> Result<f64> {
    if tree.len() != chart.len() {
        return Err(Error::LengthMismatch {
            pred: tree.len(),
            gold: chart.len(),
        });
    }
    cell_score(chart, tree.root(), true)
}

fn best_relation(chart: &ScoreChart, h: usize, m: usize) -> f64 {
    chart
        .dep_label_scores(h, m)
        .iter()
        .copied()
        .fold(f64::NEG_INFINITY, f64::max)
}

fn joint_cells(chart: &ScoreChart, node: &JointNode, is_root: bool) -> Result<f64> {
    let mut s = chart.label_score(node.start, node.end, label_index(chart, &node.label)?);
    if !is_root {
        s += chart.span_score(node.start, node.end);
    }
    if let Some(c) = &node.children {
        s += joint_cells(chart, &c.0, false)?;
        s += joint_cells(chart, &c.1, false)?;
    }
    Ok(s)
}

/// Joint objective: constituent cells plus relation-augmented arcs.
pub fn score_joint(chart: &ScoreChart, tree: &JointTree) -> Result<f64> {
    if tree.len() != chart.len() {
        return Err(Error::LengthMismatch {
            pred: tree.len(),
            gold: chart.len(),
        });
    }
    let mut s = joint_cells(chart, &tree.root, true)?;
    for (idx, h) in tree.heads().into_iter().enumerate() {
        s += chart.arc_score(h, idx + 1) + best_relation(chart, h, idx + 1);
    }
    Ok(s)
}

/// Sum of arc scores of a dependency tree.
pub fn score_dep(chart: &ScoreChart, tree: &DepTree) -> f64 {
    tree.heads
        .iter()
        .enumerate()
        .map(|(idx, &h)| chart.arc_score(h, idx + 1))
        .sum()
}

/// Arc plus chosen relation scores.
pub fn score_labeled_dep(chart: &ScoreChart, tree: &DepTree) -> Result<f64> {
    let mut s = 0.0;
    for (idx, &h) in tree.heads.iter().enumerate() {
        let l = chart
            .dependency_label_index(&tree.labels[idx])
            .ok_or_else(|| {
                Error::Malformed(format!("relation {} not in the chart", tree.labels[idx]))
            })?;
        s += chart.arc_score(h, idx + 1) + chart.dep_label_scores(h, idx + 1)[l];
    }
    Ok(s)
}
