//! Span levels, gold head levels and the head-score properties that make
//! a deterministic head choice sound.

use std::collections::HashMap;

use crate::chart::HeadLevel;
use crate::tree::{JointNode, JointTree};

/// Level of every node of a joint tree: 1 at the root, parent + 1 below.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanLevelMap {
    levels: HashMap<(usize, usize), usize>,
}

impl SpanLevelMap {
    pub fn get(&self, start: usize, end: usize) -> Option<usize> {
        self.levels.get(&(start, end)).copied()
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn max_level(&self) -> usize {
        self.levels.values().copied().max().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), usize)> + '_ {
        self.levels.iter().map(|(&k, &v)| (k, v))
    }
}

pub fn span_levels(tree: &JointTree) -> SpanLevelMap {
    let levels = tree
        .nodes()
        .into_iter()
        .map(|(node, level)| (node.span(), level))
        .collect();
    SpanLevelMap { levels }
}

/// Per-word level class: the smallest level of a span the word heads,
/// clamped to `cap`; `NoSpan` for words heading nothing.
pub fn gold_head_levels(tree: &JointTree, cap: u32) -> Vec<HeadLevel> {
    assert!(cap >= 1);
    let mut best: Vec<Option<usize>> = vec![None; tree.len()];
    for (node, level) in tree.nodes() {
        let slot = &mut best[node.head - 1];
        *slot = Some(slot.map_or(level, |l| l.min(level)));
    }
    best.into_iter()
        .map(|l| match l {
            Some(l) => HeadLevel::Level((l as u32).min(cap)),
            None => HeadLevel::NoSpan,
        })
        .collect()
}

pub fn head_score(level: HeadLevel) -> f64 {
    level.score()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HeadProperty {
    /// The head outscores every other word of its span (strictly).
    HeadDominatesSpan,
    /// A word heading several spans has one score.
    ConsistentAcrossSpans,
    /// A span's head scores at least as high as any sub-span head.
    MonotoneInNesting,
}

impl HeadProperty {
    pub fn number(self) -> u8 {
        match self {
            HeadProperty::HeadDominatesSpan => 1,
            HeadProperty::ConsistentAcrossSpans => 2,
            HeadProperty::MonotoneInNesting => 3,
        }
    }
}

/// One failed inequality: `span` is the span under test, `witness` the
/// word that breaks it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Violation {
    pub property: HeadProperty,
    pub span: (usize, usize),
    pub witness: usize,
}

/// Check per-word head scores (index `word - 1`) against the head
/// assignment of `gold`. An empty result means all three properties hold.
pub fn check_head_properties(scores: &[f64], gold: &JointTree) -> Vec<Violation> {
    assert_eq!(scores.len(), gold.len(), "one score per word");
    let score = |w: usize| scores[w - 1];
    let mut out = Vec::new();

    for (node, _) in gold.nodes() {
        let h = node.head;
        for w in node.start + 1..=node.end {
            if w != h && !(score(h) > score(w)) {
                out.push(Violation {
                    property: HeadProperty::HeadDominatesSpan,
                    span: node.span(),
                    witness: w,
                });
            }
        }
    }

    // Scores are looked up per word, so a shared head can only disagree
    // with itself if the table is inconsistent (NaN).
    let mut seen: HashMap<usize, f64> = HashMap::new();
    for (node, _) in gold.nodes() {
        let s = score(node.head);
        match seen.get(&node.head) {
            Some(&prev) if prev.to_bits() != s.to_bits() || s.is_nan() => out.push(Violation {
                property: HeadProperty::ConsistentAcrossSpans,
                span: node.span(),
                witness: node.head,
            }),
            Some(_) => {}
            None => {
                seen.insert(node.head, s);
            }
        }
    }

    for (node, _) in gold.nodes() {
        let outer = score(node.head);
        let mut check = |inner: &JointNode, _| {
            if !(outer >= score(inner.head)) {
                out.push(Violation {
                    property: HeadProperty::MonotoneInNesting,
                    span: node.span(),
                    witness: inner.head,
                });
            }
        };
        if let Some(c) = &node.children {
            c.0.walk(0, &mut check);
            c.1.walk(0, &mut check);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chart::CAP;
    use crate::tree::EMPTY_LABEL;

    fn chain(n: usize) -> JointTree {
        // right-branching, head always the left word: depth n
        let mut node = JointNode::leaf("X", n);
        for w in (1..n).rev() {
            node = JointNode::join("X", JointNode::leaf("X", w), node, true);
        }
        JointTree::new(node, vec!["d".to_string(); n]).unwrap()
    }

    fn sample() -> JointTree {
        let right = JointNode::join(
            EMPTY_LABEL,
            JointNode::leaf("VP", 2),
            JointNode::leaf(EMPTY_LABEL, 3),
            true,
        );
        let root = JointNode::join("S", JointNode::leaf("NP", 1), right, false);
        JointTree::new(root, vec!["a".into(), "b".into(), "c".into()]).unwrap()
    }

    #[test]
    fn single_word_levels() {
        let t = JointTree::new(JointNode::leaf("X", 1), vec!["root".into()]).unwrap();
        let lv = span_levels(&t);
        assert_eq!(lv.len(), 1);
        assert_eq!(lv.get(0, 1), Some(1));
        assert_eq!(gold_head_levels(&t, CAP), vec![HeadLevel::Level(1)]);
    }

    #[test]
    fn children_one_level_down() {
        let lv = span_levels(&sample());
        assert_eq!(lv.get(0, 3), Some(1));
        assert_eq!(lv.get(0, 1), Some(2));
        assert_eq!(lv.get(1, 3), Some(2));
        assert_eq!(lv.get(2, 3), Some(3));
        assert_eq!(lv.max_level(), 3);
    }

    #[test]
    fn root_head_has_level_one() {
        let t = sample();
        let levels = gold_head_levels(&t, CAP);
        assert_eq!(levels[1], HeadLevel::Level(1));
        assert_eq!(head_score(levels[1]), 1.0);
        assert_eq!(
            levels,
            vec![
                HeadLevel::Level(2),
                HeadLevel::Level(1),
                HeadLevel::Level(3)
            ]
        );
    }

    #[test]
    fn deep_levels_are_capped() {
        let t = chain(40);
        assert_eq!(span_levels(&t).max_level(), 40);
        let levels = gold_head_levels(&t, CAP);
        // word 40 heads only its leaf at level 40
        assert_eq!(levels[39], HeadLevel::Level(32));
        assert_eq!(levels[0], HeadLevel::Level(1));
        assert_eq!(levels[9], HeadLevel::Level(10));
    }

    #[test]
    fn head_score_formula() {
        assert_eq!(head_score(HeadLevel::Level(1)), 1.0);
        assert_eq!(head_score(HeadLevel::Level(4)), 0.25);
        assert_eq!(head_score(HeadLevel::NoSpan), 0.0);
    }

    #[test]
    fn gold_scores_satisfy_properties() {
        let t = sample();
        let scores: Vec<f64> = gold_head_levels(&t, CAP)
            .into_iter()
            .map(head_score)
            .collect();
        assert!(check_head_properties(&scores, &t).is_empty());
    }

    #[test]
    fn swapped_scores_violate_prop1_at_root() {
        let t = sample();
        let mut scores: Vec<f64> = gold_head_levels(&t, CAP)
            .into_iter()
            .map(head_score)
            .collect();
        // root head is word 2, word 3 is a leaf non-head
        scores.swap(1, 2);
        let v = check_head_properties(&scores, &t);
        assert!(v
            .iter()
            .any(|v| v.property == HeadProperty::HeadDominatesSpan
                && v.span == (0, 3)
                && v.witness == 3));
    }

    #[test]
    fn uniform_scores_flag_ties() {
        let t = sample();
        let v = check_head_properties(&[0.5; 3], &t);
        assert!(v
            .iter()
            .any(|v| v.property == HeadProperty::HeadDominatesSpan && v.span == (0, 3)));
        assert!(v
            .iter()
            .all(|v| v.property == HeadProperty::HeadDominatesSpan));
    }

    #[test]
    fn prop2_holds_for_any_per_word_table() {
        let t = chain(6);
        let scores = [0.3, -1.0, 7.0, 0.0, 0.1, 2.0];
        assert!(check_head_properties(&scores, &t)
            .iter()
            .all(|v| v.property != HeadProperty::ConsistentAcrossSpans));
    }
}
