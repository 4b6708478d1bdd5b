//! Tree data model shared by decoders, converters and evaluators.
//!
//! Spans use 0-based fenceposts: a span `(i, j)` with `0 <= i < j <= n`
//! covers words `i + 1 ..= j`. Word indices are 1-based; index 0 is the
//! pseudo-root of dependency trees.

use std::fmt;

use crate::error::{Error, Result};

/// Reserved constituent label for nodes introduced by binarization.
pub const EMPTY_LABEL: &str = "∅";

/// Separator joining the labels of a collapsed unary chain.
pub const UNARY_SEPARATOR: char = '+';

/// A tokenized sentence with one part-of-speech tag per token.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sentence {
    tokens: Vec<String>,
    pos_tags: Vec<String>,
}

impl Sentence {
    pub fn new(tokens: Vec<String>, pos_tags: Vec<String>) -> Result<Self> {
        if tokens.is_empty() {
            return Err(Error::EmptySentence);
        }
        if tokens.len() != pos_tags.len() {
            return Err(Error::LengthMismatch {
                pred: pos_tags.len(),
                gold: tokens.len(),
            });
        }
        Ok(Sentence { tokens, pos_tags })
    }

    /// Sentence with tokens `w1 .. wn` and tag `_`, for structures that
    /// come from charts rather than text.
    pub fn placeholder(n: usize) -> Self {
        Sentence {
            tokens: (1..=n).map(|k| format!("w{}", k)).collect(),
            pos_tags: vec!["_".to_string(); n],
        }
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn tokens(&self) -> &[String] {
        &self.tokens
    }

    pub fn pos_tags(&self) -> &[String] {
        &self.pos_tags
    }

    /// Token of 1-based word `k`.
    pub fn token(&self, k: usize) -> &str {
        &self.tokens[k - 1]
    }

    /// Tag of 1-based word `k`.
    pub fn tag(&self, k: usize) -> &str {
        &self.pos_tags[k - 1]
    }
}

/// A labeled phrase over a contiguous span.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Phrase {
    pub label: String,
    pub start: usize,
    pub end: usize,
    pub children: Vec<Node>,
}

impl Phrase {
    /// Build a phrase whose span is derived from its children.
    ///
    /// Panics if `children` is empty.
    pub fn new(label: impl Into<String>, children: Vec<Node>) -> Self {
        assert!(!children.is_empty(), "phrase without children");
        let start = children.first().unwrap().start();
        let end = children.last().unwrap().end();
        Phrase {
            label: label.into(),
            start,
            end,
            children,
        }
    }
}

/// Constituent tree node. A leaf is the terminal covering the span
/// `(p, p + 1)`, i.e. word `p + 1`; its part-of-speech tag lives in the
/// [`Sentence`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    Leaf(usize),
    Phrase(Phrase),
}

impl Node {
    pub fn phrase(label: impl Into<String>, children: Vec<Node>) -> Node {
        Node::Phrase(Phrase::new(label, children))
    }

    /// Leaf for 1-based word `k`.
    pub fn word(k: usize) -> Node {
        Node::Leaf(k - 1)
    }

    pub fn start(&self) -> usize {
        match self {
            Node::Leaf(p) => *p,
            Node::Phrase(ph) => ph.start,
        }
    }

    pub fn end(&self) -> usize {
        match self {
            Node::Leaf(p) => p + 1,
            Node::Phrase(ph) => ph.end,
        }
    }

    pub fn label(&self) -> Option<&str> {
        match self {
            Node::Leaf(_) => None,
            Node::Phrase(ph) => Some(&ph.label),
        }
    }

    fn push_leaves(&self, out: &mut Vec<usize>) {
        match self {
            Node::Leaf(p) => out.push(*p),
            Node::Phrase(ph) => ph.children.iter().for_each(|c| c.push_leaves(out)),
        }
    }

    fn push_brackets<'a>(&'a self, out: &mut Vec<(&'a str, usize, usize)>) {
        if let Node::Phrase(ph) = self {
            out.push((&ph.label, ph.start, ph.end));
            ph.children.iter().for_each(|c| c.push_brackets(out));
        }
    }

    fn depth(&self) -> usize {
        match self {
            Node::Leaf(_) => 0,
            Node::Phrase(ph) => 1 + ph.children.iter().map(Node::depth).max().unwrap_or(0),
        }
    }
}

/// Rooted ordered tree of labeled spans.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConstTree {
    root: Node,
    n: usize,
}

impl ConstTree {
    /// Validate and wrap a root node.
    pub fn new(root: Node) -> Result<Self> {
        if root.start() != 0 {
            return Err(Error::InvalidTree(format!(
                "root starts at {}, not 0",
                root.start()
            )));
        }
        if root.label() == Some(EMPTY_LABEL) {
            return Err(Error::InvalidTree("empty label on the root".into()));
        }
        check_node(&root)?;
        let n = root.end();
        Ok(ConstTree { root, n })
    }

    pub fn root(&self) -> &Node {
        &self.root
    }

    pub fn into_root(self) -> Node {
        self.root
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Leaf positions in tree order.
    pub fn leaves(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.n);
        self.root.push_leaves(&mut out);
        out
    }

    /// Labeled spans of all phrases in pre-order (leaves excluded).
    pub fn brackets(&self) -> Vec<(&str, usize, usize)> {
        let mut out = Vec::new();
        self.root.push_brackets(&mut out);
        out
    }

    /// Number of phrase levels on the longest root-to-leaf path.
    pub fn depth(&self) -> usize {
        self.root.depth()
    }

    pub fn contains_empty_label(&self) -> bool {
        self.brackets().iter().any(|(l, _, _)| *l == EMPTY_LABEL)
    }

    /// Right-branching binarization: a phrase `(A c1 c2 .. cm)` with `m > 2`
    /// becomes `(A c1 (∅ c2 .. cm))`, applied recursively.
    pub fn binarize(&self) -> ConstTree {
        ConstTree {
            root: binarize_node(&self.root),
            n: self.n,
        }
    }

    /// Remove every `∅` phrase by splicing its children into its parent.
    pub fn debinarize(&self) -> Result<ConstTree> {
        if self.root.label() == Some(EMPTY_LABEL) {
            return Err(Error::InvalidTree("empty label on the root".into()));
        }
        let mut spliced = debinarize_node(&self.root);
        debug_assert_eq!(spliced.len(), 1);
        Ok(ConstTree {
            root: spliced.pop().unwrap(),
            n: self.n,
        })
    }

    /// Merge chains of single-child phrases into one phrase labeled with
    /// the chain labels joined by `+`.
    pub fn collapse_unary(&self) -> Result<ConstTree> {
        Ok(ConstTree {
            root: collapse_node(&self.root)?,
            n: self.n,
        })
    }

    /// Inverse of [`ConstTree::collapse_unary`].
    pub fn expand_unary(&self) -> ConstTree {
        ConstTree {
            root: expand_node(&self.root),
            n: self.n,
        }
    }
}

fn check_node(node: &Node) -> Result<()> {
    if let Node::Phrase(ph) = node {
        if ph.children.is_empty() {
            return Err(Error::InvalidTree(format!(
                "phrase {} ({}, {}) has no children",
                ph.label, ph.start, ph.end
            )));
        }
        if ph.label.is_empty() {
            return Err(Error::InvalidTree("empty phrase label".into()));
        }
        let mut pos = ph.start;
        for child in &ph.children {
            if child.start() != pos {
                return Err(Error::InvalidTree(format!(
                    "children of {} ({}, {}) are not contiguous at {}",
                    ph.label, ph.start, ph.end, pos
                )));
            }
            pos = child.end();
            check_node(child)?;
        }
        if pos != ph.end {
            return Err(Error::InvalidTree(format!(
                "children of {} do not cover ({}, {})",
                ph.label, ph.start, ph.end
            )));
        }
    }
    Ok(())
}

fn binarize_node(node: &Node) -> Node {
    match node {
        Node::Leaf(p) => Node::Leaf(*p),
        Node::Phrase(ph) => {
            let children: Vec<Node> = ph.children.iter().map(binarize_node).collect();
            Node::Phrase(Phrase {
                label: ph.label.clone(),
                start: ph.start,
                end: ph.end,
                children: right_branch(children),
            })
        }
    }
}

fn right_branch(mut children: Vec<Node>) -> Vec<Node> {
    if children.len() <= 2 {
        return children;
    }
    let rest = children.split_off(1);
    let inner = right_branch(rest);
    children.push(Node::phrase(EMPTY_LABEL, inner));
    children
}

fn debinarize_node(node: &Node) -> Vec<Node> {
    match node {
        Node::Leaf(p) => vec![Node::Leaf(*p)],
        Node::Phrase(ph) => {
            let children: Vec<Node> = ph.children.iter().flat_map(debinarize_node).collect();
            if ph.label == EMPTY_LABEL {
                children
            } else {
                vec![Node::Phrase(Phrase {
                    label: ph.label.clone(),
                    start: ph.start,
                    end: ph.end,
                    children,
                })]
            }
        }
    }
}

fn collapse_node(node: &Node) -> Result<Node> {
    match node {
        Node::Leaf(p) => Ok(Node::Leaf(*p)),
        Node::Phrase(ph) => {
            if ph.label.contains(UNARY_SEPARATOR) {
                return Err(Error::LabelSeparator(ph.label.clone()));
            }
            let mut label = ph.label.clone();
            let mut current = ph;
            while let [Node::Phrase(only)] = current.children.as_slice() {
                if only.label.contains(UNARY_SEPARATOR) {
                    return Err(Error::LabelSeparator(only.label.clone()));
                }
                label.push(UNARY_SEPARATOR);
                label.push_str(&only.label);
                current = only;
            }
            let children = current
                .children
                .iter()
                .map(collapse_node)
                .collect::<Result<Vec<_>>>()?;
            Ok(Node::Phrase(Phrase {
                label,
                start: ph.start,
                end: ph.end,
                children,
            }))
        }
    }
}

fn expand_node(node: &Node) -> Node {
    match node {
        Node::Leaf(p) => Node::Leaf(*p),
        Node::Phrase(ph) => {
            let mut inner: Vec<Node> = ph.children.iter().map(expand_node).collect();
            let labels: Vec<&str> = ph.label.split(UNARY_SEPARATOR).collect();
            for label in labels.iter().skip(1).rev() {
                inner = vec![Node::Phrase(Phrase {
                    label: label.to_string(),
                    start: ph.start,
                    end: ph.end,
                    children: inner,
                })];
            }
            Node::Phrase(Phrase {
                label: labels[0].to_string(),
                start: ph.start,
                end: ph.end,
                children: inner,
            })
        }
    }
}

/// Head-modifier dependency tree over words `1..=n`.
///
/// `heads[m - 1]` is the governor of word `m` (0 for the root word) and
/// `labels[m - 1]` the relation of that arc.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DepTree {
    pub heads: Vec<usize>,
    pub labels: Vec<String>,
}

impl DepTree {
    pub fn new(heads: Vec<usize>, labels: Vec<String>) -> Result<Self> {
        let tree = DepTree { heads, labels };
        tree.validate()?;
        Ok(tree)
    }

    /// Tree with every relation labeled `_`.
    pub fn unlabeled(heads: Vec<usize>) -> Result<Self> {
        let n = heads.len();
        Self::new(heads, vec!["_".to_string(); n])
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.heads.len();
        if n == 0 {
            return Err(Error::EmptySentence);
        }
        if self.labels.len() != n {
            return Err(Error::LengthMismatch {
                pred: self.labels.len(),
                gold: n,
            });
        }
        let mut roots = 0;
        for (idx, &h) in self.heads.iter().enumerate() {
            let m = idx + 1;
            if h > n {
                return Err(Error::InvalidTree(format!(
                    "head {} of word {} out of range",
                    h, m
                )));
            }
            if h == m {
                return Err(Error::InvalidTree(format!("self-arc on word {}", m)));
            }
            if h == 0 {
                roots += 1;
            }
        }
        if roots != 1 {
            return Err(Error::InvalidTree(format!(
                "{} words attached to the root, expected 1",
                roots
            )));
        }
        if let Some(w) = find_cycle(&self.heads) {
            return Err(Error::Cyclic(w));
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.heads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.heads.is_empty()
    }

    pub fn head(&self, m: usize) -> usize {
        self.heads[m - 1]
    }

    pub fn label(&self, m: usize) -> &str {
        &self.labels[m - 1]
    }

    /// The word attached to the pseudo-root.
    pub fn root_word(&self) -> usize {
        self.heads
            .iter()
            .position(|&h| h == 0)
            .map(|i| i + 1)
            .unwrap()
    }

    /// Dependents of `h` (0 for the pseudo-root) in surface order.
    pub fn dependents(&self, h: usize) -> Vec<usize> {
        (1..=self.len()).filter(|&m| self.head(m) == h).collect()
    }

    /// True when no two arcs cross, the root arc included.
    pub fn is_projective(&self) -> bool {
        let n = self.len();
        for m in 1..=n {
            let h = self.head(m);
            let (lo, hi) = if h < m { (h, m) } else { (m, h) };
            for w in lo + 1..hi {
                if !self.dominates(h, w) {
                    return false;
                }
            }
        }
        true
    }

    /// Whether `ancestor` (0 allowed) dominates word `w` reflexively.
    pub fn dominates(&self, ancestor: usize, mut w: usize) -> bool {
        loop {
            if w == ancestor {
                return true;
            }
            if w == 0 {
                return false;
            }
            w = self.head(w);
        }
    }
}

/// Returns a word on a cycle of the head function, if any. Heads are
/// assumed in range.
pub(crate) fn find_cycle(heads: &[usize]) -> Option<usize> {
    let n = heads.len();
    // 0 = unvisited, 1 = on current path, 2 = reaches root
    let mut state = vec![0u8; n + 1];
    state[0] = 2;
    for start in 1..=n {
        let mut path = Vec::new();
        let mut w = start;
        while state[w] == 0 {
            state[w] = 1;
            path.push(w);
            w = heads[w - 1];
        }
        if state[w] == 1 {
            return Some(w);
        }
        for p in path {
            state[p] = 2;
        }
    }
    None
}

/// Node of a [`JointTree`]: a binarized chart cell with a head word.
///
/// Labels are chart labels: collapsed unary chains use `+`, and `∅` marks
/// either a binarization node or a word cell with no phrase above it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JointNode {
    pub label: String,
    pub start: usize,
    pub end: usize,
    /// 1-based head word, inside `start + 1 ..= end`.
    pub head: usize,
    pub children: Option<Box<(JointNode, JointNode)>>,
}

impl JointNode {
    pub fn leaf(label: impl Into<String>, word: usize) -> Self {
        JointNode {
            label: label.into(),
            start: word - 1,
            end: word,
            head: word,
            children: None,
        }
    }

    /// Join two adjacent cells; the head comes from the left child when
    /// `head_left`, otherwise from the right.
    pub fn join(
        label: impl Into<String>,
        left: JointNode,
        right: JointNode,
        head_left: bool,
    ) -> Self {
        assert_eq!(left.end, right.start, "cells are not adjacent");
        JointNode {
            label: label.into(),
            start: left.start,
            end: right.end,
            head: if head_left { left.head } else { right.head },
            children: Some(Box::new((left, right))),
        }
    }

    pub fn span(&self) -> (usize, usize) {
        (self.start, self.end)
    }

    pub fn is_empty_label(&self) -> bool {
        self.label == EMPTY_LABEL
    }

    /// `(head child, modifier child)` of an internal node.
    pub fn head_and_modifier(&self) -> Option<(&JointNode, &JointNode)> {
        self.children.as_ref().map(|c| {
            if c.0.head == self.head {
                (&c.0, &c.1)
            } else {
                (&c.1, &c.0)
            }
        })
    }

    /// Pre-order traversal with 1-based levels (root = 1).
    pub fn walk<'a>(&'a self, level: usize, f: &mut impl FnMut(&'a JointNode, usize)) {
        f(self, level);
        if let Some(c) = &self.children {
            c.0.walk(level + 1, f);
            c.1.walk(level + 1, f);
        }
    }

    fn to_const_node(&self) -> Node {
        match &self.children {
            None => {
                if self.is_empty_label() {
                    Node::Leaf(self.start)
                } else {
                    Node::phrase(self.label.clone(), vec![Node::Leaf(self.start)])
                }
            }
            Some(c) => Node::phrase(
                self.label.clone(),
                vec![c.0.to_const_node(), c.1.to_const_node()],
            ),
        }
    }
}

/// Binarized constituent tree whose nodes carry HFP-consistent head words,
/// plus the relation label of each induced arc.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JointTree {
    pub root: JointNode,
    /// `dep_labels[m - 1]` labels the arc into word `m`.
    pub dep_labels: Vec<String>,
}

impl JointTree {
    pub fn new(root: JointNode, dep_labels: Vec<String>) -> Result<Self> {
        let tree = JointTree { root, dep_labels };
        tree.validate()?;
        Ok(tree)
    }

    pub fn len(&self) -> usize {
        self.root.end
    }

    pub fn is_empty(&self) -> bool {
        self.root.end == 0
    }

    pub fn validate(&self) -> Result<()> {
        if self.root.start != 0 || self.root.end == 0 {
            return Err(Error::InvalidTree(
                "root must span (0, n) with n >= 1".into(),
            ));
        }
        if self.root.is_empty_label() {
            return Err(Error::InvalidTree("empty label on the root".into()));
        }
        if self.dep_labels.len() != self.len() {
            return Err(Error::LengthMismatch {
                pred: self.dep_labels.len(),
                gold: self.len(),
            });
        }
        check_joint(&self.root)
    }

    /// Governor of every word: the induced arcs plus the root arc.
    pub fn heads(&self) -> Vec<usize> {
        let mut heads = vec![0; self.len()];
        self.root.walk(1, &mut |node, _| {
            if let Some((h, m)) = node.head_and_modifier() {
                heads[m.head - 1] = h.head;
            }
        });
        heads
    }

    pub fn dep_tree(&self) -> DepTree {
        DepTree {
            heads: self.heads(),
            labels: self.dep_labels.clone(),
        }
    }

    /// Binarized constituent tree in chart form (`∅` phrases kept).
    pub fn binarized_const_tree(&self) -> ConstTree {
        let root = self.root.to_const_node();
        let n = root.end();
        ConstTree { root, n }
    }

    /// Debinarized, unary-expanded constituent tree.
    pub fn const_tree(&self) -> ConstTree {
        self.binarized_const_tree()
            .debinarize()
            .expect("root label is never empty")
            .expand_unary()
    }

    /// All nodes in pre-order with their levels.
    pub fn nodes(&self) -> Vec<(&JointNode, usize)> {
        let mut out = Vec::new();
        self.root
            .walk(1, &mut |node, level| out.push((node, level)));
        out
    }

    /// Whether a joint decoder can produce this tree: every head child and
    /// the root carry a non-empty label.
    pub fn is_decodable(&self) -> bool {
        let mut ok = !self.root.is_empty_label();
        self.root.walk(1, &mut |node, _| {
            if let Some((h, _)) = node.head_and_modifier() {
                ok &= !h.is_empty_label();
            }
        });
        ok
    }
}

fn check_joint(node: &JointNode) -> Result<()> {
    if node.head <= node.start || node.head > node.end {
        return Err(Error::InvalidTree(format!(
            "head {} outside span ({}, {})",
            node.head, node.start, node.end
        )));
    }
    match &node.children {
        None => {
            if node.end != node.start + 1 {
                return Err(Error::InvalidTree(format!(
                    "childless node spans ({}, {})",
                    node.start, node.end
                )));
            }
        }
        Some(c) => {
            if c.0.start != node.start || c.0.end != c.1.start || c.1.end != node.end {
                return Err(Error::InvalidTree(format!(
                    "children do not partition ({}, {})",
                    node.start, node.end
                )));
            }
            if (c.0.head == node.head) == (c.1.head == node.head) {
                return Err(Error::InvalidTree(format!(
                    "head of ({}, {}) is not shared with exactly one child",
                    node.start, node.end
                )));
            }
            check_joint(&c.0)?;
            check_joint(&c.1)?;
        }
    }
    Ok(())
}

impl fmt::Display for JointNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.children {
            None => write!(f, "({}@{} w{})", self.label, self.head, self.end),
            Some(c) => write!(f, "({}@{} {} {})", self.label, self.head, c.0, c.1),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(k: usize) -> Node {
        Node::word(k)
    }

    fn tree(root: Node) -> ConstTree {
        ConstTree::new(root).unwrap()
    }

    #[test]
    fn binarize_three_children() {
        let t = tree(Node::phrase("A", vec![w(1), w(2), w(3)]));
        let b = t.binarize();
        let expected = Node::phrase("A", vec![w(1), Node::phrase(EMPTY_LABEL, vec![w(2), w(3)])]);
        assert_eq!(b.root(), &expected);
        assert_eq!(b.debinarize().unwrap(), t);
    }

    #[test]
    fn binarize_binary_is_identity() {
        let t = tree(Node::phrase(
            "S",
            vec![
                Node::phrase("NP", vec![w(1), w(2)]),
                Node::phrase("VP", vec![w(3)]),
            ],
        ));
        assert_eq!(t.binarize(), t);
        assert_eq!(t.debinarize().unwrap(), t);
    }

    #[test]
    fn debinarize_rejects_empty_root() {
        let t = ConstTree {
            root: Node::phrase(EMPTY_LABEL, vec![w(1), w(2)]),
            n: 2,
        };
        assert!(t.debinarize().is_err());
        assert!(ConstTree::new(Node::phrase(EMPTY_LABEL, vec![w(1)])).is_err());
    }

    #[test]
    fn collapse_and_expand_unary_chain() {
        let t = tree(Node::phrase(
            "S",
            vec![Node::phrase(
                "VP",
                vec![w(1), Node::phrase("NP", vec![w(2)])],
            )],
        ));
        let c = t.collapse_unary().unwrap();
        assert_eq!(
            c.root(),
            &Node::phrase("S+VP", vec![w(1), Node::phrase("NP", vec![w(2)])])
        );
        assert_eq!(c.expand_unary(), t);
    }

    #[test]
    fn collapse_without_chains_is_identity() {
        let t = tree(Node::phrase(
            "S",
            vec![w(1), Node::phrase("NP", vec![w(2)])],
        ));
        assert_eq!(t.collapse_unary().unwrap(), t);
    }

    #[test]
    fn collapse_rejects_separator() {
        let t = tree(Node::phrase("S+X", vec![w(1), w(2)]));
        assert!(matches!(t.collapse_unary(), Err(Error::LabelSeparator(_))));
    }

    #[test]
    fn const_tree_validation() {
        assert!(ConstTree::new(Node::phrase("S", vec![w(1), w(3)])).is_err());
        assert!(ConstTree::new(Node::phrase("S", vec![w(2)])).is_err());
        let t = tree(Node::phrase("S", vec![w(1), w(2)]));
        assert_eq!(t.len(), 2);
        assert_eq!(t.leaves(), vec![0, 1]);
    }

    #[test]
    fn dep_tree_validation() {
        assert!(DepTree::unlabeled(vec![2, 0, 2]).is_ok());
        assert!(DepTree::unlabeled(vec![0, 0]).is_err());
        assert!(DepTree::unlabeled(vec![2, 1, 0]).is_err());
        assert!(DepTree::unlabeled(vec![1]).is_err());
        assert!(DepTree::unlabeled(vec![]).is_err());
        assert!(matches!(
            DepTree::unlabeled(vec![0, 3, 2]),
            Err(Error::Cyclic(_))
        ));
    }

    #[test]
    fn projectivity() {
        assert!(DepTree::unlabeled(vec![2, 0, 2]).unwrap().is_projective());
        // 4 -> 2 crosses 1 -> 3
        assert!(!DepTree::unlabeled(vec![0, 4, 1, 1])
            .unwrap()
            .is_projective());
        // root arc 0 -> 3 is crossed by 4 -> 1
        assert!(!DepTree::unlabeled(vec![4, 3, 0, 3])
            .unwrap()
            .is_projective());
    }

    fn sample_joint() -> JointTree {
        // (S@2 (NP@1 w1) (∅@2 (VP@2 w2) (∅@3 w3)))
        let right = JointNode::join(
            EMPTY_LABEL,
            JointNode::leaf("VP", 2),
            JointNode::leaf(EMPTY_LABEL, 3),
            true,
        );
        let root = JointNode::join("S", JointNode::leaf("NP", 1), right, false);
        JointTree::new(root, vec!["nsubj".into(), "root".into(), "obj".into()]).unwrap()
    }

    #[test]
    fn joint_tree_induced_arcs() {
        let j = sample_joint();
        assert_eq!(j.heads(), vec![2, 0, 2]);
        assert!(j.dep_tree().is_projective());
        // the ∅ node (1, 3) is the head daughter of the root
        assert!(!j.is_decodable());
        let c = j.const_tree();
        assert_eq!(
            c.root(),
            &Node::phrase(
                "S",
                vec![
                    Node::phrase("NP", vec![w(1)]),
                    Node::phrase("VP", vec![w(2)]),
                    w(3)
                ]
            )
        );
        assert_eq!(
            c.binarize().collapse_unary().unwrap(),
            j.binarized_const_tree()
        );
    }

    #[test]
    fn joint_tree_rejects_hfp_violation() {
        let mut bad = JointNode::join("S", JointNode::leaf("A", 1), JointNode::leaf("B", 2), true);
        bad.head = 2;
        bad.children.as_mut().unwrap().1.head = 2;
        bad.children.as_mut().unwrap().0.head = 2;
        assert!(JointTree::new(bad, vec!["a".into(), "b".into()]).is_err());
        let empty_root = JointNode::leaf(EMPTY_LABEL, 1);
        assert!(JointTree::new(empty_root, vec!["root".into()]).is_err());
    }
}
