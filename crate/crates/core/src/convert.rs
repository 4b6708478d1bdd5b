//! Conversions between dependency, constituent and joint structures.

use crate::error::{Error, Result};
use crate::head_rules::HeadRuleTable;
use crate::tree::{ConstTree, DepTree, JointNode, JointTree, Node, Phrase, Sentence, EMPTY_LABEL};

/// Relation attached to the root word by [`const_to_dep`].
pub const ROOT_RELATION: &str = "root";

/// Phrase under construction; children need not be contiguous yet.
struct Draft {
    label: String,
    head_leaf: usize,
    children: Vec<Item>,
}

enum Item {
    Leaf(usize),
    Phrase(Draft, usize, usize),
}

impl Item {
    fn start(&self) -> usize {
        match self {
            Item::Leaf(p) => *p,
            Item::Phrase(_, s, _) => *s,
        }
    }

    fn end(&self) -> usize {
        match self {
            Item::Leaf(p) => p + 1,
            Item::Phrase(_, _, e) => *e,
        }
    }
}

fn draft(dep: &DepTree, dependents: &[Vec<usize>], h: usize) -> Draft {
    let mut children = Vec::with_capacity(dependents[h].len() + 1);
    let mut placed = false;
    for &d in &dependents[h] {
        if d > h && !placed {
            children.push(Item::Leaf(h - 1));
            placed = true;
        }
        children.push(Item::Phrase(draft(dep, dependents, d), 0, 0));
    }
    if !placed {
        children.push(Item::Leaf(h - 1));
    }
    Draft {
        label: dep.label(h).to_string(),
        head_leaf: h - 1,
        children,
    }
}

/// Makes `draft` contiguous around its head leaf. Returns the fixed phrase
/// with its span and the children that do not fit, for the parent to adopt.
fn fix(mut draft: Draft) -> (Item, Vec<Item>) {
    let mut items = Vec::new();
    for child in std::mem::take(&mut draft.children) {
        match child {
            Item::Leaf(p) => items.push(Item::Leaf(p)),
            Item::Phrase(inner, _, _) => {
                let (fixed, orphans) = fix(inner);
                items.push(fixed);
                items.extend(orphans);
            }
        }
    }
    items.sort_by_key(Item::start);
    let at = items
        .iter()
        .position(|c| matches!(c, Item::Leaf(p) if *p == draft.head_leaf))
        .expect("head leaf is a child of its own phrase");
    let mut lo = at;
    while lo > 0 && items[lo - 1].end() == items[lo].start() {
        lo -= 1;
    }
    let mut hi = at;
    while hi + 1 < items.len() && items[hi].end() == items[hi + 1].start() {
        hi += 1;
    }
    let mut orphans: Vec<Item> = items.drain(hi + 1..).collect();
    let kept: Vec<Item> = items.drain(lo..).collect();
    orphans.extend(items);
    let (start, end) = (kept[0].start(), kept[kept.len() - 1].end());
    draft.children = kept;
    (Item::Phrase(draft, start, end), orphans)
}

fn to_node(item: Item) -> Node {
    match item {
        Item::Leaf(p) => Node::Leaf(p),
        Item::Phrase(d, _, _) => Node::Phrase(Phrase::new(
            d.label,
            d.children.into_iter().map(to_node).collect(),
        )),
    }
}

/// Pseudo-constituent tree of a dependency tree.
///
/// Every word heads a phrase labeled with the relation of its incoming arc.
/// The phrase holds the phrases of its dependents in surface order with the
/// head leaf placed before the first right dependent. Dependents that break
/// contiguity (non-projective arcs) are lifted to the nearest ancestor whose
/// span can absorb them, so leaves always come out in surface order.
pub fn dep_to_const(dep: &DepTree) -> Result<ConstTree> {
    dep.validate()?;
    let n = dep.len();
    let mut dependents = vec![Vec::new(); n + 1];
    for m in 1..=n {
        dependents[dep.head(m)].push(m);
    }
    let root = draft(dep, &dependents, dep.root_word());
    let (fixed, orphans) = fix(root);
    debug_assert!(orphans.is_empty(), "the root phrase covers every word");
    ConstTree::new(to_node(fixed))
}

/// Reads the head function back off a pseudo-constituent tree: each phrase
/// is headed by its single direct leaf, and its label names the relation of
/// that word.
pub fn hfp_heads(tree: &ConstTree) -> Result<DepTree> {
    fn head_of(ph: &Phrase) -> Result<usize> {
        let mut leaves = ph.children.iter().filter_map(|c| match c {
            Node::Leaf(p) => Some(p + 1),
            Node::Phrase(_) => None,
        });
        match (leaves.next(), leaves.next()) {
            (Some(h), None) => Ok(h),
            _ => Err(Error::Inconsistent {
                start: ph.start,
                end: ph.end,
                message: "phrase needs exactly one direct leaf".into(),
            }),
        }
    }

    fn walk(
        ph: &Phrase,
        governor: usize,
        heads: &mut [usize],
        labels: &mut [String],
    ) -> Result<()> {
        let h = head_of(ph)?;
        heads[h - 1] = governor;
        labels[h - 1] = ph.label.clone();
        for c in &ph.children {
            if let Node::Phrase(inner) = c {
                walk(inner, h, heads, labels)?;
            }
        }
        Ok(())
    }

    let n = tree.len();
    let mut heads = vec![0; n];
    let mut labels = vec![String::new(); n];
    match tree.root() {
        Node::Leaf(_) => return Err(Error::InvalidTree("unlabeled single-word tree".into())),
        Node::Phrase(ph) => walk(ph, 0, &mut heads, &mut labels)?,
    }
    DepTree::new(heads, labels)
}

/// Dependency tree by head percolation over an n-ary constituent tree.
///
/// Children are matched by phrase label, or by part-of-speech tag for
/// words. Arcs into non-head children carry the child's label; the root
/// word gets [`ROOT_RELATION`].
pub fn const_to_dep(
    tree: &ConstTree,
    sentence: &Sentence,
    rules: &HeadRuleTable,
) -> Result<DepTree> {
    fn percolate(
        node: &Node,
        sentence: &Sentence,
        rules: &HeadRuleTable,
        heads: &mut [usize],
        labels: &mut [String],
    ) -> usize {
        let ph = match node {
            Node::Leaf(p) => return p + 1,
            Node::Phrase(ph) => ph,
        };
        let child_heads: Vec<usize> = ph
            .children
            .iter()
            .map(|c| percolate(c, sentence, rules, heads, labels))
            .collect();
        let child_labels: Vec<&str> = ph
            .children
            .iter()
            .map(|c| match c {
                Node::Leaf(p) => sentence.tag(p + 1),
                Node::Phrase(inner) => inner.label.as_str(),
            })
            .collect();
        let pick = rules.choose(&ph.label, &child_labels);
        let h = child_heads[pick];
        for (i, &m) in child_heads.iter().enumerate() {
            if i != pick {
                heads[m - 1] = h;
                labels[m - 1] = child_labels[i].to_string();
            }
        }
        h
    }

    if tree.len() != sentence.len() {
        return Err(Error::LengthMismatch {
            pred: tree.len(),
            gold: sentence.len(),
        });
    }
    if tree.contains_empty_label() {
        return Err(Error::InvalidTree(
            "empty label in a head-rule conversion".into(),
        ));
    }
    let n = tree.len();
    let mut heads = vec![0; n];
    let mut labels = vec![String::new(); n];
    let root = percolate(tree.root(), sentence, rules, &mut heads, &mut labels);
    heads[root - 1] = 0;
    labels[root - 1] = ROOT_RELATION.to_string();
    DepTree::new(heads, labels)
}

/// Joint tree from parallel constituent and dependency annotations of one
/// sentence.
///
/// The constituent tree is unary-collapsed and binarized; every span is
/// headed by its only word whose governor lies outside the span, and every
/// binary node must induce exactly the dependency arc between its two
/// daughters' heads.
pub fn joint_from_parallel(tree: &ConstTree, dep: &DepTree) -> Result<JointTree> {
    if tree.len() != dep.len() {
        return Err(Error::LengthMismatch {
            pred: tree.len(),
            gold: dep.len(),
        });
    }
    dep.validate()?;
    let chart_form = tree.collapse_unary()?.binarize();

    fn outward_head(dep: &DepTree, i: usize, j: usize) -> Result<usize> {
        let mut found = None;
        for w in i + 1..=j {
            let h = dep.head(w);
            if h <= i || h > j {
                if found.is_some() {
                    return Err(Error::Inconsistent {
                        start: i,
                        end: j,
                        message: "two words of the span attach outside it".into(),
                    });
                }
                found = Some(w);
            }
        }
        found.ok_or(Error::Inconsistent {
            start: i,
            end: j,
            message: "no word of the span attaches outside it".into(),
        })
    }

    fn build(node: &Node, dep: &DepTree) -> Result<JointNode> {
        let (i, j) = (node.start(), node.end());
        let head = outward_head(dep, i, j)?;
        match node {
            Node::Leaf(_) => Ok(JointNode::leaf(EMPTY_LABEL, head)),
            Node::Phrase(ph) => match ph.children.as_slice() {
                [Node::Leaf(_)] => Ok(JointNode::leaf(ph.label.clone(), head)),
                [l, r] => {
                    let left = build(l, dep)?;
                    let right = build(r, dep)?;
                    let head_left = left.head == head;
                    let modifier = if head_left { right.head } else { left.head };
                    if dep.head(modifier) != head {
                        return Err(Error::Inconsistent {
                            start: i,
                            end: j,
                            message: format!(
                                "daughters induce arc {} -> {}, the dependency tree has {} -> {}",
                                head,
                                modifier,
                                dep.head(modifier),
                                modifier
                            ),
                        });
                    }
                    Ok(JointNode::join(ph.label.clone(), left, right, head_left))
                }
                _ => Err(Error::InvalidTree(format!("({}, {}) is not binary", i, j))),
            },
        }
    }

    let root = build(chart_form.root(), dep)?;
    JointTree::new(root, dep.labels.clone())
}
