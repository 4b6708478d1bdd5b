//! Seeded random structures for tests, examples and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::tree::{ConstTree, DepTree, JointNode, JointTree, Node, Sentence, EMPTY_LABEL};

/// Constituent labels used by the generators; `∅` first, as charts expect.
pub const CONST_LABELS: [&str; 8] = [EMPTY_LABEL, "S", "NP", "VP", "PP", "ADJP", "S+VP", "NP+NN"];

/// Relation labels used by the generators; `root` only labels the root word.
pub const DEP_LABELS: [&str; 6] = ["root", "nsubj", "obj", "amod", "case", "punct"];

const TAGS: [&str; 9] = ["NN", "VB", "DT", "JJ", "IN", "PRP", ",", ".", "``"];
const RAW_LABELS: [&str; 6] = ["S", "NP", "VP", "PP", "ADJP", "SBAR"];

pub fn const_labels() -> Vec<String> {
    CONST_LABELS.iter().map(|s| s.to_string()).collect()
}

pub fn dep_labels() -> Vec<String> {
    DEP_LABELS.iter().map(|s| s.to_string()).collect()
}

fn pick<'a, R: Rng>(rng: &mut R, items: &'a [&'a str]) -> &'a str {
    items.choose(rng).expect("non-empty label set")
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Role {
    Head,
    LeftModifier,
    RightModifier,
}

fn joint_node<R: Rng>(rng: &mut R, i: usize, j: usize, role: Role) -> JointNode {
    let real = &CONST_LABELS[1..];
    // ∅ only where a decoder may put it and where debinarization can undo
    // it: modifier word cells, and internal modifiers on the right
    let may_be_empty = match role {
        Role::Head => false,
        Role::LeftModifier => j == i + 1,
        Role::RightModifier => true,
    };
    let label = if may_be_empty && rng.gen_bool(0.3) {
        EMPTY_LABEL
    } else {
        pick(rng, real)
    };
    if j == i + 1 {
        return JointNode::leaf(label, j);
    }
    let k = rng.gen_range(i + 1..j);
    let head_left = rng.gen_bool(0.5);
    let (lr, rr) = if head_left {
        (Role::Head, Role::RightModifier)
    } else {
        (Role::LeftModifier, Role::Head)
    };
    let left = joint_node(rng, i, k, lr);
    let right = joint_node(rng, k, j, rr);
    JointNode::join(label, left, right, head_left)
}

/// Random joint tree over `n` words that every joint decoder can output
/// and that survives debinarization and unary expansion unchanged.
pub fn random_joint_tree<R: Rng>(rng: &mut R, n: usize) -> JointTree {
    assert!(n >= 1);
    let root = joint_node(rng, 0, n, Role::Head);
    let root_word = root.head;
    let dep_labels = (1..=n)
        .map(|w| {
            if w == root_word {
                DEP_LABELS[0].to_string()
            } else {
                pick(rng, &DEP_LABELS[1..]).to_string()
            }
        })
        .collect();
    JointTree::new(root, dep_labels).expect("generator builds valid trees")
}

/// Random projective tree: the dependency tree of a random joint tree.
pub fn random_projective_dep<R: Rng>(rng: &mut R, n: usize) -> DepTree {
    random_joint_tree(rng, n).dep_tree()
}

/// Random single-root tree: words attach, in a random order, to a random
/// word attached earlier.
pub fn random_dep_tree<R: Rng>(rng: &mut R, n: usize) -> DepTree {
    assert!(n >= 1);
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let mut heads = vec![0; n];
    let mut labels = vec![DEP_LABELS[0].to_string(); n];
    for idx in 1..n {
        let m = order[idx];
        heads[m - 1] = order[rng.gen_range(0..idx)];
        labels[m - 1] = pick(rng, &DEP_LABELS[1..]).to_string();
    }
    DepTree::new(heads, labels).expect("generator builds valid trees")
}

/// Random non-projective tree by rejection; needs `n >= 4`.
pub fn random_nonprojective_dep<R: Rng>(rng: &mut R, n: usize) -> DepTree {
    assert!(
        n >= 4,
        "no non-projective single-root tree has fewer than 4 words"
    );
    loop {
        let t = random_dep_tree(rng, n);
        if !t.is_projective() {
            return t;
        }
    }
}

fn const_node<R: Rng>(rng: &mut R, i: usize, j: usize, root: bool) -> Node {
    let node = if j == i + 1 {
        if !root && rng.gen_bool(0.5) {
            return Node::Leaf(i);
        }
        Node::phrase(pick(rng, &RAW_LABELS), vec![Node::Leaf(i)])
    } else {
        let parts = rng.gen_range(2..=(j - i).min(4));
        let mut cuts: Vec<usize> = (i + 1..j).collect();
        cuts.shuffle(rng);
        let mut cuts = cuts[..parts - 1].to_vec();
        cuts.sort_unstable();
        let mut children = Vec::with_capacity(parts);
        let mut start = i;
        for end in cuts.into_iter().chain(std::iter::once(j)) {
            children.push(const_node(rng, start, end, false));
            start = end;
        }
        Node::phrase(pick(rng, &RAW_LABELS), children)
    };
    // occasional unary chain
    if rng.gen_bool(0.1) {
        Node::phrase(pick(rng, &RAW_LABELS), vec![node])
    } else {
        node
    }
}

/// Random n-ary constituent tree with unary chains and no `∅` or `+`.
pub fn random_const_tree<R: Rng>(rng: &mut R, n: usize) -> ConstTree {
    assert!(n >= 1);
    ConstTree::new(const_node(rng, 0, n, true)).expect("generator builds valid trees")
}

pub fn random_sentence<R: Rng>(rng: &mut R, n: usize) -> Sentence {
    let tokens = (0..n)
        .map(|_| {
            let len = rng.gen_range(1..=6);
            (0..len)
                .map(|_| rng.gen_range(b'a'..=b'z') as char)
                .collect()
        })
        .collect();
    let tags = (0..n).map(|_| pick(rng, &TAGS).to_string()).collect();
    Sentence::new(tokens, tags).expect("n >= 1")
}
