mod common;

use jointparse::chart::{oracle_chart, CAP};
use jointparse::heads::{check_head_properties, gold_head_levels, head_score, HeadProperty};
use jointparse::synth;
use jointparse::tree::{JointNode, JointTree};
use jointparse::{h3n_decode, hpsg_decode, HeadLevel};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn gold_trees_are_recovered() {
    let r = common::gold_recovery(500);
    assert!(r.is_ok(), "{}", r.unwrap_err());
}

#[test]
fn gold_levels_satisfy_head_properties() {
    let r = common::head_properties(6);
    assert!(r.is_ok(), "{}", r.unwrap_err());
}

#[test]
fn headed_tree_counts() {
    // Catalan(n-1) shapes times 2^(n-1) head choices
    let counts: Vec<usize> = (1..=5)
        .map(|n| common::all_headed_trees(0, n).len())
        .collect();
    assert_eq!(counts, vec![1, 2, 8, 40, 224]);
}

fn chain() -> JointTree {
    // word 1 heads everything: ((1 2) 3)
    let inner = JointNode::join("A", JointNode::leaf("X", 1), JointNode::leaf("∅", 2), true);
    let root = JointNode::join("S", inner, JointNode::leaf("∅", 3), true);
    JointTree::new(root, vec!["root".into(), "d".into(), "d".into()]).unwrap()
}

#[test]
fn levels_follow_attachment_height() {
    let levels = gold_head_levels(&chain(), CAP);
    assert_eq!(
        levels,
        vec![
            HeadLevel::Level(1),
            HeadLevel::Level(3),
            HeadLevel::Level(2)
        ]
    );
}

#[test]
fn sub_span_violation_is_reported() {
    // word 2 outranks word 1 inside (0, 2), where word 1 is the head
    let t = chain();
    let v = check_head_properties(&[1.0, 2.0, 0.0], &t);
    assert!(v.iter().any(|v| v.span == (0, 2)));
    assert!(v
        .iter()
        .any(|v| v.property == HeadProperty::HeadDominatesSpan));
}

#[test]
fn h3n_follows_wrong_levels() {
    let gold = chain();
    let mut c = oracle_chart(&gold, 1.0).unwrap();
    c.set_head_levels(&[
        HeadLevel::Level(3),
        HeadLevel::Level(1),
        HeadLevel::Level(2),
    ]);
    let wrong = h3n_decode(&c).unwrap();
    assert_eq!(wrong.joint.as_ref().unwrap().root.head, 2);
    assert!(wrong.score < hpsg_decode(&c).unwrap().score);
}

#[test]
fn head_score_is_monotone() {
    let s: Vec<f64> = (1..=CAP).map(|l| head_score(HeadLevel::Level(l))).collect();
    assert!(s.windows(2).all(|w| w[0] > w[1]));
    assert!(head_score(HeadLevel::NoSpan) < s[s.len() - 1]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn any_positive_margin_recovers(seed in any::<u64>(), n in 1usize..=12, margin in 0.01f64..4.0) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let gold = synth::random_joint_tree(&mut rng, n);
        let c = oracle_chart(&gold, margin).unwrap();
        prop_assert_eq!(h3n_decode(&c).unwrap().joint.unwrap(), gold.clone());
        prop_assert_eq!(hpsg_decode(&c).unwrap().joint.unwrap(), gold);
    }
}
