mod common;

use jointparse::eval::{corpus_evalb, evalb, head_level_accuracy, span_head_accuracy};
use jointparse::io::ptb::read_ptb;
use jointparse::tree::{JointNode, JointTree};
use jointparse::HeadLevel;

#[test]
fn worked_examples() {
    let r = common::metric_arithmetic();
    assert!(r.is_ok(), "{}", r.unwrap_err());
}

#[test]
fn corpus_scores_pool_counts() {
    let trees: Vec<_> = read_ptb(
        "(S (A (X a) (X b)) (B (X c)))\n(S (A (X a)) (B (X b)))\n(S (A (X a) (X b)) (X c))\n",
    )
    .unwrap()
    .into_iter()
    .map(|(_, t)| t)
    .collect();
    // pred 0 vs gold 2: S, A match of 3 predicted; pred 1 vs gold 1: all 3
    let s = corpus_evalb([(&trees[0], &trees[2]), (&trees[1], &trees[1])]).unwrap();
    assert_eq!(
        format!("{:.2} {:.2}", s.precision, s.recall),
        "83.33 100.00"
    );
    let single = evalb(&trees[0], &trees[2]).unwrap();
    assert_eq!(format!("{:.2}", single.precision), "66.67");
}

#[test]
fn head_level_and_span_head_accuracy() {
    let p = [
        HeadLevel::Level(1),
        HeadLevel::Level(2),
        HeadLevel::NoSpan,
        HeadLevel::Level(3),
    ];
    let g = [
        HeadLevel::Level(1),
        HeadLevel::Level(3),
        HeadLevel::NoSpan,
        HeadLevel::Level(3),
    ];
    assert_eq!(head_level_accuracy(&p, &g).unwrap(), 75.0);
    assert!(head_level_accuracy(&p[..2], &g).is_err());

    let a = JointNode::join("S", JointNode::leaf("X", 1), JointNode::leaf("∅", 2), true);
    let b = JointNode::join("S", JointNode::leaf("∅", 1), JointNode::leaf("X", 2), false);
    let labels = vec!["root".to_string(), "d".to_string()];
    let ta = JointTree::new(a, labels.clone()).unwrap();
    let tb = JointTree::new(b, labels).unwrap();
    assert_eq!(span_head_accuracy(&ta, &ta).unwrap(), 100.0);
    // the leaf spans agree, the root span does not
    let acc = span_head_accuracy(&ta, &tb).unwrap();
    assert!((acc - 200.0 / 3.0).abs() < 1e-9, "{}", acc);
}
