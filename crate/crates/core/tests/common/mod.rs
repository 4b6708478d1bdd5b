//! Checks shared by the integration tests and the acceptance runner. Each
//! returns a one-line summary on success and the first failure otherwise.

#![allow(dead_code)]

use std::time::{Duration, Instant};

use jointparse::bench::{run_bench, BenchConfig, Bucket};
use jointparse::chart::{oracle_chart, random_chart, read_charts, write_charts, ScoreChart, CAP};
use jointparse::convert::{dep_to_const, hfp_heads, joint_from_parallel};
use jointparse::decode::brute::{brute_force_const, brute_force_dep, brute_force_joint};
use jointparse::decode::objective::{score_binarized, score_dep, score_joint};
use jointparse::decode::{
    cky_decode, eisner_decode, h3n_decode, hpsg_decode, mst_decode, Algorithm,
};
use jointparse::eval::{
    attachment_counts, attachment_scores, bracket_counts, default_punct_tags, evalb,
    head_level_accuracy, AttachmentCounts, BracketCounts,
};
use jointparse::heads::{check_head_properties, gold_head_levels, head_score};
use jointparse::io::{conll, ptb};
use jointparse::synth;
use jointparse::tree::{ConstTree, DepTree, JointNode, JointTree, Node, Sentence};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn chart(n: usize, seed: u64) -> ScoreChart {
    random_chart(n, &synth::const_labels(), &synth::dep_labels(), seed).unwrap()
}

fn close(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9
}

fn within(started: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = started.elapsed();
    ensure!(
        took <= limit,
        "{} took {:.1?}, limit {:?}",
        what,
        took,
        limit
    );
    Ok(())
}

pub fn oracle_equivalence(charts: u64) -> Outcome {
    let started = Instant::now();
    for seed in 0..charts {
        let c = chart(1 + (seed % 6) as usize, seed);
        let fast = cky_decode(&c).map_err(|e| e.to_string())?;
        let slow = brute_force_const(&c).map_err(|e| e.to_string())?;
        ensure!(
            fast.score == slow.score,
            "cky seed {}: {} vs {}",
            seed,
            fast.score,
            slow.score
        );
        let rescored = score_binarized(&c, fast.binarized.as_ref().unwrap()).unwrap();
        ensure!(
            close(rescored, fast.score),
            "cky seed {}: rescored {}",
            seed,
            rescored
        );

        let c = chart(1 + (seed % 7) as usize, 10_000 + seed);
        let fast = eisner_decode(&c).map_err(|e| e.to_string())?;
        let slow = brute_force_dep(&c, true).map_err(|e| e.to_string())?;
        ensure!(
            fast.score == slow.score,
            "eisner seed {}: {} vs {}",
            seed,
            fast.score,
            slow.score
        );
        let tree = fast.dep_tree.unwrap();
        ensure!(
            tree.validate().is_ok() && tree.is_projective(),
            "eisner seed {}: bad tree",
            seed
        );
        ensure!(
            close(score_dep(&c, &tree), fast.score),
            "eisner seed {}: rescore",
            seed
        );

        let c = chart(1 + (seed % 6) as usize, 20_000 + seed);
        let fast = mst_decode(&c).map_err(|e| e.to_string())?;
        let slow = brute_force_dep(&c, false).map_err(|e| e.to_string())?;
        ensure!(
            fast.score == slow.score,
            "mst seed {}: {} vs {}",
            seed,
            fast.score,
            slow.score
        );
        let tree = fast.dep_tree.unwrap();
        ensure!(tree.validate().is_ok(), "mst seed {}: bad tree", seed);
        ensure!(
            close(score_dep(&c, &tree), fast.score),
            "mst seed {}: rescore",
            seed
        );

        let c = chart(1 + (seed % 5) as usize, 30_000 + seed);
        let fast = hpsg_decode(&c).map_err(|e| e.to_string())?;
        let slow = brute_force_joint(&c).map_err(|e| e.to_string())?;
        ensure!(
            fast.score == slow.score,
            "hpsg seed {}: {} vs {}",
            seed,
            fast.score,
            slow.score
        );
        let joint = fast.joint.unwrap();
        ensure!(
            joint.is_decodable(),
            "hpsg seed {}: undecodable output",
            seed
        );
        ensure!(
            joint.dep_tree().is_projective(),
            "hpsg seed {}: non-projective",
            seed
        );
        ensure!(
            close(score_joint(&c, &joint).unwrap(), fast.score),
            "hpsg seed {}: rescore",
            seed
        );
    }
    within(started, Duration::from_secs(300), "oracle equivalence")?;
    Ok(format!(
        "{} charts per decoder, exact scores ({:.1?})",
        charts,
        started.elapsed()
    ))
}

fn gold_tree(seed: u64, max_len: usize) -> JointTree {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.gen_range(1..=max_len);
    synth::random_joint_tree(&mut rng, n)
}

pub fn gold_recovery(trees: u64) -> Outcome {
    let started = Instant::now();
    let mut brackets = BracketCounts::default();
    let mut arcs = AttachmentCounts::default();
    let (mut pred_levels, mut gold_levels) = (Vec::new(), Vec::new());
    let punct = default_punct_tags();
    for seed in 0..trees {
        let gold = gold_tree(seed, 10);
        let c = oracle_chart(&gold, 1.0).map_err(|e| e.to_string())?;
        let gold_const = gold.const_tree();
        let gold_dep = gold.dep_tree();
        let tags = vec!["_".to_string(); gold.len()];
        for algo in [Algorithm::Hpsg, Algorithm::H3n] {
            let r = algo.decode(&c).map_err(|e| e.to_string())?;
            let joint = r.joint.unwrap();
            ensure!(
                joint == gold,
                "{} seed {}: {} != {}",
                algo,
                seed,
                joint.root,
                gold.root
            );
            brackets += bracket_counts(r.const_tree.as_ref().unwrap(), &gold_const).unwrap();
            arcs +=
                attachment_counts(r.dep_tree.as_ref().unwrap(), &gold_dep, &tags, &punct).unwrap();
            pred_levels.extend(gold_head_levels(&joint, CAP));
            gold_levels.extend(gold_head_levels(&gold, CAP));
        }
        let cky = cky_decode(&c).unwrap();
        ensure!(
            cky.binarized.unwrap() == gold.binarized_const_tree(),
            "cky seed {}: spans differ",
            seed
        );
        for algo in [Algorithm::Eisner, Algorithm::Mst] {
            let r = algo.decode(&c).unwrap();
            ensure!(
                r.dep_tree.unwrap() == gold_dep,
                "{} seed {}: arcs differ",
                algo,
                seed
            );
        }
    }
    let b = brackets.scores();
    let a = arcs.scores();
    let hacc = head_level_accuracy(&pred_levels, &gold_levels).unwrap();
    let shown = format!(
        "LF1 {:.2}, UAS {:.2}, LAS {:.2}, HAcc {:.2}",
        b.f1, a.uas, a.las, hacc
    );
    ensure!(
        format!("{:.2} {:.2} {:.2} {:.2}", b.f1, a.uas, a.las, hacc)
            == "100.00 100.00 100.00 100.00",
        "{}",
        shown
    );
    within(started, Duration::from_secs(60), "gold recovery")?;
    Ok(format!(
        "{} trees, {} ({:.1?})",
        trees,
        shown,
        started.elapsed()
    ))
}

pub fn dominance(charts: u64) -> Outcome {
    let mut strict = 0;
    for seed in 0..charts {
        let mut c = chart(1 + (seed % 5) as usize, 40_000 + seed);
        let full = hpsg_decode(&c).unwrap();
        let fast = h3n_decode(&c).unwrap();
        ensure!(
            fast.score <= full.score,
            "seed {}: h3n {} > hpsg {}",
            seed,
            fast.score,
            full.score
        );
        if fast.score < full.score {
            strict += 1;
        }
        c.set_head_levels(&gold_head_levels(full.joint.as_ref().unwrap(), CAP));
        let guided = h3n_decode(&c).unwrap();
        ensure!(
            guided.score == full.score,
            "seed {}: guided h3n {} != hpsg {}",
            seed,
            guided.score,
            full.score
        );
    }
    Ok(format!(
        "{} charts, h3n strictly below hpsg on {} before guidance",
        charts, strict
    ))
}

/// Every binary tree over `(i, j)` with every head daughter choice.
pub fn all_headed_trees(i: usize, j: usize) -> Vec<JointNode> {
    if j == i + 1 {
        return vec![JointNode::leaf("X", j)];
    }
    let mut out = Vec::new();
    for k in i + 1..j {
        for l in all_headed_trees(i, k) {
            for r in all_headed_trees(k, j) {
                out.push(JointNode::join("X", l.clone(), r.clone(), true));
                out.push(JointNode::join("X", l.clone(), r, false));
            }
        }
    }
    out
}

pub fn head_properties(max_len: usize) -> Outcome {
    let mut trees = 0;
    let mut flagged = 0;
    for n in 1..=max_len {
        for root in all_headed_trees(0, n) {
            let t = JointTree::new(root, vec!["d".to_string(); n]).unwrap();
            let scores: Vec<f64> = gold_head_levels(&t, CAP)
                .into_iter()
                .map(head_score)
                .collect();
            let v = check_head_properties(&scores, &t);
            ensure!(v.is_empty(), "n {}: {:?} on {}", n, v[0], t.root);
            trees += 1;
            if n >= 2 {
                // ties everywhere, and the root head demoted below a leaf
                ensure!(
                    !check_head_properties(&vec![0.5; n], &t).is_empty(),
                    "uniform scores pass on {}",
                    t.root
                );
                let mut swapped = scores.clone();
                let h = t.root.head;
                let other = if h == 1 { 2 } else { 1 };
                swapped.swap(h - 1, other - 1);
                let v = check_head_properties(&swapped, &t);
                ensure!(
                    v.iter()
                        .any(|v| v.span == (0, n) && v.property.number() == 1),
                    "swap not flagged on {}",
                    t.root
                );
                flagged += 2;
            }
        }
    }
    Ok(format!(
        "{} trees clean, {} counterexamples flagged",
        trees, flagged
    ))
}

pub fn complexity_scaling(sentences: usize, repeats: usize) -> Outcome {
    let started = Instant::now();
    let b = |n| Bucket::fixed(n);
    let cfg = BenchConfig {
        buckets: vec![b(27), b(50), b(100), b(127), b(200)],
        sentences,
        algos: vec![Algorithm::Hpsg, Algorithm::H3n],
        seed: 1,
        repeats,
        threads: 1,
        force: false,
    };
    let report = run_bench(&cfg).map_err(|e| e.to_string())?;
    let t = |n, a| {
        report
            .row(b(n), a)
            .map(|r| r.seconds)
            .ok_or(format!("no {} row at {}", a, n))
    };
    let h3n_ratio = t(200, Algorithm::H3n)? / t(100, Algorithm::H3n)?;
    let speedup_127 = t(127, Algorithm::Hpsg)? / t(127, Algorithm::H3n)?;
    let speedup_27 = t(27, Algorithm::Hpsg)? / t(27, Algorithm::H3n)?;
    let hpsg_ratio = t(100, Algorithm::Hpsg)? / t(50, Algorithm::Hpsg)?;
    let summary = format!(
        "h3n 200/100 {:.2}, speedup@127 {:.1}x, speedup@27 {:.1}x, hpsg 100/50 {:.1} ({:.0?})",
        h3n_ratio,
        speedup_127,
        speedup_27,
        hpsg_ratio,
        started.elapsed()
    );
    ensure!((4.0..=16.0).contains(&h3n_ratio), "(a) {}", summary);
    ensure!(
        speedup_127 >= 5.0 && speedup_127 > speedup_27,
        "(b) {}",
        summary
    );
    ensure!(hpsg_ratio >= 16.0, "(c) {}", summary);
    within(started, Duration::from_secs(1800), "complexity scaling")?;
    Ok(format!("{}\n{}", summary, report.to_string().trim_end()))
}

/// Phrase spans equal the range of their leaves, leaves in surface order.
fn contiguous(node: &Node, leaves: &mut Vec<usize>) -> bool {
    match node {
        Node::Leaf(p) => {
            leaves.push(*p);
            true
        }
        Node::Phrase(ph) => {
            let mut mine = Vec::new();
            for c in &ph.children {
                if !contiguous(c, &mut mine) {
                    return false;
                }
            }
            let ok = mine.iter().copied().eq(ph.start..ph.end);
            leaves.extend(mine);
            ok
        }
    }
}

pub fn conversion(projective: u64, non_projective: u64, joint: u64) -> Outcome {
    for seed in 0..projective {
        let mut rng = ChaCha8Rng::seed_from_u64(50_000 + seed);
        let n = rng.gen_range(1..=15);
        let dep = synth::random_projective_dep(&mut rng, n);
        let tree = dep_to_const(&dep).map_err(|e| e.to_string())?;
        let back = hfp_heads(&tree).map_err(|e| e.to_string())?;
        ensure!(
            back == dep,
            "projective seed {}: {:?} -> {:?}",
            seed,
            dep.heads,
            back.heads
        );
    }
    for seed in 0..non_projective {
        let mut rng = ChaCha8Rng::seed_from_u64(60_000 + seed);
        let n = rng.gen_range(4..=15);
        let dep = synth::random_nonprojective_dep(&mut rng, n);
        let tree = dep_to_const(&dep).map_err(|e| e.to_string())?;
        let mut leaves = Vec::new();
        ensure!(
            contiguous(tree.root(), &mut leaves),
            "non-projective seed {}: gap",
            seed
        );
        ensure!(
            leaves == (0..n).collect::<Vec<_>>(),
            "non-projective seed {}: order",
            seed
        );
    }
    for seed in 0..joint {
        let gold = gold_tree(70_000 + seed, 10);
        let back =
            joint_from_parallel(&gold.const_tree(), &gold.dep_tree()).map_err(|e| e.to_string())?;
        ensure!(
            back == gold,
            "joint seed {}: {} != {}",
            seed,
            back.root,
            gold.root
        );
    }
    Ok(format!(
        "{} projective, {} non-projective, {} joint round trips",
        projective, non_projective, joint
    ))
}

fn chart_diff(a: &ScoreChart, b: &ScoreChart) -> Option<String> {
    if a.len() != b.len() || a.labels_c() != b.labels_c() || a.labels_d() != b.labels_d() {
        return Some("shape".into());
    }
    if a.head_levels() != b.head_levels() {
        return Some("head levels".into());
    }
    let n = a.len();
    for i in 0..n {
        for j in i + 1..=n {
            if !close(a.span_score(i, j), b.span_score(i, j)) {
                return Some(format!("span ({}, {})", i, j));
            }
            if a.label_scores(i, j)
                .iter()
                .zip(b.label_scores(i, j))
                .any(|(x, y)| !close(*x, *y))
            {
                return Some(format!("labels ({}, {})", i, j));
            }
        }
    }
    for h in 0..=n {
        for m in (1..=n).filter(|&m| m != h) {
            if !close(a.arc_score(h, m), b.arc_score(h, m)) {
                return Some(format!("arc {} -> {}", h, m));
            }
            if a.dep_label_scores(h, m)
                .iter()
                .zip(b.dep_label_scores(h, m))
                .any(|(x, y)| !close(*x, *y))
            {
                return Some(format!("relations {} -> {}", h, m));
            }
        }
    }
    None
}

pub fn io_round_trips(sentences: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(80_000);
    let mut trees: Vec<(Sentence, ConstTree)> = Vec::new();
    let mut deps: Vec<(Sentence, DepTree)> = Vec::new();
    for _ in 0..sentences {
        let n = rng.gen_range(1..=20);
        trees.push((
            synth::random_sentence(&mut rng, n),
            synth::random_const_tree(&mut rng, n),
        ));
        let n = rng.gen_range(1..=20);
        deps.push((
            synth::random_sentence(&mut rng, n),
            synth::random_dep_tree(&mut rng, n),
        ));
    }
    let text = ptb::write_ptb(&trees);
    let back = ptb::read_ptb(&text).map_err(|e| e.to_string())?;
    ensure!(back == trees, "PTB corpus changed on round trip");
    ensure!(ptb::write_ptb(&back) == text, "PTB text changed on rewrite");

    let text = conll::write_conll(&deps);
    let back = conll::read_conll(&text).map_err(|e| e.to_string())?;
    ensure!(back == deps, "CoNLL corpus changed on round trip");
    ensure!(
        conll::write_conll(&back) == text,
        "CoNLL text changed on rewrite"
    );

    let charts: Vec<ScoreChart> = (0..100)
        .map(|s| chart(1 + (s % 15) as usize, 90_000 + s))
        .collect();
    let back = read_charts(write_charts(&charts).as_bytes()).map_err(|e| e.to_string())?;
    ensure!(back.len() == charts.len(), "chart count changed");
    for (a, b) in charts.iter().zip(&back) {
        if let Some(d) = chart_diff(a, b) {
            return Err(format!("chart {} differs at {}", a.id(), d));
        }
    }
    Ok(format!(
        "{} PTB trees, {} CoNLL sentences, {} charts",
        sentences,
        sentences,
        charts.len()
    ))
}

pub fn metric_arithmetic() -> Outcome {
    let w = Node::word;
    let gold = ConstTree::new(Node::phrase(
        "S",
        vec![
            Node::phrase("A", vec![w(1), w(2)]),
            Node::phrase("B", vec![w(3), w(4)]),
            Node::phrase("C", vec![w(5)]),
        ],
    ))
    .unwrap();
    let pred = ConstTree::new(Node::phrase(
        "S",
        vec![
            Node::phrase("A", vec![w(1), w(2)]),
            Node::phrase("D", vec![w(3), w(4), w(5)]),
        ],
    ))
    .unwrap();
    let s = evalb(&pred, &gold).unwrap();
    let got = format!("{:.2} {:.2} {:.2}", s.precision, s.recall, s.f1);
    ensure!(got == "66.67 50.00 57.14", "evalb gave {}", got);
    let same = evalb(&gold, &gold).unwrap();
    ensure!(
        format!("{:.2} {:.2} {:.2}", same.precision, same.recall, same.f1)
            == "100.00 100.00 100.00",
        "identity evalb"
    );

    let labels = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let gold = DepTree::new(vec![2, 0, 2, 3, 2], labels(&["a", "root", "b", "c", "p"])).unwrap();
    let pred = DepTree::new(vec![2, 0, 2, 1, 3], labels(&["a", "root", "x", "c", "p"])).unwrap();
    let tags = labels(&["NN", "VB", "NN", "NN", "."]);
    let a = attachment_scores(&pred, &gold, &tags, &default_punct_tags()).unwrap();
    let got_dep = format!("{:.2} {:.2}", a.uas, a.las);
    ensure!(got_dep == "75.00 50.00", "attachment gave {}", got_dep);
    Ok(format!("evalb {}, UAS/LAS {}", got, got_dep))
}
