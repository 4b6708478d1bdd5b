mod common;

use jointparse::chart::{random_chart, ScoreChart};
use jointparse::decode::objective::{score_binarized, score_dep, score_joint};
use jointparse::synth;
use jointparse::Algorithm;
use proptest::prelude::*;

fn chart(n: usize, seed: u64) -> ScoreChart {
    random_chart(n, &synth::const_labels(), &synth::dep_labels(), seed).unwrap()
}

#[test]
fn decoders_match_brute_force() {
    let r = common::oracle_equivalence(200);
    assert!(r.is_ok(), "{}", r.unwrap_err());
}

#[test]
fn h3n_never_beats_hpsg() {
    let r = common::dominance(200);
    assert!(r.is_ok(), "{}", r.unwrap_err());
}

#[test]
fn small_label_sets() {
    // few labels make ties with ∅ and the single-label root cell common
    let labels_c = vec!["∅".to_string(), "X".to_string()];
    let labels_d = vec!["d".to_string()];
    for seed in 0..100 {
        let n = 1 + (seed % 5) as usize;
        let c = random_chart(n, &labels_c, &labels_d, seed).unwrap();
        let fast = jointparse::hpsg_decode(&c).unwrap();
        let slow = jointparse::decode::brute::brute_force_joint(&c).unwrap();
        assert_eq!(fast.score, slow.score, "seed {}", seed);
        assert!(fast.joint.unwrap().is_decodable());
    }
}

#[test]
fn long_sentences_are_rejected_by_oracles() {
    use jointparse::decode::brute::*;
    assert!(brute_force_const(&chart(MAX_CONST_LEN + 1, 0)).is_err());
    assert!(brute_force_dep(&chart(MAX_DEP_LEN + 1, 0), true).is_err());
    assert!(brute_force_joint(&chart(MAX_JOINT_LEN + 1, 0)).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reported_scores_match_outputs(n in 1usize..=14, seed in any::<u64>()) {
        let c = chart(n, seed);
        for algo in Algorithm::ALL {
            let r = algo.decode(&c).unwrap();
            let rescored = match algo {
                Algorithm::Cky => score_binarized(&c, r.binarized.as_ref().unwrap()).unwrap(),
                Algorithm::Eisner | Algorithm::Mst => score_dep(&c, r.dep_tree.as_ref().unwrap()),
                Algorithm::Hpsg | Algorithm::H3n => score_joint(&c, r.joint.as_ref().unwrap()).unwrap(),
            };
            prop_assert!((rescored - r.score).abs() <= 1e-9, "{} {} vs {}", algo, rescored, r.score);
            if let Some(d) = &r.dep_tree {
                prop_assert!(d.validate().is_ok());
                prop_assert_eq!(d.len(), n);
                if algo != Algorithm::Mst {
                    prop_assert!(d.is_projective());
                }
            }
            if let Some(j) = &r.joint {
                prop_assert!(j.is_decodable());
            }
        }
    }

    #[test]
    fn search_space_ordering(n in 1usize..=14, seed in any::<u64>()) {
        let c = chart(n, seed);
        let s = |a: Algorithm| a.decode(&c).unwrap().score;
        prop_assert!(s(Algorithm::Eisner) <= s(Algorithm::Mst));
        prop_assert!(s(Algorithm::H3n) <= s(Algorithm::Hpsg));
    }
}
