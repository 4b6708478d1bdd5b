//! A chart that scores one gold joint tree above everything else is decoded
//! back to that tree by both joint decoders.

use jointparse::eval::{attachment_scores, default_punct_tags, evalb};
use jointparse::{oracle_chart, synth, Algorithm};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> jointparse::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let gold = synth::random_joint_tree(&mut rng, 10);
    let chart = oracle_chart(&gold, 1.0)?;
    let tags = vec!["_".to_string(); gold.len()];
    println!("gold {}", gold.root);
    for algo in [Algorithm::Hpsg, Algorithm::H3n] {
        let r = algo.decode(&chart)?;
        let b = evalb(r.const_tree.as_ref().unwrap(), &gold.const_tree())?;
        let a = attachment_scores(
            r.dep_tree.as_ref().unwrap(),
            &gold.dep_tree(),
            &tags,
            &default_punct_tags(),
        )?;
        println!(
            "{:<5} exact={} LF1 {:.2} UAS {:.2} LAS {:.2}",
            algo.name(),
            r.joint.as_ref() == Some(&gold),
            b.f1,
            a.uas,
            a.las
        );
    }
    Ok(())
}
