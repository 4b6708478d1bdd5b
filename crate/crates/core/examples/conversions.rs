//! Dependency trees to constituent trees and back, by head percolation and
//! by head-rule tables.

use jointparse::convert::{const_to_dep, dep_to_const, hfp_heads};
use jointparse::head_rules::HeadRuleTable;
use jointparse::io::ptb::{read_ptb, write_tree};
use jointparse::{DepTree, Sentence};

fn main() -> jointparse::Result<()> {
    // word 2 attaches across the arc 1 -> 3, so the tree is non-projective
    let rel = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let dep = DepTree::new(vec![0, 4, 1, 1], rel(&["root", "nmod", "obj", "advmod"]))?;
    let tree = dep_to_const(&dep)?;
    let s = Sentence::new(
        rel(&["ate", "pizza", "yesterday", "with"]),
        rel(&["VB", "NN", "NN", "IN"]),
    )?;
    println!(
        "non-projective {:?} -> {}",
        dep.heads,
        write_tree(&s, &tree)
    );
    println!("  repaired heads {:?}", hfp_heads(&tree)?.heads);

    let rules = HeadRuleTable::parse("S r2l VP\nVP l2r VB\nNP r2l NN\nDEFAULT l2r\n")?;
    for (sentence, tree) in read_ptb("(S (NP (DT the) (NN dog)) (VP (VB saw) (NP (NN cats))))")? {
        let d = const_to_dep(&tree, &sentence, &rules)?;
        for k in 1..=d.len() {
            println!("  {} <-{}- {}", sentence.token(k), d.label(k), d.head(k));
        }
    }
    Ok(())
}
