//! Bracket and attachment scores on small hand-made trees.

use jointparse::eval::{attachment_scores, default_punct_tags, evalb};
use jointparse::io::ptb::read_ptb;
use jointparse::DepTree;

fn main() -> jointparse::Result<()> {
    let trees = read_ptb(
        "(S (A (X a) (X b)) (D (X c) (X d) (X e)))\n\
         (S (A (X a) (X b)) (B (X c) (X d)) (C (X e)))",
    )?;
    let s = evalb(&trees[0].1, &trees[1].1)?;
    println!("LP {:.2} LR {:.2} LF1 {:.2}", s.precision, s.recall, s.f1);

    let labels = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let gold = DepTree::new(vec![2, 0, 2, 3, 2], labels(&["a", "root", "b", "c", "p"]))?;
    let pred = DepTree::new(vec![2, 0, 2, 1, 3], labels(&["a", "root", "x", "c", "p"]))?;
    let tags = labels(&["NN", "VB", "NN", "NN", "."]);
    let a = attachment_scores(&pred, &gold, &tags, &default_punct_tags())?;
    println!(
        "UAS {:.2} LAS {:.2} (the final `.` is not scored)",
        a.uas, a.las
    );
    Ok(())
}
