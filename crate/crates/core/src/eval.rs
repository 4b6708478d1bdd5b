//! Bracket, attachment and head-level metrics. All values are percentages.

use std::collections::{HashMap, HashSet};
use std::ops::AddAssign;

use crate::chart::HeadLevel;
use crate::error::{Error, Result};
use crate::tree::{ConstTree, DepTree, JointTree};

/// Tags excluded from attachment scores unless configured otherwise.
pub const DEFAULT_PUNCT_TAGS: [&str; 5] = ["``", "''", ":", ",", "."];

pub fn default_punct_tags() -> HashSet<String> {
    DEFAULT_PUNCT_TAGS.iter().map(|s| s.to_string()).collect()
}

fn percent(num: usize, den: usize) -> f64 {
    if den == 0 {
        100.0
    } else {
        100.0 * num as f64 / den as f64
    }
}

fn same_len(pred: usize, gold: usize) -> Result<()> {
    if pred != gold {
        return Err(Error::LengthMismatch { pred, gold });
    }
    Ok(())
}

/// Labeled bracket counts; sum them to aggregate a corpus.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct BracketCounts {
    pub matched: usize,
    pub predicted: usize,
    pub gold: usize,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BracketScores {
    pub precision: f64,
    pub recall: f64,
    pub f1: f64,
}

impl BracketCounts {
    pub fn scores(&self) -> BracketScores {
        let precision = percent(self.matched, self.predicted);
        let recall = percent(self.matched, self.gold);
        let f1 = if precision + recall == 0.0 {
            0.0
        } else {
            2.0 * precision * recall / (precision + recall)
        };
        BracketScores {
            precision,
            recall,
            f1,
        }
    }
}

impl AddAssign for BracketCounts {
    fn add_assign(&mut self, rhs: Self) {
        self.matched += rhs.matched;
        self.predicted += rhs.predicted;
        self.gold += rhs.gold;
    }
}

/// Multiset match of labeled spans over all phrases, root included.
pub fn bracket_counts(pred: &ConstTree, gold: &ConstTree) -> Result<BracketCounts> {
    same_len(pred.len(), gold.len())?;
    let mut pool: HashMap<(&str, usize, usize), usize> = HashMap::new();
    for b in gold.brackets() {
        *pool.entry(b).or_default() += 1;
    }
    let pred_brackets = pred.brackets();
    let mut matched = 0;
    for b in &pred_brackets {
        if let Some(c) = pool.get_mut(b) {
            if *c > 0 {
                *c -= 1;
                matched += 1;
            }
        }
    }
    Ok(BracketCounts {
        matched,
        predicted: pred_brackets.len(),
        gold: gold.brackets().len(),
    })
}

pub fn evalb(pred: &ConstTree, gold: &ConstTree) -> Result<BracketScores> {
    Ok(bracket_counts(pred, gold)?.scores())
}

/// Corpus scores from summed counts.
pub fn corpus_evalb<'a>(
    pairs: impl IntoIterator<Item = (&'a ConstTree, &'a ConstTree)>,
) -> Result<BracketScores> {
    let mut total = BracketCounts::default();
    for (p, g) in pairs {
        total += bracket_counts(p, g)?;
    }
    Ok(total.scores())
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AttachmentCounts {
    pub heads: usize,
    pub labeled: usize,
    pub total: usize,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AttachmentScores {
    pub uas: f64,
    pub las: f64,
}

impl AttachmentCounts {
    pub fn scores(&self) -> AttachmentScores {
        AttachmentScores {
            uas: percent(self.heads, self.total),
            las: percent(self.labeled, self.total),
        }
    }
}

impl AddAssign for AttachmentCounts {
    fn add_assign(&mut self, rhs: Self) {
        self.heads += rhs.heads;
        self.labeled += rhs.labeled;
        self.total += rhs.total;
    }
}

/// Head and head+label matches over words whose gold tag is not punctuation.
pub fn attachment_counts(
    pred: &DepTree,
    gold: &DepTree,
    gold_tags: &[String],
    punct_tags: &HashSet<String>,
) -> Result<AttachmentCounts> {
    same_len(pred.len(), gold.len())?;
    same_len(gold_tags.len(), gold.len())?;
    let mut c = AttachmentCounts::default();
    for m in 1..=gold.len() {
        if punct_tags.contains(&gold_tags[m - 1]) {
            continue;
        }
        c.total += 1;
        if pred.head(m) == gold.head(m) {
            c.heads += 1;
            if pred.label(m) == gold.label(m) {
                c.labeled += 1;
            }
        }
    }
    Ok(c)
}

pub fn attachment_scores(
    pred: &DepTree,
    gold: &DepTree,
    gold_tags: &[String],
    punct_tags: &HashSet<String>,
) -> Result<AttachmentScores> {
    Ok(attachment_counts(pred, gold, gold_tags, punct_tags)?.scores())
}

/// Share of words whose level class is predicted exactly.
pub fn head_level_accuracy(pred: &[HeadLevel], gold: &[HeadLevel]) -> Result<f64> {
    same_len(pred.len(), gold.len())?;
    let hits = pred.iter().zip(gold).filter(|(p, g)| p == g).count();
    Ok(percent(hits, gold.len()))
}

/// Share of gold spans whose head word the prediction reproduces, counting
/// gold spans absent from the prediction as misses.
pub fn span_head_accuracy(pred: &JointTree, gold: &JointTree) -> Result<f64> {
    same_len(pred.len(), gold.len())?;
    let predicted: HashMap<(usize, usize), usize> = pred
        .nodes()
        .into_iter()
        .map(|(node, _)| (node.span(), node.head))
        .collect();
    let gold_nodes = gold.nodes();
    let hits = gold_nodes
        .iter()
        .filter(|(node, _)| predicted.get(&node.span()) == Some(&node.head))
        .count();
    Ok(percent(hits, gold_nodes.len()))
}
