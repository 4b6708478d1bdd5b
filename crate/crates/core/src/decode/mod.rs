//! Decoders over score charts.
//!
//! Structural ties are broken toward the smaller split point, then the
//! smaller label index, then the smaller head index, so every decoder is a
//! deterministic function of its chart.

use std::fmt;
use std::str::FromStr;

use crate::chart::ScoreChart;
use crate::error::{Error, Result};
use crate::tree::{ConstTree, DepTree, JointTree};

pub mod brute;
mod cky;
mod eisner;
mod h3n;
mod hpsg;
mod mst;
pub mod objective;

pub use brute::{brute_force_const, brute_force_dep, brute_force_joint, enumerate_dep_trees};
pub use cky::cky_decode;
pub use eisner::eisner_decode;
pub use h3n::h3n_decode;
pub use hpsg::hpsg_decode;
pub use mst::mst_decode;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    Cky,
    Eisner,
    Mst,
    Hpsg,
    H3n,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Cky,
        Algorithm::Eisner,
        Algorithm::Mst,
        Algorithm::Hpsg,
        Algorithm::H3n,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Cky => "cky",
            Algorithm::Eisner => "eisner",
            Algorithm::Mst => "mst",
            Algorithm::Hpsg => "hpsg",
            Algorithm::H3n => "h3n",
        }
    }

    pub fn complexity(self) -> &'static str {
        match self {
            Algorithm::Hpsg => "O(n^5)",
            _ => "O(n^3)",
        }
    }

    pub fn produces_const(self) -> bool {
        matches!(self, Algorithm::Cky | Algorithm::Hpsg | Algorithm::H3n)
    }

    pub fn produces_dep(self) -> bool {
        !matches!(self, Algorithm::Cky)
    }

    pub fn decode(self, chart: &ScoreChart) -> Result<DecodeResult> {
        match self {
            Algorithm::Cky => cky_decode(chart),
            Algorithm::Eisner => eisner_decode(chart),
            Algorithm::Mst => mst_decode(chart),
            Algorithm::Hpsg => hpsg_decode(chart),
            Algorithm::H3n => h3n_decode(chart),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .iter()
            .copied()
            .find(|a| a.name() == s.to_ascii_lowercase())
            .ok_or_else(|| Error::Usage(format!("unknown algorithm `{}`", s)))
    }
}

/// Work counters of one decode call.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct DecodeStats {
    /// Chart cells filled (per head word for head-indexed charts).
    pub cells: u64,
    /// Innermost split evaluations.
    pub split_evals: u64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct DecodeResult {
    /// Debinarized, unary-expanded constituent tree.
    pub const_tree: Option<ConstTree>,
    /// Chart-form tree: binarized, `∅` nodes kept, unary chains collapsed.
    pub binarized: Option<ConstTree>,
    pub dep_tree: Option<DepTree>,
    pub joint: Option<JointTree>,
    /// Value of the maximized objective.
    pub score: f64,
    pub stats: DecodeStats,
}

impl DecodeResult {
    pub(crate) fn from_joint(
        chart: &ScoreChart,
        joint: JointTree,
        score: f64,
        stats: DecodeStats,
    ) -> Self {
        DecodeResult {
            const_tree: Some(joint.const_tree()),
            binarized: Some(joint.binarized_const_tree()),
            dep_tree: Some(joint.dep_tree()),
            joint: Some(joint),
            score,
            stats,
        }
        .relabel(chart)
    }

    fn relabel(mut self, chart: &ScoreChart) -> Self {
        if let Some(dep) = &mut self.dep_tree {
            dep.labels = assign_dep_labels(&dep.heads, chart);
        }
        if let (Some(joint), Some(dep)) = (&mut self.joint, &self.dep_tree) {
            joint.dep_labels = dep.labels.clone();
        }
        self
    }

    pub(crate) fn from_heads(
        chart: &ScoreChart,
        heads: Vec<usize>,
        score: f64,
        stats: DecodeStats,
    ) -> Self {
        let labels = assign_dep_labels(&heads, chart);
        DecodeResult {
            const_tree: None,
            binarized: None,
            dep_tree: Some(DepTree { heads, labels }),
            joint: None,
            score,
            stats,
        }
    }
}

/// Best relation for every arc `heads[m - 1] -> m`; ties go to the lower
/// label index.
pub fn assign_dep_labels(heads: &[usize], chart: &ScoreChart) -> Vec<String> {
    heads
        .iter()
        .enumerate()
        .map(|(idx, &h)| {
            let (l, _) = argmax(chart.dep_label_scores(h, idx + 1));
            chart.labels_d()[l].clone()
        })
        .collect()
}

/// First maximum of a non-empty slice.
pub(crate) fn argmax(values: &[f64]) -> (usize, f64) {
    let mut best = (0, values[0]);
    for (i, &v) in values.iter().enumerate().skip(1) {
        if v > best.1 {
            best = (i, v);
        }
    }
    best
}

/// Per-cell label maxima, with and without the empty label.
pub(crate) struct LabelMax {
    n1: usize,
    all: Vec<(usize, f64)>,
    non_empty: Vec<(usize, f64)>,
}

impl LabelMax {
    pub(crate) fn new(chart: &ScoreChart) -> Self {
        let n = chart.len();
        let n1 = n + 1;
        let mut all = vec![(0, 0.0); n1 * n1];
        let mut non_empty = vec![(0, 0.0); n1 * n1];
        for i in 0..n {
            for j in i + 1..=n {
                let scores = chart.label_scores(i, j);
                all[i * n1 + j] = argmax(scores);
                let (l, s) = argmax(&scores[1..]);
                non_empty[i * n1 + j] = (l + 1, s);
            }
        }
        LabelMax { n1, all, non_empty }
    }

    #[inline]
    pub(crate) fn all(&self, i: usize, j: usize) -> (usize, f64) {
        self.all[i * self.n1 + j]
    }

    #[inline]
    pub(crate) fn non_empty(&self, i: usize, j: usize) -> (usize, f64) {
        self.non_empty[i * self.n1 + j]
    }
}

/// Arc scores with the best relation score folded in, `[h * (n + 1) + m]`.
pub(crate) fn augmented_arcs(chart: &ScoreChart) -> Vec<f64> {
    let n = chart.len();
    let n1 = n + 1;
    let mut out = vec![f64::NEG_INFINITY; n1 * n1];
    for h in 0..=n {
        for m in 1..=n {
            if h != m {
                out[h * n1 + m] = chart.arc_score(h, m) + argmax(chart.dep_label_scores(h, m)).1;
            }
        }
    }
    out
}

pub(crate) fn check_len(chart: &ScoreChart) -> Result<usize> {
    match chart.len() {
        0 => Err(Error::EmptySentence),
        n => Ok(n),
    }
}
