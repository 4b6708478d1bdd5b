//! Score charts: every quantity a decoder consumes for one sentence.

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::heads::gold_head_levels;
use crate::tree::{JointTree, EMPTY_LABEL};

mod format;

pub use format::{read_chart, read_charts, write_chart, write_charts};

/// Maximum head level class.
pub const CAP: u32 = 32;

/// Random scores are multiples of `1 / QUANTUM` so that sums of a few
/// thousand of them are exact in `f64`.
const QUANTUM: i64 = 1 << 24;

static CONSTRUCTED: AtomicUsize = AtomicUsize::new(0);

/// Number of charts allocated by this process so far.
pub fn constructions() -> usize {
    CONSTRUCTED.load(Ordering::Relaxed)
}

/// Head scorer output for one word: a level class, or `NoSpan` for a word
/// that heads no span (infinite level).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HeadLevel {
    Level(u32),
    NoSpan,
}

impl HeadLevel {
    /// `1 / level`, and 0 for `NoSpan`.
    pub fn score(self) -> f64 {
        match self {
            HeadLevel::Level(l) => 1.0 / l as f64,
            HeadLevel::NoSpan => 0.0,
        }
    }

    pub fn is_valid(self, cap: u32) -> bool {
        match self {
            HeadLevel::Level(l) => (1..=cap).contains(&l),
            HeadLevel::NoSpan => true,
        }
    }
}

impl fmt::Display for HeadLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HeadLevel::Level(l) => write!(f, "{}", l),
            HeadLevel::NoSpan => f.write_str("NONE"),
        }
    }
}

/// Dense score tables for one sentence of length `n`.
///
/// Constituent label 0 is always the empty label `∅`.
#[derive(Clone, Debug, PartialEq)]
pub struct ScoreChart {
    id: String,
    n: usize,
    labels_c: Vec<String>,
    labels_d: Vec<String>,
    span: Vec<f64>,
    label: Vec<f64>,
    arc: Vec<f64>,
    dep_label: Vec<f64>,
    head_level: Vec<HeadLevel>,
}

impl ScoreChart {
    /// All-zero chart with every head level set to `NoSpan`.
    pub fn zeros(
        id: impl Into<String>,
        n: usize,
        labels_c: Vec<String>,
        labels_d: Vec<String>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptySentence);
        }
        if labels_c.is_empty() {
            return Err(Error::EmptyLabelSet("constituent"));
        }
        if labels_d.is_empty() {
            return Err(Error::EmptyLabelSet("dependency"));
        }
        if labels_c[0] != EMPTY_LABEL {
            return Err(Error::Malformed(format!(
                "first constituent label must be {}, found {}",
                EMPTY_LABEL, labels_c[0]
            )));
        }
        if labels_c.len() < 2 {
            return Err(Error::Malformed(
                "constituent labels need at least one non-empty label".into(),
            ));
        }
        CONSTRUCTED.fetch_add(1, Ordering::Relaxed);
        let cells = (n + 1) * (n + 1);
        Ok(ScoreChart {
            id: id.into(),
            n,
            span: vec![0.0; cells],
            label: vec![0.0; cells * labels_c.len()],
            arc: vec![0.0; cells],
            dep_label: vec![0.0; cells * labels_d.len()],
            head_level: vec![HeadLevel::NoSpan; n],
            labels_c,
            labels_d,
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn labels_c(&self) -> &[String] {
        &self.labels_c
    }

    pub fn labels_d(&self) -> &[String] {
        &self.labels_d
    }

    #[inline]
    fn cell(&self, i: usize, j: usize) -> usize {
        i * (self.n + 1) + j
    }

    #[inline]
    pub fn span_score(&self, i: usize, j: usize) -> f64 {
        self.span[self.cell(i, j)]
    }

    #[inline]
    pub fn label_score(&self, i: usize, j: usize, label: usize) -> f64 {
        self.label[self.cell(i, j) * self.labels_c.len() + label]
    }

    /// Scores of all constituent labels for span `(i, j)`.
    pub fn label_scores(&self, i: usize, j: usize) -> &[f64] {
        let l = self.labels_c.len();
        let base = self.cell(i, j) * l;
        &self.label[base..base + l]
    }

    #[inline]
    pub fn arc_score(&self, h: usize, m: usize) -> f64 {
        self.arc[self.cell(h, m)]
    }

    /// Scores of all relation labels for arc `h -> m`.
    pub fn dep_label_scores(&self, h: usize, m: usize) -> &[f64] {
        let l = self.labels_d.len();
        let base = self.cell(h, m) * l;
        &self.dep_label[base..base + l]
    }

    pub fn head_level(&self, word: usize) -> HeadLevel {
        self.head_level[word - 1]
    }

    pub fn head_levels(&self) -> &[HeadLevel] {
        &self.head_level
    }

    /// Head scores of words `1..=n`, at index `word - 1`.
    pub fn head_scores(&self) -> Vec<f64> {
        self.head_level.iter().map(|l| l.score()).collect()
    }

    pub fn set_span_score(&mut self, i: usize, j: usize, score: f64) {
        assert!(i < j && j <= self.n, "span ({}, {}) out of range", i, j);
        let c = self.cell(i, j);
        self.span[c] = score;
    }

    pub fn set_label_score(&mut self, i: usize, j: usize, label: usize, score: f64) {
        assert!(i < j && j <= self.n, "span ({}, {}) out of range", i, j);
        assert!(label < self.labels_c.len());
        let c = self.cell(i, j) * self.labels_c.len() + label;
        self.label[c] = score;
    }

    pub fn set_arc_score(&mut self, h: usize, m: usize, score: f64) {
        assert!(h <= self.n && (1..=self.n).contains(&m) && h != m);
        let c = self.cell(h, m);
        self.arc[c] = score;
    }

    pub fn set_dep_label_score(&mut self, h: usize, m: usize, label: usize, score: f64) {
        assert!(h <= self.n && (1..=self.n).contains(&m) && h != m);
        assert!(label < self.labels_d.len());
        let c = self.cell(h, m) * self.labels_d.len() + label;
        self.dep_label[c] = score;
    }

    pub fn set_head_level(&mut self, word: usize, level: HeadLevel) {
        assert!(level.is_valid(CAP), "head level {} out of range", level);
        self.head_level[word - 1] = level;
    }

    pub fn set_head_levels(&mut self, levels: &[HeadLevel]) {
        assert_eq!(levels.len(), self.n);
        for (w, &l) in levels.iter().enumerate() {
            self.set_head_level(w + 1, l);
        }
    }

    pub fn constituent_label_index(&self, label: &str) -> Option<usize> {
        self.labels_c.iter().position(|l| l == label)
    }

    pub fn dependency_label_index(&self, label: &str) -> Option<usize> {
        self.labels_d.iter().position(|l| l == label)
    }
}

fn draw(rng: &mut ChaCha8Rng) -> f64 {
    rng.gen_range(-QUANTUM..=QUANTUM) as f64 / QUANTUM as f64
}

/// Seeded random chart: every score uniform on a `2^-24` grid over
/// `[-1, 1]`, head levels uniform in `1..=CAP`.
pub fn random_chart(
    n: usize,
    labels_c: &[String],
    labels_d: &[String],
    seed: u64,
) -> Result<ScoreChart> {
    let mut chart = ScoreChart::zeros(
        format!("rand-{}-{}", n, seed),
        n,
        labels_c.to_vec(),
        labels_d.to_vec(),
    )?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for i in 0..n {
        for j in i + 1..=n {
            chart.set_span_score(i, j, draw(&mut rng));
            for l in 0..labels_c.len() {
                chart.set_label_score(i, j, l, draw(&mut rng));
            }
        }
    }
    for h in 0..=n {
        for m in 1..=n {
            if h == m {
                continue;
            }
            chart.set_arc_score(h, m, draw(&mut rng));
            for l in 0..labels_d.len() {
                chart.set_dep_label_score(h, m, l, draw(&mut rng));
            }
        }
    }
    for w in 1..=n {
        chart.set_head_level(w, HeadLevel::Level(rng.gen_range(1..=CAP)));
    }
    Ok(chart)
}

/// Chart that scores exactly the labeled spans, arcs and relations of
/// `gold` with `margin` and everything else with 0. Head levels come from
/// the gold tree.
pub fn oracle_chart_with_labels(
    gold: &JointTree,
    labels_c: &[String],
    labels_d: &[String],
    margin: f64,
) -> Result<ScoreChart> {
    if !(margin > 0.0) {
        return Err(Error::Malformed(format!(
            "margin {} is not positive",
            margin
        )));
    }
    let n = gold.len();
    let mut chart = ScoreChart::zeros("oracle", n, labels_c.to_vec(), labels_d.to_vec())?;
    for (node, _) in gold.nodes() {
        let l = chart.constituent_label_index(&node.label).ok_or_else(|| {
            Error::Malformed(format!("label {} missing from the label set", node.label))
        })?;
        chart.set_label_score(node.start, node.end, l, margin);
    }
    let heads = gold.heads();
    for (idx, &h) in heads.iter().enumerate() {
        let m = idx + 1;
        let l = chart
            .dependency_label_index(&gold.dep_labels[idx])
            .ok_or_else(|| {
                Error::Malformed(format!(
                    "relation {} missing from the label set",
                    gold.dep_labels[idx]
                ))
            })?;
        chart.set_arc_score(h, m, margin);
        chart.set_dep_label_score(h, m, l, margin);
    }
    chart.set_head_levels(&gold_head_levels(gold, CAP));
    Ok(chart)
}

/// [`oracle_chart_with_labels`] over the labels occurring in `gold`
/// (`∅` first, the rest sorted).
pub fn oracle_chart(gold: &JointTree, margin: f64) -> Result<ScoreChart> {
    let mut labels_c: Vec<String> = gold
        .nodes()
        .iter()
        .map(|(node, _)| node.label.clone())
        .filter(|l| l != EMPTY_LABEL)
        .collect();
    labels_c.sort();
    labels_c.dedup();
    if labels_c.is_empty() {
        return Err(Error::InvalidTree("tree has only empty labels".into()));
    }
    labels_c.insert(0, EMPTY_LABEL.to_string());
    let mut labels_d = gold.dep_labels.clone();
    labels_d.sort();
    labels_d.dedup();
    oracle_chart_with_labels(gold, &labels_c, &labels_d, margin)
}
