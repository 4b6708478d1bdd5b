//! Command implementations behind the `jointparse` binary.
//!
//! Each command writes its report to `out` and its files to the given
//! paths, so it can be driven from tests as well as from the binary.

use std::collections::HashSet;
use std::fs;
use std::io::Write;
use std::path::Path;

use crate::bench::{run_bench, BenchConfig};
use crate::chart::{read_charts, HeadLevel, CAP};
use crate::convert::{const_to_dep, dep_to_const};
use crate::decode::Algorithm;
use crate::error::{Error, Result};
use crate::eval::{
    attachment_counts, bracket_counts, default_punct_tags, head_level_accuracy, AttachmentCounts,
    BracketCounts,
};
use crate::head_rules::HeadRuleTable;
use crate::io::{conll, ptb, read_file};
use crate::tree::Sentence;

fn write_file(path: &Path, text: &str) -> Result<()> {
    fs::write(path, text).map_err(|e| Error::from(e).in_file(path.display().to_string()))
}

/// Decodes every chart of `charts`, printing one `<id>\t<score>` line per
/// sentence. Outputs use placeholder tokens `w1 .. wn` with tag `_`.
pub fn cmd_decode(
    algo: Algorithm,
    charts: &Path,
    const_out: Option<&Path>,
    dep_out: Option<&Path>,
    out: &mut dyn Write,
) -> Result<()> {
    if dep_out.is_some() && !algo.produces_dep() {
        return Err(Error::Usage(format!(
            "{} produces no dependency output",
            algo
        )));
    }
    if const_out.is_some() && !algo.produces_const() {
        return Err(Error::Usage(format!(
            "{} produces no constituent output",
            algo
        )));
    }
    let charts = read_file(charts, |t| read_charts(t.as_bytes()))?;
    let mut ptb_text = String::new();
    let mut conll_text = String::new();
    for chart in &charts {
        let r = algo.decode(chart)?;
        writeln!(out, "{}\t{:.6}", chart.id(), r.score)?;
        let sentence = Sentence::placeholder(chart.len());
        if let Some(t) = &r.const_tree {
            ptb_text.push_str(&ptb::write_tree(&sentence, t));
            ptb_text.push('\n');
        }
        if let Some(d) = &r.dep_tree {
            conll::write_sentence(&sentence, d, &mut conll_text);
        }
    }
    if let Some(p) = const_out {
        write_file(p, &ptb_text)?;
    }
    if let Some(p) = dep_out {
        write_file(p, &conll_text)?;
    }
    Ok(())
}

pub fn cmd_bench(cfg: &BenchConfig, out: &mut dyn Write) -> Result<()> {
    let report = run_bench(cfg)?;
    write!(out, "{}", report)?;
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConvertDirection {
    /// CoNLL in, PTB out.
    DepToConst,
    /// PTB in, CoNLL out; needs a head-rule file.
    ConstToDep,
}

pub fn cmd_convert(
    direction: ConvertDirection,
    input: &Path,
    output: &Path,
    rules: Option<&Path>,
) -> Result<()> {
    let text = match direction {
        ConvertDirection::DepToConst => {
            let corpus = read_file(input, conll::read_conll)?;
            let mut trees = Vec::with_capacity(corpus.len());
            for (s, d) in corpus {
                let t = dep_to_const(&d)?;
                trees.push((s, t));
            }
            ptb::write_ptb(&trees)
        }
        ConvertDirection::ConstToDep => {
            let rules = rules.ok_or_else(|| Error::Usage("c2d needs --rules".into()))?;
            let table = read_file(rules, HeadRuleTable::parse)?;
            let corpus = read_file(input, ptb::read_ptb)?;
            let mut deps = Vec::with_capacity(corpus.len());
            for (s, t) in corpus {
                let d = const_to_dep(&t, &s, &table)?;
                deps.push((s, d));
            }
            conll::write_conll(&deps)
        }
    };
    write_file(output, &text)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EvalKind {
    Const,
    Dep,
    HeadLevel,
}

/// Splits a comma-separated tag list; `\,` stands for a literal comma.
pub fn parse_punct(list: &str) -> HashSet<String> {
    let mut out = HashSet::new();
    let mut cur = String::new();
    let mut chars = list.chars().peekable();
    while let Some(c) = chars.next() {
        match c {
            '\\' if chars.peek() == Some(&',') => {
                cur.push(',');
                chars.next();
            }
            ',' => {
                if !cur.is_empty() {
                    out.insert(std::mem::take(&mut cur));
                }
            }
            _ => cur.push(c),
        }
    }
    if !cur.is_empty() {
        out.insert(cur);
    }
    out
}

/// Head-level files hold one sentence per line: whitespace-separated levels
/// `1..=32` or `NONE`.
pub fn read_head_levels(text: &str) -> Result<Vec<Vec<HeadLevel>>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(idx, l)| {
            l.split_whitespace()
                .map(|f| {
                    let level = match f {
                        "NONE" => Some(HeadLevel::NoSpan),
                        _ => f.parse().ok().map(HeadLevel::Level),
                    };
                    level.filter(|l| l.is_valid(CAP)).ok_or_else(|| {
                        Error::Malformed(format!("line {}: bad head level `{}`", idx + 1, f))
                    })
                })
                .collect()
        })
        .collect()
}

fn paired<T>(pred: Vec<T>, gold: Vec<T>) -> Result<Vec<(T, T)>> {
    if pred.len() != gold.len() {
        return Err(Error::Usage(format!(
            "predicted file has {} sentences, gold file {}",
            pred.len(),
            gold.len()
        )));
    }
    Ok(pred.into_iter().zip(gold).collect())
}

pub fn cmd_eval(
    kind: EvalKind,
    pred: &Path,
    gold: &Path,
    punct: Option<&str>,
    out: &mut dyn Write,
) -> Result<()> {
    match kind {
        EvalKind::Const => {
            let pairs = paired(
                read_file(pred, ptb::read_ptb)?,
                read_file(gold, ptb::read_ptb)?,
            )?;
            let mut total = BracketCounts::default();
            for ((_, p), (_, g)) in &pairs {
                total += bracket_counts(p, g)?;
            }
            let s = total.scores();
            writeln!(
                out,
                "LP\t{:.2}\nLR\t{:.2}\nLF1\t{:.2}",
                s.precision, s.recall, s.f1
            )?;
        }
        EvalKind::Dep => {
            let punct = punct.map_or_else(default_punct_tags, parse_punct);
            let pairs = paired(
                read_file(pred, conll::read_conll)?,
                read_file(gold, conll::read_conll)?,
            )?;
            let mut total = AttachmentCounts::default();
            for ((_, p), (s, g)) in &pairs {
                total += attachment_counts(p, g, s.pos_tags(), &punct)?;
            }
            let s = total.scores();
            writeln!(out, "UAS\t{:.2}\nLAS\t{:.2}", s.uas, s.las)?;
        }
        EvalKind::HeadLevel => {
            let pairs = paired(
                read_file(pred, read_head_levels)?,
                read_file(gold, read_head_levels)?,
            )?;
            let (p, g): (Vec<HeadLevel>, Vec<HeadLevel>) = pairs
                .into_iter()
                .map(|(p, g)| {
                    if p.len() != g.len() {
                        return Err(Error::LengthMismatch {
                            pred: p.len(),
                            gold: g.len(),
                        });
                    }
                    Ok(p.into_iter().zip(g))
                })
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .flatten()
                .unzip();
            writeln!(out, "HAcc\t{:.2}", head_level_accuracy(&p, &g)?)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn punct_list_with_escaped_comma() {
        let set = parse_punct("``,'',:,\\,,.");
        let expected: HashSet<String> = ["``", "''", ":", ",", "."]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(set, expected);
    }

    #[test]
    fn head_level_lines() {
        let v = read_head_levels("1 2 NONE\n\n32\n").unwrap();
        assert_eq!(
            v,
            vec![
                vec![HeadLevel::Level(1), HeadLevel::Level(2), HeadLevel::NoSpan],
                vec![HeadLevel::Level(32)]
            ]
        );
        assert!(read_head_levels("33").is_err());
        assert!(read_head_levels("0").is_err());
    }
}
