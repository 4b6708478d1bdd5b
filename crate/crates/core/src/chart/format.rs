//! Line-oriented chart file format.
//!
//! ```text
//! #SENT <id> <n>
//! CLABELS ∅ <label> ...
//! DLABELS <label> ...
//! SPAN <i> <j> <score>
//! LABEL <i> <j> <label-index> <score>
//! ARC <h> <m> <score>
//! DLABEL <h> <m> <label-index> <score>
//! HEADLVL <word> <level|NONE>
//! ```
//!
//! Omitted score entries are 0.0 and omitted head levels are `NONE`.

use std::fmt::Write;

use super::{HeadLevel, ScoreChart, CAP};
use crate::error::{Error, Result};

enum Entry {
    Span(usize, usize, f64),
    Label(usize, usize, usize, f64),
    Arc(usize, usize, f64),
    DepLabel(usize, usize, usize, f64),
    HeadLevel(usize, HeadLevel),
}

struct Pending {
    header_line: usize,
    id: String,
    n: usize,
    labels_c: Option<Vec<String>>,
    labels_d: Option<Vec<String>>,
    entries: Vec<(usize, Entry)>,
}

/// Parse every sentence chart in `bytes`.
pub fn read_charts(bytes: &[u8]) -> Result<Vec<ScoreChart>> {
    let text =
        std::str::from_utf8(bytes).map_err(|e| Error::chart(1, format!("invalid UTF-8: {}", e)))?;
    let mut charts = Vec::new();
    let mut pending: Option<Pending> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let fields: Vec<&str> = raw.split_whitespace().collect();
        if fields.is_empty() {
            continue;
        }
        if fields[0] == "#SENT" {
            if let Some(p) = pending.take() {
                charts.push(finish(p)?);
            }
            if fields.len() != 3 {
                return Err(Error::chart(
                    line,
                    "malformed header, expected `#SENT <id> <n>`",
                ));
            }
            let n: usize = fields[2].parse().ok().filter(|&n| n >= 1).ok_or_else(|| {
                Error::chart(line, format!("malformed header length `{}`", fields[2]))
            })?;
            pending = Some(Pending {
                header_line: line,
                id: fields[1].to_string(),
                n,
                labels_c: None,
                labels_d: None,
                entries: Vec::new(),
            });
            continue;
        }
        let p = pending
            .as_mut()
            .ok_or_else(|| Error::chart(line, "missing #SENT header"))?;
        parse_line(p, line, &fields)?;
    }

    match pending {
        Some(p) => charts.push(finish(p)?),
        None if charts.is_empty() => return Err(Error::chart(1, "missing #SENT header")),
        None => {}
    }
    Ok(charts)
}

/// Parse a file holding exactly one chart.
pub fn read_chart(bytes: &[u8]) -> Result<ScoreChart> {
    let mut charts = read_charts(bytes)?;
    if charts.len() != 1 {
        return Err(Error::chart(
            1,
            format!("expected one chart, found {}", charts.len()),
        ));
    }
    Ok(charts.pop().unwrap())
}

fn parse_index(line: usize, field: &str, what: &str) -> Result<usize> {
    field
        .parse()
        .map_err(|_| Error::chart(line, format!("malformed {} `{}`", what, field)))
}

fn parse_score(line: usize, field: &str) -> Result<f64> {
    let v: f64 = field
        .parse()
        .map_err(|_| Error::chart(line, format!("malformed score `{}`", field)))?;
    if !v.is_finite() {
        return Err(Error::chart(line, format!("non-finite score `{}`", field)));
    }
    Ok(v)
}

fn arity(line: usize, fields: &[&str], expected: usize) -> Result<()> {
    if fields.len() != expected {
        return Err(Error::chart(
            line,
            format!(
                "{} expects {} fields, found {}",
                fields[0],
                expected - 1,
                fields.len() - 1
            ),
        ));
    }
    Ok(())
}

fn check_span(line: usize, n: usize, i: usize, j: usize) -> Result<()> {
    if i >= j || j > n {
        return Err(Error::chart(
            line,
            format!("span ({}, {}) out of range for n = {}", i, j, n),
        ));
    }
    Ok(())
}

fn check_arc(line: usize, n: usize, h: usize, m: usize) -> Result<()> {
    if h == m {
        return Err(Error::chart(line, "self-arc forbidden"));
    }
    if h > n || m == 0 || m > n {
        return Err(Error::chart(
            line,
            format!("arc ({}, {}) out of range for n = {}", h, m, n),
        ));
    }
    Ok(())
}

fn parse_line(p: &mut Pending, line: usize, fields: &[&str]) -> Result<()> {
    let n = p.n;
    let entry = match fields[0] {
        "CLABELS" => {
            if fields.len() < 3 {
                return Err(Error::chart(line, "CLABELS needs ∅ and at least one label"));
            }
            if fields[1] != crate::tree::EMPTY_LABEL {
                return Err(Error::chart(line, "first constituent label must be ∅"));
            }
            if p.labels_c.is_some() {
                return Err(Error::chart(line, "duplicate CLABELS"));
            }
            p.labels_c = Some(fields[1..].iter().map(|s| s.to_string()).collect());
            return Ok(());
        }
        "DLABELS" => {
            if fields.len() < 2 {
                return Err(Error::chart(line, "DLABELS needs at least one label"));
            }
            if p.labels_d.is_some() {
                return Err(Error::chart(line, "duplicate DLABELS"));
            }
            p.labels_d = Some(fields[1..].iter().map(|s| s.to_string()).collect());
            return Ok(());
        }
        "SPAN" => {
            arity(line, fields, 4)?;
            let i = parse_index(line, fields[1], "index")?;
            let j = parse_index(line, fields[2], "index")?;
            check_span(line, n, i, j)?;
            Entry::Span(i, j, parse_score(line, fields[3])?)
        }
        "LABEL" => {
            arity(line, fields, 5)?;
            let i = parse_index(line, fields[1], "index")?;
            let j = parse_index(line, fields[2], "index")?;
            check_span(line, n, i, j)?;
            let l = parse_index(line, fields[3], "label index")?;
            Entry::Label(i, j, l, parse_score(line, fields[4])?)
        }
        "ARC" => {
            arity(line, fields, 4)?;
            let h = parse_index(line, fields[1], "index")?;
            let m = parse_index(line, fields[2], "index")?;
            check_arc(line, n, h, m)?;
            Entry::Arc(h, m, parse_score(line, fields[3])?)
        }
        "DLABEL" => {
            arity(line, fields, 5)?;
            let h = parse_index(line, fields[1], "index")?;
            let m = parse_index(line, fields[2], "index")?;
            check_arc(line, n, h, m)?;
            let l = parse_index(line, fields[3], "label index")?;
            Entry::DepLabel(h, m, l, parse_score(line, fields[4])?)
        }
        "HEADLVL" => {
            arity(line, fields, 3)?;
            let w = parse_index(line, fields[1], "word index")?;
            if w == 0 || w > n {
                return Err(Error::chart(
                    line,
                    format!("word {} out of range for n = {}", w, n),
                ));
            }
            let level = if fields[2] == "NONE" {
                HeadLevel::NoSpan
            } else {
                let l: u32 = fields[2]
                    .parse()
                    .map_err(|_| Error::chart(line, format!("malformed level `{}`", fields[2])))?;
                if !(1..=CAP).contains(&l) {
                    return Err(Error::chart(
                        line,
                        format!("level {} outside 1..={}", l, CAP),
                    ));
                }
                HeadLevel::Level(l)
            };
            Entry::HeadLevel(w, level)
        }
        other => return Err(Error::chart(line, format!("unknown record `{}`", other))),
    };
    p.entries.push((line, entry));
    Ok(())
}

fn finish(p: Pending) -> Result<ScoreChart> {
    let labels_c = p
        .labels_c
        .ok_or_else(|| Error::chart(p.header_line, format!("sentence {} has no CLABELS", p.id)))?;
    let labels_d = p
        .labels_d
        .ok_or_else(|| Error::chart(p.header_line, format!("sentence {} has no DLABELS", p.id)))?;
    let (lc, ld) = (labels_c.len(), labels_d.len());
    let mut chart = ScoreChart::zeros(p.id, p.n, labels_c, labels_d)
        .map_err(|e| Error::chart(p.header_line, e.to_string()))?;
    for (line, entry) in p.entries {
        match entry {
            Entry::Span(i, j, s) => chart.set_span_score(i, j, s),
            Entry::Label(i, j, l, s) => {
                if l >= lc {
                    return Err(Error::chart(
                        line,
                        format!("label index {} out of range", l),
                    ));
                }
                chart.set_label_score(i, j, l, s)
            }
            Entry::Arc(h, m, s) => chart.set_arc_score(h, m, s),
            Entry::DepLabel(h, m, l, s) => {
                if l >= ld {
                    return Err(Error::chart(
                        line,
                        format!("label index {} out of range", l),
                    ));
                }
                chart.set_dep_label_score(h, m, l, s)
            }
            Entry::HeadLevel(w, level) => chart.set_head_level(w, level),
        }
    }
    Ok(chart)
}

/// Serialize one chart. Zero scores are omitted; other scores are written
/// with 9 significant digits.
pub fn write_chart(chart: &ScoreChart, out: &mut String) {
    let n = chart.len();
    writeln!(out, "#SENT {} {}", chart.id(), n).unwrap();
    writeln!(out, "CLABELS {}", chart.labels_c().join(" ")).unwrap();
    writeln!(out, "DLABELS {}", chart.labels_d().join(" ")).unwrap();
    for i in 0..n {
        for j in i + 1..=n {
            let s = chart.span_score(i, j);
            if s != 0.0 {
                writeln!(out, "SPAN {} {} {:.8e}", i, j, s).unwrap();
            }
            for (l, &s) in chart.label_scores(i, j).iter().enumerate() {
                if s != 0.0 {
                    writeln!(out, "LABEL {} {} {} {:.8e}", i, j, l, s).unwrap();
                }
            }
        }
    }
    for h in 0..=n {
        for m in 1..=n {
            if h == m {
                continue;
            }
            let s = chart.arc_score(h, m);
            if s != 0.0 {
                writeln!(out, "ARC {} {} {:.8e}", h, m, s).unwrap();
            }
            for (l, &s) in chart.dep_label_scores(h, m).iter().enumerate() {
                if s != 0.0 {
                    writeln!(out, "DLABEL {} {} {} {:.8e}", h, m, l, s).unwrap();
                }
            }
        }
    }
    for w in 1..=n {
        writeln!(out, "HEADLVL {} {}", w, chart.head_level(w)).unwrap();
    }
}

pub fn write_charts(charts: &[ScoreChart]) -> String {
    let mut out = String::new();
    for chart in charts {
        write_chart(chart, &mut out);
    }
    out
}
