//! Ten-column CoNLL dependency files.
//!
//! Only ID, FORM, POSTAG (column 5, falling back to column 4 when it is
//! `_`), HEAD and DEPREL are read; the writer fills every other column
//! with `_`. Rows whose ID contains `-` or `.` (multiword tokens, empty
//! nodes) and `#` comment lines are skipped.

use crate::error::{Error, Result};
use crate::tree::{DepTree, Sentence};

struct Row {
    line: usize,
    form: String,
    tag: String,
    head: usize,
    rel: String,
}

fn finish(rows: Vec<Row>) -> Result<(Sentence, DepTree)> {
    let n = rows.len();
    let first = rows[0].line;
    for r in &rows {
        if r.head > n {
            return Err(Error::conll(
                r.line,
                format!("HEAD {} out of range 0..={}", r.head, n),
            ));
        }
    }
    let mut tokens = Vec::with_capacity(n);
    let mut tags = Vec::with_capacity(n);
    let mut heads = Vec::with_capacity(n);
    let mut rels = Vec::with_capacity(n);
    for r in rows {
        tokens.push(r.form);
        tags.push(r.tag);
        heads.push(r.head);
        rels.push(r.rel);
    }
    let dep = DepTree::new(heads, rels).map_err(|e| Error::conll(first, e.to_string()))?;
    Ok((Sentence::new(tokens, tags)?, dep))
}

pub fn read_conll(text: &str) -> Result<Vec<(Sentence, DepTree)>> {
    let mut out = Vec::new();
    let mut rows: Vec<Row> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim_end_matches('\r');
        if trimmed.trim().is_empty() {
            if !rows.is_empty() {
                out.push(finish(std::mem::take(&mut rows))?);
            }
            continue;
        }
        if trimmed.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = trimmed.split('\t').collect();
        if cols.len() != 10 {
            return Err(Error::conll(
                line,
                format!("expected 10 tab-separated columns, found {}", cols.len()),
            ));
        }
        if cols[0].contains('-') || cols[0].contains('.') {
            continue;
        }
        let id: usize = cols[0]
            .parse()
            .map_err(|_| Error::conll(line, format!("non-integer ID `{}`", cols[0])))?;
        if id <= rows.len() && id >= 1 {
            return Err(Error::conll(line, format!("duplicate ID {}", id)));
        }
        if id != rows.len() + 1 {
            return Err(Error::conll(
                line,
                format!("ID {} out of sequence, expected {}", id, rows.len() + 1),
            ));
        }
        let head: usize = cols[6]
            .parse()
            .map_err(|_| Error::conll(line, format!("non-integer HEAD `{}`", cols[6])))?;
        let tag = if cols[4] == "_" { cols[3] } else { cols[4] };
        rows.push(Row {
            line,
            form: cols[1].to_string(),
            tag: tag.to_string(),
            head,
            rel: cols[7].to_string(),
        });
    }
    if !rows.is_empty() {
        out.push(finish(rows)?);
    }
    Ok(out)
}

/// One sentence block followed by a blank line.
pub fn write_sentence(sentence: &Sentence, dep: &DepTree, out: &mut String) {
    assert_eq!(
        sentence.len(),
        dep.len(),
        "sentence and tree lengths differ"
    );
    for m in 1..=dep.len() {
        out.push_str(&format!(
            "{}\t{}\t_\t_\t{}\t_\t{}\t{}\t_\t_\n",
            m,
            sentence.token(m),
            sentence.tag(m),
            dep.head(m),
            dep.label(m)
        ));
    }
    out.push('\n');
}

pub fn write_conll(corpus: &[(Sentence, DepTree)]) -> String {
    let mut out = String::new();
    for (s, d) in corpus {
        write_sentence(s, d, &mut out);
    }
    out
}
