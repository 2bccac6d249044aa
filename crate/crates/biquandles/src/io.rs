//! The line-oriented text format for tables and structures.
//!
//! Layout: line 1 a kind tag (`quandle`, `biquandle`, `group`, `structure`),
//! line 2 the order `n`, then the table blocks as `n` lines of `n`
//! space-separated entries. Biquandles carry the under block then the over
//! block; structures carry the base quandle block then `n` lines giving each
//! `β_y` as its images. Writers separate blocks with one blank line; the
//! parser accepts blank lines anywhere between rows.
//!
//! Parsing validates shape and entry range only, with line/column
//! diagnostics; axioms are the verifiers' business.

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::structures::BiquandleStructure;
use crate::tables::{FiniteBiquandle, FiniteGroup, FiniteQuandle, OperationTable};

/// A parsed file: raw validated-shape tables, axioms not yet checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedFile {
    Quandle(OperationTable),
    Biquandle(OperationTable, OperationTable),
    Group(OperationTable),
    Structure {
        base: OperationTable,
        betas: Vec<Vec<usize>>,
    },
}

impl ParsedFile {
    pub fn kind(&self) -> &'static str {
        match self {
            ParsedFile::Quandle(_) => "quandle",
            ParsedFile::Biquandle(..) => "biquandle",
            ParsedFile::Group(_) => "group",
            ParsedFile::Structure { .. } => "structure",
        }
    }
}

pub fn parse_str(text: &str) -> Result<ParsedFile> {
    let mut lines = Lines::new(text);
    let (kind_line, kind) = lines.next_line()?;
    let kind = kind.trim();
    let n = {
        let (line_no, content) = lines.next_line()?;
        let mut row = parse_row_tokens(line_no, content)?;
        if row.len() != 1 {
            return Err(Error::Parse {
                line: line_no,
                col: 1,
                msg: format!("expected a single order value, found {} tokens", row.len()),
            });
        }
        let (col, value) = row.pop().unwrap();
        if value == 0 {
            return Err(Error::Parse {
                line: line_no,
                col,
                msg: "order must be positive".into(),
            });
        }
        value
    };
    let parsed = match kind {
        "quandle" => ParsedFile::Quandle(lines.block(n)?),
        "group" => ParsedFile::Group(lines.block(n)?),
        "biquandle" => {
            let under = lines.block(n)?;
            let over = lines.block(n)?;
            ParsedFile::Biquandle(under, over)
        }
        "structure" => {
            let base = lines.block(n)?;
            let mut betas = Vec::with_capacity(n);
            for _ in 0..n {
                betas.push(lines.row(n)?);
            }
            ParsedFile::Structure { base, betas }
        }
        other => {
            return Err(Error::Parse {
                line: kind_line,
                col: 1,
                msg: format!("unknown kind tag '{other}'"),
            })
        }
    };
    if let Some((line_no, _)) = lines.peek() {
        return Err(Error::Parse {
            line: line_no,
            col: 1,
            msg: "unexpected trailing content".into(),
        });
    }
    Ok(parsed)
}

struct Lines<'a> {
    remaining: Vec<(usize, &'a str)>,
    pos: usize,
    total_lines: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let mut remaining = Vec::new();
        let mut total_lines = 0;
        for (i, raw) in text.lines().enumerate() {
            total_lines = i + 1;
            let line = raw.strip_suffix('\r').unwrap_or(raw);
            if !line.trim().is_empty() {
                remaining.push((i + 1, line));
            }
        }
        Self {
            remaining,
            pos: 0,
            total_lines,
        }
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.remaining.get(self.pos).copied()
    }

    fn next_line(&mut self) -> Result<(usize, &'a str)> {
        match self.remaining.get(self.pos) {
            Some(&entry) => {
                self.pos += 1;
                Ok(entry)
            }
            None => Err(Error::Parse {
                line: self.total_lines + 1,
                col: 1,
                msg: "unexpected end of file".into(),
            }),
        }
    }

    /// One row of exactly `n` entries, each in `0..n`.
    fn row(&mut self, n: usize) -> Result<Vec<usize>> {
        let (line_no, content) = self.next_line()?;
        let tokens = parse_row_tokens(line_no, content)?;
        if tokens.len() != n {
            return Err(Error::Parse {
                line: line_no,
                col: 1,
                msg: format!("expected {n} entries, found {}", tokens.len()),
            });
        }
        let mut out = Vec::with_capacity(n);
        for (col, value) in tokens {
            if value >= n {
                return Err(Error::Parse {
                    line: line_no,
                    col,
                    msg: format!("entry {value} out of range for order {n}"),
                });
            }
            out.push(value);
        }
        Ok(out)
    }

    fn block(&mut self, n: usize) -> Result<OperationTable> {
        let mut rows = Vec::with_capacity(n);
        for _ in 0..n {
            rows.push(self.row(n)?);
        }
        Ok(OperationTable::from_rows(rows).expect("rows validated during parsing"))
    }
}

/// Tokenizes one line into `(1-based column, value)` pairs.
fn parse_row_tokens(line_no: usize, content: &str) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::new();
    let mut col = 0usize;
    let mut token_start = 0usize;
    let mut token = String::new();
    for ch in content.chars().chain(std::iter::once(' ')) {
        col += 1;
        if ch.is_whitespace() {
            if !token.is_empty() {
                let value: usize = token.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    col: token_start,
                    msg: format!("invalid integer '{token}'"),
                })?;
                out.push((token_start, value));
                token.clear();
            }
        } else {
            if token.is_empty() {
                token_start = col;
            }
            token.push(ch);
        }
    }
    Ok(out)
}

fn push_block(out: &mut String, rows: impl Iterator<Item = Vec<usize>>, pad: usize) {
    for row in rows {
        for (i, v) in row.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            if pad > 0 {
                out.push_str(&format!("{v:>pad$}"));
            } else {
                out.push_str(&v.to_string());
            }
        }
        out.push('\n');
    }
}

fn header(kind: &str, n: usize) -> String {
    format!("{kind}\n{n}\n")
}

pub fn write_quandle(q: &FiniteQuandle) -> String {
    write_quandle_padded(q, 0)
}

pub fn write_quandle_padded(q: &FiniteQuandle, pad: usize) -> String {
    let mut out = header("quandle", q.order());
    push_block(&mut out, q.op().rows().map(<[usize]>::to_vec), pad);
    out
}

pub fn write_biquandle(b: &FiniteBiquandle) -> String {
    write_biquandle_padded(b, 0)
}

pub fn write_biquandle_padded(b: &FiniteBiquandle, pad: usize) -> String {
    let mut out = header("biquandle", b.order());
    push_block(&mut out, b.under().rows().map(<[usize]>::to_vec), pad);
    out.push('\n');
    push_block(&mut out, b.over().rows().map(<[usize]>::to_vec), pad);
    out
}

pub fn write_group(g: &FiniteGroup) -> String {
    write_group_padded(g, 0)
}

pub fn write_group_padded(g: &FiniteGroup, pad: usize) -> String {
    let mut out = header("group", g.order());
    push_block(&mut out, g.table().rows().map(<[usize]>::to_vec), pad);
    out
}

pub fn write_structure(s: &BiquandleStructure) -> String {
    write_structure_padded(s, 0)
}

pub fn write_structure_padded(s: &BiquandleStructure, pad: usize) -> String {
    let mut out = header("structure", s.order());
    push_block(&mut out, s.base().op().rows().map(<[usize]>::to_vec), pad);
    out.push('\n');
    push_block(&mut out, s.betas().iter().map(|b| b.images().to_vec()), pad);
    out
}

/// Lifts parsed structure rows into permutations, rejecting non-bijections
/// with the offending index.
pub fn betas_from_rows(betas: &[Vec<usize>]) -> Result<Vec<Permutation>> {
    betas
        .iter()
        .map(|row| Permutation::from_images(row.clone()))
        .collect()
}
