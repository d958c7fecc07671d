//! Text formats for triple systems and Cayley tables.
//!
//! Both formats skip blank lines and lines starting with `#`. The first data
//! line holds a single integer: the point count `v` of a triple system, or the
//! order `m` of a table. A triple system follows with one block `a b c` per
//! line; a table follows with `m` rows of `m` space-separated entries.
//!
//! Writers emit the canonical form: no comments, sorted blocks, single
//! spaces, and a trailing newline.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use steiner_core::{
    loop_to_sts, quasigroup_to_loop, quasigroup_to_sts, sts_to_loop, validate_sts, CayleyTable, LoopTable,
    QuasigroupTable, TripleSystem,
};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("empty input: no header line")]
    Empty,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("invalid triple system: {0}")]
    InvalidSystem(String),
    #[error("invalid table: {0}")]
    InvalidTable(steiner_core::Error),
    #[error("expected {expected}, found {found}")]
    WrongKind { expected: &'static str, found: &'static str },
    #[error(transparent)]
    Convert(steiner_core::Error),
}

/// What a file holds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Kind {
    Sts,
    Loop,
    Quasigroup,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::Sts => "triple system",
            Kind::Loop => "loop table",
            Kind::Quasigroup => "quasigroup table",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Document {
    Sts(TripleSystem),
    Loop(LoopTable),
    Quasigroup(QuasigroupTable),
}

impl Document {
    pub fn kind(&self) -> Kind {
        match self {
            Document::Sts(_) => Kind::Sts,
            Document::Loop(_) => Kind::Loop,
            Document::Quasigroup(_) => Kind::Quasigroup,
        }
    }

    pub fn to_text(&self) -> String {
        match self {
            Document::Sts(s) => write_sts(s),
            Document::Loop(t) => write_table(t),
            Document::Quasigroup(q) => write_table(q),
        }
    }

    /// The loop this document describes; systems and quasigroups must be Steiner.
    pub fn into_loop(self) -> Result<LoopTable, FormatError> {
        match self {
            Document::Loop(t) => Ok(t),
            Document::Sts(s) => sts_to_loop(&s).map_err(FormatError::Convert),
            Document::Quasigroup(q) => quasigroup_to_loop(&q).map_err(FormatError::Convert),
        }
    }

    /// The triple system this document describes; tables must be Steiner.
    pub fn into_sts(self) -> Result<TripleSystem, FormatError> {
        match self {
            Document::Sts(s) => Ok(s),
            Document::Loop(t) => loop_to_sts(&t).map_err(FormatError::Convert),
            Document::Quasigroup(q) => quasigroup_to_sts(&q).map_err(FormatError::Convert),
        }
    }
}

pub fn write_sts(s: &TripleSystem) -> String {
    let mut out = format!("{}\n", s.v());
    for [a, b, c] in s.blocks() {
        writeln!(out, "{a} {b} {c}").unwrap();
    }
    out
}

pub fn write_table<T: CayleyTable + ?Sized>(t: &T) -> String {
    let n = t.order();
    let mut out = format!("{n}\n");
    for x in 0..n {
        let row: Vec<String> = (0..n).map(|y| t.mul(x, y).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

struct DataLine<'a> {
    number: usize,
    text: &'a str,
}

fn data_lines(text: &str) -> impl Iterator<Item = DataLine<'_>> {
    text.lines()
        .enumerate()
        .map(|(i, l)| DataLine { number: i + 1, text: l.trim() })
        .filter(|l| !l.text.is_empty() && !l.text.starts_with('#'))
}

fn numbers(line: &DataLine<'_>) -> Result<Vec<usize>, FormatError> {
    line.text
        .split_whitespace()
        .map(|tok| {
            usize::from_str(tok).map_err(|_| FormatError::Syntax {
                line: line.number,
                message: format!("expected a nonnegative integer, found {tok:?}"),
            })
        })
        .collect()
}

/// Parses a document, inferring its kind unless `kind` is given.
///
/// A body of exactly `m` rows of `m` entries is a table; anything else is a
/// triple system. A table is a loop when element 0 is a two-sided identity.
pub fn parse_document(text: &str, kind: Option<Kind>) -> Result<Document, FormatError> {
    let mut lines = data_lines(text);
    let header = lines.next().ok_or(FormatError::Empty)?;
    let size = match numbers(&header)?.as_slice() {
        [n] => *n,
        _ => {
            return Err(FormatError::Syntax {
                line: header.number,
                message: "header must be a single integer".into(),
            })
        }
    };
    let body: Vec<(usize, Vec<usize>)> =
        lines.map(|l| numbers(&l).map(|n| (l.number, n))).collect::<Result<_, _>>()?;
    let looks_like_table = size > 0 && body.len() == size && body.iter().all(|(_, r)| r.len() == size);
    let inferred = kind.is_none();
    let kind = kind.unwrap_or(if looks_like_table { Kind::Loop } else { Kind::Sts });
    match kind {
        Kind::Sts => parse_sts_body(size, &body).map(Document::Sts),
        Kind::Loop | Kind::Quasigroup => {
            if let Some((line, row)) = body.iter().find(|(_, r)| r.len() != size) {
                return Err(FormatError::Syntax {
                    line: *line,
                    message: format!("row has {} entries, expected {size}", row.len()),
                });
            }
            if body.len() != size {
                return Err(FormatError::Syntax {
                    line: header.number,
                    message: format!("table has {} rows, expected {size}", body.len()),
                });
            }
            let entries: Vec<usize> = body.into_iter().flat_map(|(_, r)| r).collect();
            if kind == Kind::Quasigroup {
                return QuasigroupTable::new(size, &entries)
                    .map(Document::Quasigroup)
                    .map_err(FormatError::InvalidTable);
            }
            match LoopTable::new(size, &entries) {
                Ok(t) => Ok(Document::Loop(t)),
                // Inferred tables without an identity at 0 are quasigroups.
                Err(steiner_core::Error::MissingIdentity { .. }) if inferred => {
                    QuasigroupTable::new(size, &entries)
                        .map(Document::Quasigroup)
                        .map_err(FormatError::InvalidTable)
                }
                Err(e) => Err(FormatError::InvalidTable(e)),
            }
        }
    }
}

fn parse_sts_body(v: usize, body: &[(usize, Vec<usize>)]) -> Result<TripleSystem, FormatError> {
    let mut blocks = Vec::with_capacity(body.len());
    for (line, nums) in body {
        match nums.as_slice() {
            &[a, b, c] => blocks.push([a, b, c]),
            _ => {
                return Err(FormatError::Syntax {
                    line: *line,
                    message: format!("block has {} points, expected 3", nums.len()),
                })
            }
        }
    }
    let report = validate_sts(v, &blocks);
    if !report.valid {
        let shown: Vec<String> =
            report.violations.iter().take(5).map(|v| format!("{} {:?}", v.rule, v.witness)).collect();
        let more = report.violations.len() + report.truncated - shown.len();
        let mut message = shown.join("; ");
        if more > 0 {
            write!(message, "; and {more} more").unwrap();
        }
        return Err(FormatError::InvalidSystem(message));
    }
    Ok(TripleSystem::new(v, blocks).expect("validated"))
}

pub fn read_document(path: &Path, kind: Option<Kind>) -> Result<Document, FormatError> {
    let text = std::fs::read_to_string(path)
        .map_err(|source| FormatError::Io { path: path.display().to_string(), source })?;
    parse_document(&text, kind)
}

pub fn write_document(path: &Path, doc: &Document) -> Result<(), FormatError> {
    std::fs::write(path, doc.to_text())
        .map_err(|source| FormatError::Io { path: path.display().to_string(), source })
}
