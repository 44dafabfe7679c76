//! Plain-text skew brace files.
//!
//! The format is line-oriented:
//!
//! ```text
//! skewbrace v1
//! order 3
//! add
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! mul
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! ```
//!
//! Blank lines and lines whose first non-space character is `#` are
//! ignored everywhere. The serializer always emits the canonical form
//! above (no comments, single spaces, trailing newline), and parsing a
//! serialized brace reproduces it exactly.

use crate::brace::{make_brace, BraceError, SkewBrace};
use crate::group::MAX_ORDER;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    /// The text does not match the grammar; `line` is 1-based.
    #[error("parse error at line {line}: {reason}")]
    Parse { line: usize, reason: String },
    /// The tables parsed fine but do not form a skew brace.
    #[error("invalid brace: {0}")]
    Validation(#[from] BraceError),
}

/// Serializes to the canonical file form.
pub fn serialize_brace(b: &SkewBrace) -> String {
    let n = b.order();
    let mut out = String::new();
    out.push_str("skewbrace v1\n");
    out.push_str(&format!("order {n}\n"));
    for (label, table) in [("add", b.add_group()), ("mul", b.mul_group())] {
        out.push_str(label);
        out.push('\n');
        for x in 0..n {
            let row: Vec<String> = (0..n).map(|y| table.op(x, y).to_string()).collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
    }
    out
}

/// Filtered line stream with 1-based source line numbers.
struct Cursor<'a> {
    lines: Vec<(usize, &'a str)>,
    pos: usize,
    eof_line: usize,
}

impl<'a> Cursor<'a> {
    fn new(text: &'a str) -> Cursor<'a> {
        let lines: Vec<(usize, &str)> = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .collect();
        Cursor {
            lines,
            pos: 0,
            eof_line: text.lines().count() + 1,
        }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str), IoError> {
        match self.lines.get(self.pos) {
            Some(&(no, l)) => {
                self.pos += 1;
                Ok((no, l))
            }
            None => Err(IoError::Parse {
                line: self.eof_line,
                reason: format!("unexpected end of file, expected {what}"),
            }),
        }
    }

    fn peek(&self) -> Option<(usize, &'a str)> {
        self.lines.get(self.pos).copied()
    }
}

fn read_table(cur: &mut Cursor<'_>, label: &str, n: usize) -> Result<Vec<Vec<usize>>, IoError> {
    let (no, l) = cur.next(&format!("`{label}`"))?;
    if l != label {
        return Err(IoError::Parse {
            line: no,
            reason: format!("expected `{label}`, found `{l}`"),
        });
    }
    let mut rows = Vec::with_capacity(n);
    for r in 0..n {
        let (no, l) = cur.next(&format!("row {r} of `{label}`"))?;
        let row: Vec<usize> = l
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| IoError::Parse {
                    line: no,
                    reason: format!("`{tok}` is not a number"),
                })
            })
            .collect::<Result<_, _>>()?;
        if row.len() != n {
            return Err(IoError::Parse {
                line: no,
                reason: format!("row has {} entries, expected {n}", row.len()),
            });
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Parses and fully validates a brace file.
pub fn parse_brace(text: &str) -> Result<SkewBrace, IoError> {
    let mut cur = Cursor::new(text);
    let (no, header) = cur.next("header `skewbrace v1`")?;
    if header != "skewbrace v1" {
        return Err(IoError::Parse {
            line: no,
            reason: format!("expected header `skewbrace v1`, found `{header}`"),
        });
    }
    let (no, order_line) = cur.next("`order <n>`")?;
    let n: usize = match order_line.strip_prefix("order ") {
        Some(rest) => rest.trim().parse().map_err(|_| IoError::Parse {
            line: no,
            reason: format!("cannot read order from `{order_line}`"),
        })?,
        None => {
            return Err(IoError::Parse {
                line: no,
                reason: format!("expected `order <n>`, found `{order_line}`"),
            })
        }
    };
    if n == 0 || n > MAX_ORDER {
        return Err(IoError::Parse {
            line: no,
            reason: format!("order must be between 1 and {MAX_ORDER}, found {n}"),
        });
    }
    let add = read_table(&mut cur, "add", n)?;
    let mul = read_table(&mut cur, "mul", n)?;
    if let Some((no, l)) = cur.peek() {
        return Err(IoError::Parse {
            line: no,
            reason: format!("trailing content after tables: `{l}`"),
        });
    }
    Ok(make_brace(&add, &mul)?)
}
