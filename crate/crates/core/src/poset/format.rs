//! The `.poset` text format.
//!
//! ```text
//! # comment
//! elem a
//! elem b
//! lt a b
//! ```
//!
//! Blank lines and lines starting with `#` (after leading spaces) are
//! skipped. `lt` may only name previously declared elements; repeated `lt`
//! lines are harmless.

use std::collections::HashMap;

use super::Poset;
use crate::error::{Error, Result};

/// Splits a document into `(line number, fields)` for every meaningful line.
/// Shared with the mapping format, which follows the same lexical rules.
pub(crate) fn significant_lines(text: &str) -> Result<Vec<(usize, Vec<&str>)>> {
    let mut out = Vec::new();
    for (i, raw) in text.split('\n').enumerate() {
        let line = raw.strip_suffix('\r').unwrap_or(raw).trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        if let Some(bad) = fields.iter().find(|f| f.contains('#')) {
            return Err(Error::Syntax {
                line: i + 1,
                message: format!("`#` is not allowed inside a token (`{bad}`)"),
            });
        }
        out.push((i + 1, fields));
    }
    Ok(out)
}

pub fn parse_poset(text: &str) -> Result<Poset> {
    let mut tokens: Vec<String> = Vec::new();
    let mut index: HashMap<&str, usize> = HashMap::new();
    let mut relations = Vec::new();

    for (line, fields) in significant_lines(text)? {
        match fields.as_slice() {
            ["elem", token] => {
                if index.contains_key(token) {
                    return Err(Error::DuplicateElement {
                        line,
                        token: token.to_string(),
                    });
                }
                index.insert(token, tokens.len());
                tokens.push(token.to_string());
            }
            ["lt", a, b] => {
                let lookup = |t: &str| {
                    index.get(t).copied().ok_or_else(|| Error::UndeclaredElement {
                        line,
                        token: t.to_string(),
                    })
                };
                relations.push((lookup(a)?, lookup(b)?));
            }
            ["elem", ..] => {
                return Err(Error::Syntax {
                    line,
                    message: "expected `elem <token>`".into(),
                })
            }
            ["lt", ..] => {
                return Err(Error::Syntax {
                    line,
                    message: "expected `lt <token> <token>`".into(),
                })
            }
            [other, ..] => {
                return Err(Error::Syntax {
                    line,
                    message: format!("unknown directive `{other}`"),
                })
            }
            [] => unreachable!("blank lines are filtered"),
        }
    }
    Poset::new(tokens, relations)
}

/// Elements in declaration order, then covering pairs in topological order.
pub fn serialize_poset(p: &Poset) -> String {
    let mut out = String::new();
    for t in p.tokens() {
        out.push_str("elem ");
        out.push_str(t);
        out.push('\n');
    }
    for (x, y) in p.hasse_pairs() {
        out.push_str(&format!("lt {} {}\n", p.token(x), p.token(y)));
    }
    out
}
