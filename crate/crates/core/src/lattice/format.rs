//! Text format for finite lattices.
//!
//! ```text
//! # the 3-chain
//! lattice 3
//! labels 0 m 1
//! covers
//! 0 < 1
//! 1 < 2
//! ```
//!
//! After the `lattice <n>` header, pairs are `i < j` (a cover) or `i <= j`
//! (an order pair). Both are closed reflexively and transitively, so the
//! optional `covers` / `leq` mode lines only document intent. Labels are
//! given either all at once with `labels ...` or one at a time with
//! `label <i> <name>`. Blank lines and `#` comments are ignored.

use std::fmt::Write as _;

use crate::config::Budget;

use super::{FinitePoset, LatticeError};

/// Parses a lattice file into a canonical poset.
pub fn parse_lattice(text: &str, budget: &Budget) -> Result<FinitePoset, LatticeError> {
    let mut size: Option<usize> = None;
    let mut labels: Option<Vec<String>> = None;
    let mut pairs = Vec::new();
    let err = |line: usize, message: String| LatticeError::Parse { line, message };

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let Some(n) = size else {
            match tokens.as_slice() {
                ["lattice", n] => {
                    let n: usize = n
                        .parse()
                        .map_err(|_| err(line_no, format!("bad element count `{n}`")))?;
                    if n > budget.max_carrier {
                        return Err(LatticeError::TooLarge {
                            size: n,
                            limit: budget.max_carrier,
                        });
                    }
                    size = Some(n);
                    continue;
                }
                _ => return Err(err(line_no, "expected header `lattice <n>`".into())),
            }
        };
        match tokens.as_slice() {
            ["covers"] | ["leq"] => {}
            ["labels", rest @ ..] => {
                if rest.len() != n {
                    return Err(err(
                        line_no,
                        format!("expected {n} labels, found {}", rest.len()),
                    ));
                }
                labels = Some(rest.iter().map(|s| s.to_string()).collect());
            }
            ["label", i, name] => {
                let i = parse_index(i, n).map_err(|m| err(line_no, m))?;
                let l = labels.get_or_insert_with(|| (0..n).map(|k| k.to_string()).collect());
                l[i] = name.to_string();
            }
            [a, op, b] if *op == "<" || *op == "<=" => {
                let a = parse_index(a, n).map_err(|m| err(line_no, m))?;
                let b = parse_index(b, n).map_err(|m| err(line_no, m))?;
                if *op == "<" && a == b {
                    return Err(err(line_no, format!("strict cover {a} < {a}")));
                }
                pairs.push((a, b));
            }
            _ => return Err(err(line_no, format!("unrecognized line `{line}`"))),
        }
    }
    let n = size.ok_or_else(|| err(0, "missing header `lattice <n>`".into()))?;
    FinitePoset::from_pairs(n, &pairs, labels)
}

fn parse_index(tok: &str, n: usize) -> Result<usize, String> {
    let i: usize = tok
        .parse()
        .map_err(|_| format!("bad element index `{tok}`"))?;
    if i >= n {
        return Err(format!("element index {i} out of range for {n} elements"));
    }
    Ok(i)
}

/// Canonical text form: header, labels, and the cover relation.
pub fn write_lattice(poset: &FinitePoset) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "lattice {}", poset.size());
    let _ = writeln!(out, "labels {}", poset.labels().join(" "));
    let _ = writeln!(out, "covers");
    for (a, b) in poset.covers() {
        let _ = writeln!(out, "{a} < {b}");
    }
    out
}
