//! Plain-text edge lists.
//!
//! ```text
//! # comment
//! n 4
//! 0 1
//! 1 2
//! 3 2
//! ```
//!
//! The first non-comment line is `n <count>`; each following line `u v`
//! is an arc from `u` to `v`. Lines starting with `#` and blank lines are
//! skipped. Vertices are 0-indexed decimals.

use std::fmt::Write as _;

use crate::digraph::Digraph;
use crate::error::{Error, Result};

pub fn parse(text: &str) -> Result<Digraph> {
    let mut n: Option<usize> = None;
    let mut arcs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let parse_err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        match n {
            None => {
                if fields.len() != 2 || fields[0] != "n" {
                    return Err(parse_err(format!("expected `n <count>`, found `{line}`")));
                }
                let count = fields[1]
                    .parse::<usize>()
                    .map_err(|_| parse_err(format!("invalid vertex count `{}`", fields[1])))?;
                n = Some(count);
            }
            Some(count) => {
                if fields.len() != 2 {
                    return Err(parse_err(format!("expected `u v`, found `{line}`")));
                }
                let mut ends = [0usize; 2];
                for (slot, field) in ends.iter_mut().zip(&fields) {
                    *slot = field
                        .parse::<usize>()
                        .map_err(|_| parse_err(format!("invalid vertex `{field}`")))?;
                    if *slot >= count {
                        return Err(parse_err(format!("vertex {slot} out of range (n = {count})")));
                    }
                }
                if ends[0] == ends[1] {
                    return Err(parse_err(format!("loop arc ({0}, {0})", ends[0])));
                }
                arcs.push((ends[0], ends[1]));
            }
        }
    }
    let n = n.ok_or_else(|| Error::Parse {
        line: text.lines().count().max(1),
        message: "missing `n <count>` header".into(),
    })?;
    Digraph::new(n, arcs)
}

/// Serializes with arcs in lexicographic order.
pub fn serialize(d: &Digraph) -> String {
    let mut out = String::new();
    writeln!(out, "n {}", d.n()).unwrap();
    for (u, v) in d.arcs() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
