//! Plain-text arc lists.
//!
//! ```text
//! # directed triangle
//! n 3
//! 0 1
//! 1 2
//! 2 0
//! ```
//!
//! The first non-comment line is `n <N>`; every later non-comment line is an
//! arc `u v` (0-based). `#` starts a comment and blank lines are ignored.

use std::fmt::Write as _;

use crate::error::GraphError;
use crate::graph::Digraph;

pub fn parse_arc_list(text: &str) -> Result<Digraph, GraphError> {
    let mut n: Option<usize> = None;
    let mut arcs = Vec::new();
    let mut arc_lines = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        let err = |msg: String| GraphError::Parse { line: line_no, msg };
        match n {
            None => {
                if fields.len() != 2 || fields[0] != "n" {
                    return Err(err(format!("expected `n <N>`, found `{line}`")));
                }
                let count: usize = fields[1]
                    .parse()
                    .map_err(|_| err(format!("bad vertex count `{}`", fields[1])))?;
                if count == 0 {
                    return Err(err("vertex count must be positive".into()));
                }
                n = Some(count);
            }
            Some(_) => {
                if fields.len() != 2 {
                    return Err(err(format!("expected `<u> <v>`, found `{line}`")));
                }
                let parse = |s: &str| s.parse::<usize>().map_err(|_| err(format!("bad vertex index `{s}`")));
                arcs.push((parse(fields[0])?, parse(fields[1])?));
                arc_lines.push(line_no);
            }
        }
    }
    let n = n.ok_or(GraphError::Parse {
        line: 0,
        msg: "missing `n <N>` header".into(),
    })?;
    // Re-run the checks arc by arc so the error carries its line number.
    for (&(u, v), &line) in arcs.iter().zip(&arc_lines) {
        if let Err(e) = Digraph::from_arcs(n, [(u, v)]) {
            return Err(GraphError::Parse { line, msg: e.to_string() });
        }
    }
    Digraph::from_arcs(n, arcs)
}

/// Canonical text form: header, then arcs in lexicographic order.
pub fn write_arc_list(g: &Digraph) -> String {
    let mut out = String::new();
    if let Some(labels) = g.labels() {
        let _ = writeln!(out, "# labels: {}", labels.join(" "));
    }
    let _ = writeln!(out, "n {}", g.order());
    for (u, v) in g.arcs() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
