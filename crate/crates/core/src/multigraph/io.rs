use std::fmt::Write as _;

use super::{Multigraph, MultigraphBuilder};
use crate::error::{Error, Result};

/// Parses the plain edge-list format.
///
/// `#` starts a comment line, `v NAME` declares a vertex, and any other
/// non-blank line must be exactly two tokens `U V`, one edge each. Edges get
/// ids `e1`, `e2`, ... in line order.
pub fn parse_edge_list(text: &str) -> Result<Multigraph> {
    let mut b = MultigraphBuilder::new();
    let mut next_edge = 1;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match tokens.as_slice() {
            ["v", name] => {
                b.vertex(*name);
            }
            [u, v] if u == v => return Err(Error::LoopRejected { line }),
            [u, v] => {
                b.edge(format!("e{next_edge}"), *u, *v)?;
                next_edge += 1;
            }
            _ => {
                return Err(Error::MalformedLine { line, text: raw.to_owned() });
            }
        }
    }
    b.build()
}

pub fn parse_edge_list_bytes(bytes: &[u8]) -> Result<Multigraph> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))?;
    parse_edge_list(text)
}

/// Vertices first (sorted), then one line per edge in edge-id order.
/// An edge whose first endpoint is literally named `v` is written the other
/// way round so it is not read back as a vertex declaration.
pub fn to_edge_list(g: &Multigraph) -> String {
    let mut out = String::new();
    for v in g.vertex_ids() {
        let _ = writeln!(out, "v {v}");
    }
    for e in 0..g.size() {
        let (a, b) = g.endpoints(e);
        let (mut u, mut w) = (g.vertex_id(a), g.vertex_id(b));
        if u.0 == "v" {
            std::mem::swap(&mut u, &mut w);
        }
        let _ = writeln!(out, "{u} {w}");
    }
    out
}

pub fn to_dot(g: &Multigraph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertex_ids() {
        let _ = writeln!(out, "  {:?};", v.0);
    }
    for e in 0..g.size() {
        let (a, b) = g.endpoints(e);
        let _ = writeln!(
            out,
            "  {:?} -- {:?} [label={:?}];",
            g.vertex_id(a).0,
            g.vertex_id(b).0,
            g.edge_id(e).0
        );
    }
    out.push_str("}\n");
    out
}
