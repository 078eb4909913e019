//! JSON, DOT and edge-list renderings of derived graphs, colourings and
//! minor witnesses. Links are written as `[v0 e1 v1 ...]` with ids.

use serde_json::{json, Map, Value};

use crate::coloring::Coloring;
use crate::construction::{AlmostStandardPartition, LabeledDigraph, LabeledGraph};
use crate::links::Link;
use crate::minors::MinorWitness;
use crate::multigraph::Multigraph;

fn name(g: &Multigraph, l: &Link) -> String {
    l.display(g).to_string()
}

fn quoted(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn graph_json(h: &LabeledGraph<'_>) -> Value {
    let g = h.source;
    json!({
        "ell": h.ell,
        "vertices": h.vertices.iter().map(|v| name(g, v)).collect::<Vec<_>>(),
        "edges": h.edges.iter().map(|e| json!([e.ends.0, e.ends.1, name(g, &e.label)])).collect::<Vec<_>>(),
    })
}

pub fn digraph_json(d: &LabeledDigraph, g: &Multigraph) -> Value {
    json!({
        "ell": d.ell,
        "vertices": d.vertices.iter().map(|v| v.display(g).to_string()).collect::<Vec<_>>(),
        "arcs": d.arcs.iter().map(|(t, h, a)| json!([t, h, a.display(g).to_string()])).collect::<Vec<_>>(),
    })
}

pub fn graph_dot(h: &LabeledGraph<'_>) -> String {
    let g = h.source;
    let mut out = format!("graph L{} {{\n", h.ell);
    for (i, v) in h.vertices.iter().enumerate() {
        out += &format!("  {i} [label={}];\n", quoted(&name(g, v)));
    }
    for e in &h.edges {
        out += &format!("  {} -- {} [label={}];\n", e.ends.0, e.ends.1, quoted(&name(g, &e.label)));
    }
    out + "}\n"
}

pub fn digraph_dot(d: &LabeledDigraph, g: &Multigraph) -> String {
    let mut out = format!("digraph A{} {{\n", d.ell);
    for (i, v) in d.vertices.iter().enumerate() {
        out += &format!("  {i} [label={}];\n", quoted(&v.display(g).to_string()));
    }
    for (t, h, a) in &d.arcs {
        out += &format!("  {t} -> {h} [label={}];\n", quoted(&a.display(g).to_string()));
    }
    out + "}\n"
}

/// Vertices named by their links with commas for spaces, so the output
/// parses back as an edge list. Edge labels are dropped.
pub fn graph_edgelist(h: &LabeledGraph<'_>) -> String {
    let g = h.source;
    let token = |l: &Link| name(g, l).replace(' ', ",");
    let mut out = String::new();
    for v in &h.vertices {
        out += &format!("v {}\n", token(v));
    }
    for e in &h.edges {
        out += &format!("{} {}\n", token(&h.vertices[e.ends.0]), token(&h.vertices[e.ends.1]));
    }
    out
}

/// The link graph with one DOT cluster per vertex part.
pub fn partition_dot(h: &LabeledGraph<'_>, p: &AlmostStandardPartition) -> String {
    let g = h.source;
    let mut out = format!("graph L{} {{\n", h.ell);
    for (k, (key, members)) in p.vertex_parts.iter().enumerate() {
        out += &format!("  subgraph cluster_{k} {{\n    label={};\n", quoted(&name(g, key)));
        for &i in members {
            out += &format!("    {i} [label={}];\n", quoted(&name(g, &h.vertices[i])));
        }
        out += "  }\n";
    }
    for e in &h.edges {
        out += &format!("  {} -- {};\n", e.ends.0, e.ends.1);
    }
    out + "}\n"
}

pub fn coloring_json(h: &LabeledGraph<'_>, c: &Coloring) -> Value {
    let mut m = Map::new();
    for (v, &col) in h.vertices.iter().zip(&c.colors) {
        m.insert(name(h.source, v), json!(col));
    }
    Value::Object(m)
}

pub fn witness_json(h: &LabeledGraph<'_>, w: &MinorWitness) -> Value {
    let g = h.source;
    let names = |ix: &[usize]| ix.iter().map(|&i| name(g, &h.vertices[i])).collect::<Vec<_>>();
    let mut connectors = Map::new();
    for (&(i, j), path) in &w.connectors {
        connectors.insert(format!("{i}-{j}"), json!(names(path)));
    }
    json!({
        "target": w.target_name(),
        "branch_sets": w.branch_sets.iter().map(|s| names(s)).collect::<Vec<_>>(),
        "connectors": connectors,
    })
}
