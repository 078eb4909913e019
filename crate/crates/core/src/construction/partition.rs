use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{link_graph, LabeledGraph};
use crate::error::{Error, Result};
use crate::links::Link;
use crate::multigraph::SimpleGraph;

/// Vertex parts and edge parts of a labelled graph, each part carrying the
/// link it is keyed by.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlmostStandardPartition {
    pub vertex_parts: Vec<(Link, Vec<usize>)>,
    pub edge_parts: Vec<(Link, Vec<usize>)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionReport {
    pub a: bool,
    pub b: bool,
    pub c: bool,
    pub d: bool,
    pub e: bool,
}

impl PartitionReport {
    pub fn all(&self) -> bool {
        self.a && self.b && self.c && self.d && self.e
    }
}

fn group<T>(items: impl Iterator<Item = (Link, T)>) -> Vec<(Link, Vec<T>)> {
    let mut map: BTreeMap<Link, Vec<T>> = BTreeMap::new();
    for (k, v) in items {
        map.entry(k).or_default().push(v);
    }
    map.into_iter().collect()
}

/// Vertex parts keyed by the middle `(ell-2)`-segment, edge parts by the
/// middle `(ell-1)`-segment of the label.
pub fn natural_partition(h: &LabeledGraph<'_>) -> Result<AlmostStandardPartition> {
    let l = h.ell;
    if l < 2 {
        return Err(Error::WindowTooShort { min: 2, got: l });
    }
    let vertex_parts = group(
        h.vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.segment(1, l - 1).expect("in range"), i)),
    );
    let edge_parts = group(
        h.edges
            .iter()
            .enumerate()
            .map(|(i, e)| (e.label.segment(1, l).expect("in range"), i)),
    );
    Ok(AlmostStandardPartition { vertex_parts, edge_parts })
}

fn part_index(parts: &[(Link, Vec<usize>)], n: usize, what: &str) -> Result<Vec<usize>> {
    let mut owner = vec![usize::MAX; n];
    for (p, (_, members)) in parts.iter().enumerate() {
        for &m in members {
            if m >= n || owner[m] != usize::MAX {
                return Err(Error::PartitionMismatch(format!("{what} {m} is out of range or repeated")));
            }
            owner[m] = p;
        }
    }
    if let Some(m) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(Error::PartitionMismatch(format!("{what} {m} is in no part")));
    }
    Ok(owner)
}

/// Checks conditions (a) to (e) one by one.
pub fn verify_almost_standard(
    h: &LabeledGraph<'_>,
    partition: &AlmostStandardPartition,
) -> Result<PartitionReport> {
    let vpart = part_index(&partition.vertex_parts, h.order(), "vertex")?;
    let epart = part_index(&partition.edge_parts, h.size(), "edge")?;

    // (a) vertex parts are independent
    let a = h.edges.iter().all(|e| vpart[e.ends.0] != vpart[e.ends.1]);

    // (b) each edge part meets exactly two vertex parts
    let b = partition.edge_parts.iter().all(|(_, members)| {
        let touched: BTreeSet<usize> = members
            .iter()
            .flat_map(|&i| [vpart[h.edges[i].ends.0], vpart[h.edges[i].ends.1]])
            .collect();
        touched.len() == 2
    });

    // (c) each edge part is the edge set of a complete bipartite graph
    let c = partition.edge_parts.iter().all(|(_, members)| {
        let mut verts: Vec<usize> =
            members.iter().flat_map(|&i| [h.edges[i].ends.0, h.edges[i].ends.1]).collect();
        verts.sort_unstable();
        verts.dedup();
        let local = |v: usize| verts.binary_search(&v).unwrap();
        let pairs: BTreeSet<(usize, usize)> = members
            .iter()
            .map(|&i| (local(h.edges[i].ends.0), local(h.edges[i].ends.1)))
            .collect();
        if pairs.len() != members.len() {
            return false;
        }
        let sg = SimpleGraph::from_edges(verts.len(), pairs.iter().copied());
        let Some(side) = sg.two_coloring() else {
            return false;
        };
        let left = side.iter().filter(|&&s| s == 0).count();
        sg.is_connected() && members.len() == left * (verts.len() - left)
    });

    // (d) each vertex meets at most two edge parts
    let mut incident: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); h.order()];
    for (i, e) in h.edges.iter().enumerate() {
        incident[e.ends.0].insert(epart[i]);
        incident[e.ends.1].insert(epart[i]);
    }
    let d = incident.iter().all(|s| s.len() <= 2);

    // (e) within one vertex part, a pair of edge parts is shared by at most one vertex
    let mut seen: BTreeSet<(usize, usize, usize)> = BTreeSet::new();
    let mut e_ok = true;
    for (v, parts) in incident.iter().enumerate() {
        let parts: Vec<usize> = parts.iter().copied().collect();
        for x in 0..parts.len() {
            for y in x + 1..parts.len() {
                if !seen.insert((vpart[v], parts[x], parts[y])) {
                    e_ok = false;
                }
            }
        }
    }

    Ok(PartitionReport { a, b, c, d, e: e_ok })
}

/// The quotient multigraph: one vertex per vertex part, one edge per edge
/// part joining the two vertex parts it meets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientGraph {
    pub vertices: Vec<Link>,
    pub edges: Vec<(usize, usize, Link)>,
}

pub fn quotient(h: &LabeledGraph<'_>, partition: &AlmostStandardPartition) -> Result<QuotientGraph> {
    let vpart = part_index(&partition.vertex_parts, h.order(), "vertex")?;
    part_index(&partition.edge_parts, h.size(), "edge")?;
    let mut edges = Vec::new();
    for (key, members) in &partition.edge_parts {
        let touched: BTreeSet<usize> = members
            .iter()
            .flat_map(|&i| [vpart[h.edges[i].ends.0], vpart[h.edges[i].ends.1]])
            .collect();
        let ends: Vec<usize> = touched.into_iter().collect();
        if ends.len() != 2 {
            return Err(Error::PartitionMismatch(format!(
                "edge part meets {} vertex parts",
                ends.len()
            )));
        }
        edges.push((ends[0], ends[1], key.clone()));
    }
    Ok(QuotientGraph {
        vertices: partition.vertex_parts.iter().map(|(k, _)| k.clone()).collect(),
        edges,
    })
}

/// Maps each vertex part key to a vertex of the `(ell-2)`-link graph and
/// each edge part key to an edge there, and checks that this is an
/// isomorphism onto an induced subgraph.
pub fn quotient_embedding_check(h: &LabeledGraph<'_>, limit: usize) -> Result<bool> {
    let partition = natural_partition(h)?;
    let q = quotient(h, &partition)?;
    let lower = link_graph(h.source, h.ell - 2, limit)?;
    Ok(embeds_as_induced(&q, &lower))
}

pub(crate) fn embeds_as_induced(q: &QuotientGraph, lower: &LabeledGraph<'_>) -> bool {
    let mut vmap = Vec::with_capacity(q.vertices.len());
    for key in &q.vertices {
        match lower.vertex_index(key) {
            Some(i) => vmap.push(i),
            None => return false,
        }
    }
    let image: BTreeSet<usize> = vmap.iter().copied().collect();
    if image.len() != vmap.len() {
        return false;
    }
    let mut used = BTreeSet::new();
    for (a, b, key) in &q.edges {
        let Some(k) = lower.edge_index(key) else {
            return false;
        };
        let (x, y) = (vmap[*a], vmap[*b]);
        if lower.edges[k].ends != (x.min(y), x.max(y)) || !used.insert(k) {
            return false;
        }
    }
    lower
        .edges
        .iter()
        .enumerate()
        .filter(|(_, e)| image.contains(&e.ends.0) && image.contains(&e.ends.1))
        .all(|(k, _)| used.contains(&k))
}
