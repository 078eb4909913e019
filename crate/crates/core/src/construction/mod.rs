//! Link graphs, path graphs and arc digraphs built from a multigraph.

mod connectivity;
mod digraph;
mod partition;

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::links::{enumerate_links, Link};
use crate::multigraph::{Multigraph, SimpleGraph};

pub use connectivity::{hub_links, link_graph_connected};
pub use digraph::{
    arc_digraph, digraph_natural_iso_check, iterated_line_digraph, natural_iso, LabeledDigraph,
};
pub(crate) use partition::embeds_as_induced;
pub use partition::{
    natural_partition, quotient, quotient_embedding_check, verify_almost_standard,
    AlmostStandardPartition, PartitionReport, QuotientGraph,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledEdge {
    /// Vertex indices, smaller first.
    pub ends: (usize, usize),
    pub label: Link,
}

/// A graph whose vertices are `ell`-links of `source` and whose edges are
/// labelled by `(ell+1)`-links.
#[derive(Clone, Debug)]
pub struct LabeledGraph<'g> {
    pub ell: usize,
    pub vertices: Vec<Link>,
    pub edges: Vec<LabeledEdge>,
    pub source: &'g Multigraph,
}

impl<'g> LabeledGraph<'g> {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_index(&self, link: &Link) -> Option<usize> {
        self.vertices.binary_search(link).ok()
    }

    pub fn edge_index(&self, label: &Link) -> Option<usize> {
        self.edges.binary_search_by(|e| e.label.cmp(label)).ok()
    }

    pub fn underlying_simple(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.order(), self.edges.iter().map(|e| e.ends))
    }

    /// Degrees counting parallel edges.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.order()];
        for e in &self.edges {
            d[e.ends.0] += 1;
            d[e.ends.1] += 1;
        }
        d
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.degrees();
        let first = *d.first()?;
        d.iter().all(|&x| x == first).then_some(first)
    }

    /// Edge indices grouped by endpoint pair, in pair order.
    pub fn parallel_classes(&self) -> Vec<((usize, usize), Vec<usize>)> {
        let mut order: Vec<usize> = (0..self.size()).collect();
        order.sort_by_key(|&i| (self.edges[i].ends, i));
        let mut out: Vec<((usize, usize), Vec<usize>)> = Vec::new();
        for i in order {
            let ends = self.edges[i].ends;
            match out.last_mut() {
                Some((last, list)) if *last == ends => list.push(i),
                _ => out.push((ends, vec![i])),
            }
        }
        out
    }

    pub fn max_multiplicity(&self) -> usize {
        self.parallel_classes().iter().map(|(_, l)| l.len()).max().unwrap_or(0)
    }

    /// Keeps one edge per adjacent pair, the one with the least label.
    pub fn simplify(&self) -> LabeledGraph<'g> {
        let mut seen = BTreeSet::new();
        let edges = self
            .edges
            .iter()
            .filter(|e| seen.insert(e.ends))
            .cloned()
            .collect();
        LabeledGraph { ell: self.ell, vertices: self.vertices.clone(), edges, source: self.source }
    }

    /// Structural self-check: sorted distinct vertices and labels, no loops,
    /// and every label's two windows are exactly its endpoints.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        if !self.vertices.windows(2).all(|w| w[0] < w[1]) {
            return Err("vertices are not strictly sorted".into());
        }
        if !self.edges.windows(2).all(|w| w[0].label < w[1].label) {
            return Err("edge labels are not strictly sorted".into());
        }
        for v in &self.vertices {
            if v.len() != self.ell {
                return Err(format!("vertex {} has the wrong length", v.display(self.source)));
            }
        }
        for e in &self.edges {
            let (i, j) = e.ends;
            if i >= j || j >= self.order() {
                return Err(format!("edge {} has bad ends {:?}", e.label.display(self.source), e.ends));
            }
            let Some((a, b)) = e.label.windows() else {
                return Err("edge label of length 0".into());
            };
            let mut want = [a, b];
            want.sort();
            if want != [self.vertices[i].clone(), self.vertices[j].clone()] {
                return Err(format!(
                    "edge {} does not join its windows",
                    e.label.display(self.source)
                ));
            }
        }
        Ok(())
    }

    /// Doubled pairs and the converse: two parallel edges between `L0` and
    /// `L1` occur exactly when all four links live on one 2-cycle of the
    /// source, in the alternating shapes. Returns the first offending pair.
    pub fn check_multiplicity_pattern(&self) -> std::result::Result<(), String> {
        let g = self.source;
        let two_cycle_edges = |links: &[&Link]| -> Option<(usize, usize)> {
            let es: BTreeSet<usize> = links.iter().flat_map(|l| l.arc().edges()).collect();
            let es: Vec<usize> = es.into_iter().collect();
            (es.len() == 2 && g.endpoints(es[0]) == g.endpoints(es[1])).then(|| (es[0], es[1]))
        };
        for ((i, j), list) in self.parallel_classes() {
            match list.len() {
                1 => {}
                2 => {
                    let (l0, l1) = (&self.vertices[i], &self.vertices[j]);
                    let (q0, q1) = (&self.edges[list[0]].label, &self.edges[list[1]].label);
                    if self.ell == 0 || two_cycle_edges(&[l0, l1, q0, q1]).is_none() {
                        return Err(format!(
                            "doubled pair {} / {} is not on a 2-cycle",
                            l0.display(g),
                            l1.display(g)
                        ));
                    }
                }
                k => return Err(format!("multiplicity {k} between {i} and {j}")),
            }
        }
        if self.ell == 0 {
            return Ok(());
        }
        for e in 0..g.size() {
            for f in e + 1..g.size() {
                if g.endpoints(e) != g.endpoints(f) {
                    continue;
                }
                let (a, b) = g.endpoints(e);
                let pair = [alternating(g, a, e, f, self.ell), alternating(g, b, f, e, self.ell)];
                let (Some(i), Some(j)) = (self.vertex_index(&pair[0]), self.vertex_index(&pair[1]))
                else {
                    return Err("a 2-cycle link is missing from the vertex set".into());
                };
                let count = self
                    .edges
                    .iter()
                    .filter(|x| x.ends == (i.min(j), i.max(j)))
                    .count();
                if count != 2 {
                    return Err(format!(
                        "2-cycle links {} / {} joined by {count} edges",
                        pair[0].display(g),
                        pair[1].display(g)
                    ));
                }
            }
        }
        Ok(())
    }
}

/// The `ell`-link that starts at `start` and alternates `first`, `second`
/// around a 2-cycle.
fn alternating(g: &Multigraph, start: usize, first: usize, second: usize, ell: usize) -> Link {
    let mut units = vec![start];
    let mut at = start;
    for k in 0..ell {
        let e = if k % 2 == 0 { first } else { second };
        at = g.other_end(e, at);
        units.push(e);
        units.push(at);
    }
    crate::links::Arc::from_units(g, &units).expect("alternating walk is an arc").to_link()
}

fn assemble<'g>(
    g: &'g Multigraph,
    ell: usize,
    vertices: Vec<Link>,
    labels: Vec<Link>,
) -> LabeledGraph<'g> {
    let mut edges = Vec::with_capacity(labels.len());
    for q in labels {
        let (a, b) = q.windows().expect("label has positive length");
        assert_ne!(a, b, "the two windows of a link are distinct");
        let (Ok(i), Ok(j)) = (vertices.binary_search(&a), vertices.binary_search(&b)) else {
            continue;
        };
        edges.push(LabeledEdge { ends: (i.min(j), i.max(j)), label: q });
    }
    LabeledGraph { ell, vertices, edges, source: g }
}

/// The `ell`-link graph: one vertex per `ell`-link, one edge per
/// `(ell+1)`-link joining its two windows.
pub fn link_graph(g: &Multigraph, ell: usize, limit: usize) -> Result<LabeledGraph<'_>> {
    let vertices = enumerate_links(g, ell, limit)?;
    let labels = enumerate_links(g, ell + 1, limit)?;
    Ok(assemble(g, ell, vertices, labels))
}

fn check_member(g: &Multigraph, len: usize, link: &Link) -> Result<()> {
    let ok = link.len() == len && link.arc().is_canonical() && link.arc().is_valid_in(g);
    if ok {
        Ok(())
    } else {
        Err(Error::NotALink(format!("{:?} as a {len}-link", link.units())))
    }
}

/// The partial link graph on a chosen set of `ell`-links, keeping the given
/// `(ell+1)`-links whose windows both lie in that set.
pub fn partial_link_graph<'g>(
    g: &'g Multigraph,
    ell: usize,
    links: &[Link],
    labels: &[Link],
) -> Result<LabeledGraph<'g>> {
    for l in links {
        check_member(g, ell, l)?;
    }
    for q in labels {
        check_member(g, ell + 1, q)?;
    }
    let mut vertices = links.to_vec();
    vertices.sort();
    vertices.dedup();
    let mut labels = labels.to_vec();
    labels.sort();
    labels.dedup();
    Ok(assemble(g, ell, vertices, labels))
}

/// The `ell`-path graph, simplified. For `ell >= 2` it is built from the
/// path links and the path-or-cycle `(ell+1)`-links.
pub fn path_graph(g: &Multigraph, ell: usize, limit: usize) -> Result<LabeledGraph<'_>> {
    if ell < 2 {
        return Ok(link_graph(g, ell, limit)?.simplify());
    }
    let paths: Vec<Link> = enumerate_links(g, ell, limit)?.into_iter().filter(Link::is_path).collect();
    let labels: Vec<Link> = enumerate_links(g, ell + 1, limit)?
        .into_iter()
        .filter(|q| q.is_path() || q.is_cycle())
        .collect();
    Ok(assemble(g, ell, paths, labels).simplify())
}
