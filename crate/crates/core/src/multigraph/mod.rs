//! Loopless multigraphs with stable, ordered vertex and edge identifiers.
//!
//! Vertices and edges are stored sorted by id, so an index comparison is
//! the same as an id comparison. Everything downstream (link
//! canonicalisation, vertex numbering of derived graphs) relies on that.

mod generators;
mod io;
mod metrics;
mod simple;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use generators::{
    complete, complete_bipartite, cycle, dipole, fig2a, path, petersen, random_multigraph, star,
    wheel,
};
pub use io::{parse_edge_list, parse_edge_list_bytes, to_dot, to_edge_list};
pub use simple::SimpleGraph;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub String);

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeId(pub String);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for VertexId {
    fn from(s: &str) -> Self {
        VertexId(s.to_owned())
    }
}

impl From<&str> for EdgeId {
    fn from(s: &str) -> Self {
        EdgeId(s.to_owned())
    }
}

/// A finite undirected loopless graph; parallel edges are allowed and are
/// told apart only by their [`EdgeId`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Multigraph {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeId>,
    ends: Vec<(usize, usize)>,
    incidence: Vec<Vec<usize>>,
}

/// Accumulates vertices and edges by name, then sorts and indexes them.
#[derive(Clone, Debug, Default)]
pub struct MultigraphBuilder {
    vertices: BTreeSet<String>,
    edges: Vec<(String, String, String)>,
}

impl MultigraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self, name: impl Into<String>) -> &mut Self {
        self.vertices.insert(name.into());
        self
    }

    pub fn edge(
        &mut self,
        id: impl Into<String>,
        u: impl Into<String>,
        v: impl Into<String>,
    ) -> Result<&mut Self> {
        let (id, u, v) = (id.into(), u.into(), v.into());
        if u == v {
            return Err(Error::InvalidParameter(format!("edge {id} is a loop at {u}")));
        }
        self.vertices.insert(u.clone());
        self.vertices.insert(v.clone());
        self.edges.push((id, u, v));
        Ok(self)
    }

    pub fn build(&self) -> Result<Multigraph> {
        let vertices: Vec<VertexId> = self.vertices.iter().map(|s| VertexId(s.clone())).collect();
        let vpos: BTreeMap<&str, usize> =
            self.vertices.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let mut edges: Vec<(&str, usize, usize)> = self
            .edges
            .iter()
            .map(|(id, u, v)| {
                let (a, b) = (vpos[u.as_str()], vpos[v.as_str()]);
                (id.as_str(), a.min(b), a.max(b))
            })
            .collect();
        edges.sort_by(|x, y| natural_cmp(x.0, y.0));
        for w in edges.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::DuplicateId(w[0].0.to_owned()));
            }
        }
        let mut incidence = vec![Vec::new(); vertices.len()];
        for (i, &(_, a, b)) in edges.iter().enumerate() {
            incidence[a].push(i);
            incidence[b].push(i);
        }
        Ok(Multigraph {
            vertices,
            edges: edges.iter().map(|e| EdgeId(e.0.to_owned())).collect(),
            ends: edges.iter().map(|e| (e.1, e.2)).collect(),
            incidence,
        })
    }
}

/// Orders ids with runs of digits compared by value, so `e2` precedes `e10`.
fn natural_cmp(a: &str, b: &str) -> Ordering {
    fn chunks(s: &str) -> Vec<(bool, &str)> {
        let mut out = Vec::new();
        let mut start = 0;
        for (i, c) in s.char_indices().skip(1) {
            let prev = s[..i].chars().next_back().unwrap();
            if prev.is_ascii_digit() != c.is_ascii_digit() {
                out.push((s[start..i].starts_with(|c: char| c.is_ascii_digit()), &s[start..i]));
                start = i;
            }
        }
        if start < s.len() {
            out.push((s[start..].starts_with(|c: char| c.is_ascii_digit()), &s[start..]));
        }
        out
    }
    let (ca, cb) = (chunks(a), chunks(b));
    for (x, y) in ca.iter().zip(&cb) {
        let ord = match (x, y) {
            ((true, p), (true, q)) => {
                let (p, q) = (p.trim_start_matches('0'), q.trim_start_matches('0'));
                p.len().cmp(&q.len()).then_with(|| p.cmp(q))
            }
            _ => x.1.cmp(y.1),
        };
        if ord != Ordering::Equal {
            return ord;
        }
    }
    ca.len().cmp(&cb.len()).then_with(|| a.cmp(b))
}

impl Multigraph {
    pub fn builder() -> MultigraphBuilder {
        MultigraphBuilder::new()
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn is_null(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_ids(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edge_ids(&self) -> &[EdgeId] {
        &self.edges
    }

    pub fn vertex_id(&self, v: usize) -> &VertexId {
        &self.vertices[v]
    }

    pub fn edge_id(&self, e: usize) -> &EdgeId {
        &self.edges[e]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.binary_search_by(|x| x.0.as_str().cmp(name)).ok()
    }

    pub fn edge_index(&self, name: &str) -> Option<usize> {
        self.edges.binary_search_by(|x| x.0.as_str().cmp(name)).ok()
    }

    pub(crate) fn require_vertex(&self, name: &str) -> Result<usize> {
        self.vertex_index(name).ok_or_else(|| Error::UnknownVertex(name.to_owned()))
    }

    pub(crate) fn require_edge(&self, name: &str) -> Result<usize> {
        self.edge_index(name).ok_or_else(|| Error::UnknownEdge(name.to_owned()))
    }

    /// Endpoints of edge `e`, smaller index first.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.ends[e]
    }

    pub fn other_end(&self, e: usize, v: usize) -> usize {
        let (a, b) = self.ends[e];
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    /// Edges incident to `v`, in ascending edge order.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    /// Degree counting parallel edges separately.
    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn degree_of(&self, v: &VertexId) -> Result<usize> {
        Ok(self.degree(self.require_vertex(&v.0)?))
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// `Some(r)` when every vertex has degree `r` (and the graph is nonnull).
    pub fn regular_degree(&self) -> Option<usize> {
        let r = self.incidence.first()?.len();
        self.incidence.iter().all(|l| l.len() == r).then_some(r)
    }

    pub fn underlying_simple(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.order(), self.ends.iter().copied())
    }

    /// True if some pair of vertices is joined by two or more edges.
    pub fn has_parallel_edges(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.ends.iter().any(|e| !seen.insert(*e))
    }

    /// The maximal subgraph on the given vertex set.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> Result<Multigraph> {
        let idx = vertices
            .iter()
            .map(|v| self.require_vertex(&v.0))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.induced_by_indices(&idx))
    }

    pub fn induced_by_indices(&self, vertices: &[usize]) -> Multigraph {
        let keep: BTreeSet<usize> = vertices.iter().copied().collect();
        let edges: Vec<usize> = (0..self.size())
            .filter(|&e| {
                let (a, b) = self.ends[e];
                keep.contains(&a) && keep.contains(&b)
            })
            .collect();
        self.restrict(&keep, &edges)
    }

    /// The minimal subgraph containing the edge set `edges` and the vertex
    /// set `vertices`.
    pub fn edge_subgraph(&self, edges: &[EdgeId], vertices: &[VertexId]) -> Result<Multigraph> {
        let e_idx = edges
            .iter()
            .map(|e| self.require_edge(&e.0))
            .collect::<Result<Vec<_>>>()?;
        let v_idx = vertices
            .iter()
            .map(|v| self.require_vertex(&v.0))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.edge_subgraph_by_indices(&e_idx, &v_idx))
    }

    pub fn edge_subgraph_by_indices(&self, edges: &[usize], vertices: &[usize]) -> Multigraph {
        let mut keep: BTreeSet<usize> = vertices.iter().copied().collect();
        for &e in edges {
            let (a, b) = self.ends[e];
            keep.insert(a);
            keep.insert(b);
        }
        let mut edges = edges.to_vec();
        edges.sort_unstable();
        edges.dedup();
        self.restrict(&keep, &edges)
    }

    fn restrict(&self, keep: &BTreeSet<usize>, edges: &[usize]) -> Multigraph {
        let mut b = MultigraphBuilder::new();
        for &v in keep {
            b.vertex(self.vertices[v].0.clone());
        }
        for &e in edges {
            let (u, v) = self.ends[e];
            b.edge(
                self.edges[e].0.clone(),
                self.vertices[u].0.clone(),
                self.vertices[v].0.clone(),
            )
            .expect("subgraph of a loopless graph is loopless");
        }
        b.build().expect("ids are unique in the parent graph")
    }

    /// Checks the structural invariants; used by tests and after parsing.
    pub fn check_invariants(&self) -> bool {
        let sorted_v = self.vertices.windows(2).all(|w| w[0] < w[1]);
        let sorted_e = self.edges.windows(2).all(|w| w[0] < w[1]);
        let loopless = self.ends.iter().all(|&(a, b)| a < b && b < self.order());
        let mut expected = vec![Vec::new(); self.order()];
        for (e, &(a, b)) in self.ends.iter().enumerate() {
            if a < self.order() && b < self.order() {
                expected[a].push(e);
                expected[b].push(e);
            }
        }
        sorted_v && sorted_e && loopless && expected == self.incidence
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_ids_in_natural_order() {
        assert_eq!(natural_cmp("e2", "e10"), Ordering::Less);
        assert_eq!(natural_cmp("e010", "e9"), Ordering::Greater);
        assert_eq!(natural_cmp("a", "a1"), Ordering::Less);
        assert_eq!(natural_cmp("x2y", "x2z"), Ordering::Less);
        let g = random_multigraph(3, 4, 12).unwrap();
        let ids: Vec<&str> = g.edge_ids().iter().map(|e| e.0.as_str()).collect();
        assert_eq!(ids[10..], ["e10", "e11"]);
    }

    #[test]
    fn fig2a_shape() {
        let g = fig2a();
        assert_eq!((g.order(), g.size()), (4, 4));
        assert!(g.has_parallel_edges());
        let v0 = g.vertex_index("v0").unwrap();
        assert_eq!(g.degree(v0), 3);
    }

    #[test]
    fn degree_sum_is_twice_size() {
        for g in [dipole(3).unwrap(), petersen(), fig2a(), wheel(5).unwrap()] {
            let sum: usize = (0..g.order()).map(|v| g.degree(v)).sum();
            assert_eq!(sum, 2 * g.size());
            assert!(g.check_invariants());
        }
    }

    #[test]
    fn degree_examples() {
        let d3 = dipole(3).unwrap();
        assert_eq!(d3.degree(0), 3);
        assert_eq!(d3.degree(1), 3);
        let k4 = complete(4).unwrap();
        assert!((0..4).all(|v| k4.degree(v) == 3));
        assert!(matches!(
            k4.degree_of(&VertexId::from("zz")),
            Err(Error::UnknownVertex(_))
        ));
    }

    #[test]
    fn induced_subgraphs() {
        let k4 = complete(4).unwrap();
        let ids: Vec<VertexId> = k4.vertex_ids()[..3].to_vec();
        let k3 = k4.induced_subgraph(&ids).unwrap();
        assert_eq!((k3.order(), k3.size()), (3, 3));

        let g = fig2a();
        let h = g.induced_subgraph(&["v0".into(), "v1".into()]).unwrap();
        assert_eq!((h.order(), h.size()), (2, 2));
        assert_eq!(h.edge_ids(), &[EdgeId::from("e0"), EdgeId::from("e1")]);
    }

    #[test]
    fn edge_subgraph_of_isolated_vertex() {
        let g = fig2a();
        let h = g.edge_subgraph(&[], &["u0".into()]).unwrap();
        assert_eq!((h.order(), h.size()), (1, 0));
        assert!(matches!(
            g.edge_subgraph(&["nope".into()], &[]),
            Err(Error::UnknownEdge(_))
        ));
    }

    #[test]
    fn builder_rejects_loops_and_duplicate_ids() {
        let mut b = Multigraph::builder();
        assert!(b.edge("e", "a", "a").is_err());
        b.edge("e", "a", "b").unwrap();
        b.edge("e", "b", "c").unwrap();
        assert_eq!(b.build(), Err(Error::DuplicateId("e".into())));
    }
}
