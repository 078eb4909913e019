//! Arcs, links, windows and shunting.
//!
//! An arc is stored as its interleaved unit sequence `v0 e1 v1 ... el vl`
//! of vertex and edge indices. Because indices follow id order, comparing
//! two unit vectors is the same as comparing the id sequences, and the
//! canonical orientation of a link is just the smaller of the two vectors.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::multigraph::Multigraph;

/// A vertex or an edge of the underlying multigraph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Unit {
    Vertex(usize),
    Edge(usize),
}

impl Unit {
    pub fn name(self, g: &Multigraph) -> &str {
        match self {
            Unit::Vertex(v) => &g.vertex_id(v).0,
            Unit::Edge(e) => &g.edge_id(e).0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    units: Vec<u32>,
}

/// An arc in canonical orientation, standing for the arc and its reverse.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Link(Arc);

fn to_u32(i: usize) -> u32 {
    u32::try_from(i).expect("index fits in u32")
}

fn is_canonical_units(units: &[u32]) -> bool {
    let n = units.len();
    for i in 0..n / 2 {
        let (a, b) = (units[i], units[n - 1 - i]);
        if a != b {
            return a < b;
        }
    }
    true
}

impl Arc {
    /// The 0-arc sitting at vertex `v`.
    pub fn vertex(v: usize) -> Arc {
        Arc { units: vec![to_u32(v)] }
    }

    /// Builds an arc from interleaved indices, checking incidence and that
    /// no edge is used twice in a row.
    pub fn from_units(g: &Multigraph, units: &[usize]) -> Result<Arc> {
        if units.len() % 2 == 0 {
            return Err(Error::Parse(format!(
                "an arc has an odd number of units, got {}",
                units.len()
            )));
        }
        for (i, &u) in units.iter().enumerate() {
            let bound = if i % 2 == 0 { g.order() } else { g.size() };
            if u >= bound {
                return Err(if i % 2 == 0 {
                    Error::UnknownVertex(format!("#{u}"))
                } else {
                    Error::UnknownEdge(format!("#{u}"))
                });
            }
        }
        for i in (1..units.len()).step_by(2) {
            let (a, b) = g.endpoints(units[i]);
            let (x, y) = (units[i - 1], units[i + 1]);
            if !((a, b) == (x, y) || (a, b) == (y, x)) {
                return Err(Error::EndpointMismatch);
            }
            if i >= 3 && units[i] == units[i - 2] {
                return Err(Error::BacktrackEdge(g.edge_id(units[i]).0.clone()));
            }
        }
        Ok(Arc { units: units.iter().map(|&u| to_u32(u)).collect() })
    }

    /// Builds an arc from unit names, e.g. `["u0", "f0", "v0"]`.
    pub fn from_names(g: &Multigraph, names: &[&str]) -> Result<Arc> {
        let idx = names
            .iter()
            .enumerate()
            .map(|(i, n)| if i % 2 == 0 { g.require_vertex(n) } else { g.require_edge(n) })
            .collect::<Result<Vec<_>>>()?;
        Arc::from_units(g, &idx)
    }

    /// Parses `[v0 e1 v1 ...]`; the brackets are optional.
    pub fn parse(g: &Multigraph, text: &str) -> Result<Arc> {
        let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
        let names: Vec<&str> = inner.split_whitespace().collect();
        if names.is_empty() {
            return Err(Error::Parse(format!("empty link {text:?}")));
        }
        Arc::from_names(g, &names)
    }

    /// Length in edges.
    pub fn len(&self) -> usize {
        self.units.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn units(&self) -> &[u32] {
        &self.units
    }

    /// `v_i` for `i` in `0..=len`.
    pub fn vertex_at(&self, i: usize) -> usize {
        self.units[2 * i] as usize
    }

    /// `e_i` for `i` in `1..=len`.
    pub fn edge_at(&self, i: usize) -> usize {
        self.units[2 * i - 1] as usize
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.units.iter().step_by(2).map(|&u| u as usize)
    }

    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.units.iter().skip(1).step_by(2).map(|&u| u as usize)
    }

    pub fn tail(&self) -> usize {
        self.units[0] as usize
    }

    pub fn head(&self) -> usize {
        self.units[self.units.len() - 1] as usize
    }

    pub fn tail_edge(&self) -> Option<usize> {
        self.units.get(1).map(|&u| u as usize)
    }

    pub fn head_edge(&self) -> Option<usize> {
        let n = self.units.len();
        (n >= 3).then(|| self.units[n - 2] as usize)
    }

    pub fn reverse(&self) -> Arc {
        let mut units = self.units.clone();
        units.reverse();
        Arc { units }
    }

    /// The sub-arc `(v_i, ..., v_j)`; requires `i <= j <= len`.
    pub fn segment(&self, i: usize, j: usize) -> Result<Arc> {
        if i > j || j > self.len() {
            return Err(Error::WindowTooLong { window: j.saturating_sub(i), len: self.len() });
        }
        Ok(Arc { units: self.units[2 * i..=2 * j].to_vec() })
    }

    /// Concatenation at the shared vertex.
    pub fn conjunction(&self, other: &Arc) -> Result<Arc> {
        if self.head() != other.tail() {
            return Err(Error::EndpointMismatch);
        }
        if let (Some(e), Some(f)) = (self.head_edge(), other.tail_edge()) {
            if e == f {
                return Err(Error::BacktrackEdge(format!("#{e}")));
            }
        }
        let mut units = self.units.clone();
        units.extend_from_slice(&other.units[1..]);
        Ok(Arc { units })
    }

    /// Appends one edge at the head vertex.
    pub fn extend(&self, g: &Multigraph, e: usize) -> Result<Arc> {
        let w = g.other_end(e, self.head());
        self.conjunction(&Arc { units: vec![to_u32(self.head()), to_u32(e), to_u32(w)] })
    }

    pub fn is_canonical(&self) -> bool {
        is_canonical_units(&self.units)
    }

    pub fn to_link(&self) -> Link {
        if self.is_canonical() {
            Link(self.clone())
        } else {
            Link(self.reverse())
        }
    }

    /// Whether the units really form an arc of `g`.
    pub fn is_valid_in(&self, g: &Multigraph) -> bool {
        let units: Vec<usize> = self.units.iter().map(|&u| u as usize).collect();
        Arc::from_units(g, &units).is_ok()
    }

    pub fn display<'a>(&'a self, g: &'a Multigraph) -> impl fmt::Display + 'a {
        DisplayUnits { units: &self.units, g }
    }
}

struct DisplayUnits<'a> {
    units: &'a [u32],
    g: &'a Multigraph,
}

impl fmt::Display for DisplayUnits<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, &u) in self.units.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            let name = if i % 2 == 0 {
                &self.g.vertex_id(u as usize).0
            } else {
                &self.g.edge_id(u as usize).0
            };
            f.write_str(name)?;
        }
        f.write_str("]")
    }
}

impl Link {
    pub fn vertex(v: usize) -> Link {
        Link(Arc::vertex(v))
    }

    pub fn parse(g: &Multigraph, text: &str) -> Result<Link> {
        Ok(Arc::parse(g, text)?.to_link())
    }

    pub fn from_names(g: &Multigraph, names: &[&str]) -> Result<Link> {
        Ok(Arc::from_names(g, names)?.to_link())
    }

    /// The canonical orientation.
    pub fn arc(&self) -> &Arc {
        &self.0
    }

    pub fn into_arc(self) -> Arc {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn units(&self) -> &[u32] {
        self.0.units()
    }

    pub fn is_path(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.0.vertices().all(|v| seen.insert(v))
    }

    pub fn is_cycle(&self) -> bool {
        let l = self.len();
        l >= 2
            && self.0.tail() == self.0.head()
            && self.0.segment(0, l - 1).expect("in range").to_link().is_path()
    }

    /// The vertex `v_{l/2}` for even length, the edge `e_{(l+1)/2}` for odd.
    pub fn middle_unit(&self) -> Unit {
        let l = self.len();
        let u = self.0.units[l] as usize;
        if l % 2 == 0 {
            Unit::Vertex(u)
        } else {
            Unit::Edge(u)
        }
    }

    /// The segment between positions `i` and `j` of the canonical
    /// orientation, itself canonicalised.
    pub fn segment(&self, i: usize, j: usize) -> Result<Link> {
        Ok(self.0.segment(i, j)?.to_link())
    }

    /// The two windows of length `len - 1`: `[0, len-1]` and `[1, len]`.
    pub fn windows(&self) -> Option<(Link, Link)> {
        let l = self.len();
        (l >= 1).then(|| {
            (
                self.segment(0, l - 1).expect("in range"),
                self.segment(1, l).expect("in range"),
            )
        })
    }

    /// Every window of length `k`, in position order (may repeat).
    pub fn windows_of(&self, k: usize) -> Result<Vec<Link>> {
        let l = self.len();
        if k > l {
            return Err(Error::WindowTooLong { window: k, len: l });
        }
        (0..=l - k).map(|i| self.segment(i, i + k)).collect()
    }

    /// Whether `other` occurs as a contiguous window (either direction).
    pub fn contains_window(&self, other: &Link) -> bool {
        let k = other.len();
        k <= self.len() && (0..=self.len() - k).any(|i| &self.segment(i, i + k).unwrap() == other)
    }

    pub fn display<'a>(&'a self, g: &'a Multigraph) -> impl fmt::Display + 'a {
        self.0.display(g)
    }
}

/// Depth-first walk over all `ell`-arcs in lexicographic unit order. The
/// visitor returns `false` to stop early.
fn walk_arcs(g: &Multigraph, ell: usize, visit: &mut dyn FnMut(&[u32]) -> bool) {
    fn go(g: &Multigraph, ell: usize, buf: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32]) -> bool) -> bool {
        if buf.len() == 2 * ell + 1 {
            return visit(buf);
        }
        let head = *buf.last().unwrap() as usize;
        let prev = (buf.len() >= 3).then(|| buf[buf.len() - 2] as usize);
        for &e in g.incident(head) {
            if Some(e) == prev {
                continue;
            }
            buf.push(to_u32(e));
            buf.push(to_u32(g.other_end(e, head)));
            let more = go(g, ell, buf, visit);
            buf.pop();
            buf.pop();
            if !more {
                return false;
            }
        }
        true
    }
    let mut buf = Vec::with_capacity(2 * ell + 1);
    for v in 0..g.order() {
        buf.clear();
        buf.push(to_u32(v));
        if !go(g, ell, &mut buf, visit) {
            return;
        }
    }
}

/// All `ell`-arcs in lexicographic order.
pub fn enumerate_arcs(g: &Multigraph, ell: usize, limit: usize) -> Result<Vec<Arc>> {
    let mut out = Vec::new();
    let mut exceeded = false;
    walk_arcs(g, ell, &mut |units| {
        if out.len() == limit {
            exceeded = true;
            return false;
        }
        out.push(Arc { units: units.to_vec() });
        true
    });
    if exceeded {
        return Err(Error::LimitExceeded { count: limit + 1, limit });
    }
    Ok(out)
}

/// All `ell`-links, sorted. Only canonical orientations are kept, so no
/// deduplication pass is needed.
pub fn enumerate_links(g: &Multigraph, ell: usize, limit: usize) -> Result<Vec<Link>> {
    let mut out = Vec::new();
    let mut exceeded = false;
    walk_arcs(g, ell, &mut |units| {
        if !is_canonical_units(units) {
            return true;
        }
        if out.len() == limit {
            exceeded = true;
            return false;
        }
        out.push(Link(Arc { units: units.to_vec() }));
        true
    });
    if exceeded {
        return Err(Error::LimitExceeded { count: limit + 1, limit });
    }
    Ok(out)
}

/// Number of `ell`-links, by the same walk but without storing them.
pub fn count_links(g: &Multigraph, ell: usize, limit: usize) -> Result<usize> {
    let mut count = 0usize;
    walk_arcs(g, ell, &mut |units| {
        if is_canonical_units(units) {
            count += 1;
        }
        count <= limit
    });
    if count > limit {
        return Err(Error::LimitExceeded { count, limit });
    }
    Ok(count)
}

/// A base arc together with the sequence of length-`window` images obtained
/// by sliding along it one unit at a time.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShuntTrace {
    pub base: Arc,
    pub window: usize,
    pub images: Vec<Link>,
    pub steps: Vec<Link>,
}

pub fn shunt_trace(base: &Arc, ell: usize) -> Result<ShuntTrace> {
    let len = base.len();
    if ell > len {
        return Err(Error::WindowTooLong { window: ell, len });
    }
    let s = len - ell;
    let images = (0..=s)
        .map(|i| Ok(base.segment(i, i + ell)?.to_link()))
        .collect::<Result<Vec<_>>>()?;
    let steps = (1..=s)
        .map(|i| Ok(base.segment(i - 1, i + ell)?.to_link()))
        .collect::<Result<Vec<_>>>()?;
    Ok(ShuntTrace { base: base.clone(), window: ell, images, steps })
}

/// Every `(ell+1)`-link `Q` having `link` as one window, paired with the
/// other window `R`. Sorted by `Q`.
pub fn one_step_shunts(g: &Multigraph, link: &Link) -> Vec<(Link, Link)> {
    let arc = link.arc();
    let mut orientations = vec![arc.clone()];
    if !arc.is_empty() {
        orientations.push(arc.reverse());
    }
    let mut out = Vec::new();
    for a in &orientations {
        let head = a.head();
        for &e in g.incident(head) {
            if Some(e) == a.head_edge() {
                continue;
            }
            let q = a.extend(g, e).expect("edge is incident to the head");
            let r = q.segment(1, q.len()).expect("in range").to_link();
            out.push((q.to_link(), r));
        }
    }
    out.sort();
    debug_assert!(out.windows(2).all(|w| w[0].0 != w[1].0));
    out
}

/// Breadth-first search for a shunting from `from` to `to` whose every
/// image satisfies `allow`. Returns the `(ell+1)`-links used, in order.
pub fn shunt_path(
    g: &Multigraph,
    from: &Link,
    to: &Link,
    allow: impl Fn(&Link) -> bool,
) -> Result<Option<Vec<Link>>> {
    if from.len() != to.len() {
        return Err(Error::LengthMismatch(from.len(), to.len()));
    }
    if !allow(from) || !allow(to) {
        return Ok(None);
    }
    let mut parent: BTreeMap<Link, Option<(Link, Link)>> = BTreeMap::new();
    parent.insert(from.clone(), None);
    let mut queue = VecDeque::from([from.clone()]);
    while let Some(cur) = queue.pop_front() {
        if &cur == to {
            let mut steps = Vec::new();
            let mut at = cur;
            while let Some(Some((prev, q))) = parent.get(&at) {
                steps.push(q.clone());
                at = prev.clone();
            }
            steps.reverse();
            return Ok(Some(steps));
        }
        for (q, r) in one_step_shunts(g, &cur) {
            if !parent.contains_key(&r) && allow(&r) {
                parent.insert(r.clone(), Some((cur.clone(), q)));
                queue.push_back(r);
            }
        }
    }
    Ok(None)
}

pub fn can_shunt(g: &Multigraph, from: &Link, to: &Link) -> Result<Option<Vec<Link>>> {
    shunt_path(g, from, to, |_| true)
}

/// Replays a shunting witness, returning the final image if every step is
/// an `(ell+1)`-link with the current image as one of its windows.
pub fn replay_shunt(from: &Link, steps: &[Link]) -> Option<Link> {
    let mut cur = from.clone();
    for q in steps {
        if q.len() != cur.len() + 1 {
            return None;
        }
        let (a, b) = q.windows()?;
        cur = if a == cur {
            b
        } else if b == cur {
            a
        } else {
            return None;
        };
    }
    Some(cur)
}

/// Middle units of all `ell`-links.
pub fn middle_units(g: &Multigraph, ell: usize, limit: usize) -> Result<BTreeSet<Unit>> {
    Ok(enumerate_links(g, ell, limit)?.iter().map(Link::middle_unit).collect())
}

/// The hub subgraph: induced on the middle vertices for even `ell`, and the
/// subgraph formed by the middle edges (with their ends) for odd `ell`.
pub fn hub_subgraph(g: &Multigraph, ell: usize, limit: usize) -> Result<Multigraph> {
    let units = middle_units(g, ell, limit)?;
    if ell % 2 == 0 {
        let vs: Vec<usize> = units
            .iter()
            .filter_map(|u| match u {
                Unit::Vertex(v) => Some(*v),
                Unit::Edge(_) => None,
            })
            .collect();
        Ok(g.induced_by_indices(&vs))
    } else {
        let es: Vec<usize> = units
            .iter()
            .filter_map(|u| match u {
                Unit::Edge(e) => Some(*e),
                Unit::Vertex(_) => None,
            })
            .collect();
        Ok(g.edge_subgraph_by_indices(&es, &[]))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::*;

    const LIMIT: usize = 1_000_000;

    #[test]
    fn arc_counts() {
        assert_eq!(enumerate_arcs(&dipole(3).unwrap(), 1, LIMIT).unwrap().len(), 6);
        assert_eq!(enumerate_arcs(&complete(4).unwrap(), 2, LIMIT).unwrap().len(), 24);
        assert_eq!(enumerate_arcs(&cycle(3).unwrap(), 3, LIMIT).unwrap().len(), 6);
    }

    #[test]
    fn arcs_are_sorted_and_valid() {
        let g = fig2a();
        let arcs = enumerate_arcs(&g, 3, LIMIT).unwrap();
        assert!(arcs.windows(2).all(|w| w[0] < w[1]));
        assert!(arcs.iter().all(|a| a.is_valid_in(&g)));
    }

    #[test]
    fn link_counts() {
        assert_eq!(enumerate_links(&complete_bipartite(3, 3).unwrap(), 1, LIMIT).unwrap().len(), 9);
        assert_eq!(enumerate_links(&petersen(), 2, LIMIT).unwrap().len(), 30);
        assert_eq!(enumerate_links(&path(3).unwrap(), 3, LIMIT).unwrap().len(), 1);
        assert_eq!(enumerate_links(&fig2a(), 0, LIMIT).unwrap().len(), 4);
        assert_eq!(count_links(&petersen(), 3, LIMIT).unwrap(), 60);
    }

    #[test]
    fn limit_is_enforced() {
        let err = enumerate_links(&petersen(), 4, 10).unwrap_err();
        assert!(matches!(err, Error::LimitExceeded { limit: 10, .. }));
        assert!(enumerate_arcs(&petersen(), 1, 29).is_err());
        assert!(enumerate_arcs(&petersen(), 1, 30).is_ok());
        assert!(count_links(&petersen(), 1, 14).is_err());
    }

    #[test]
    fn paths_and_cycles() {
        let g = dipole(2).unwrap();
        let c = Link::from_names(&g, &["a", "e0", "b", "e1", "a"]).unwrap();
        assert!(c.is_cycle());
        assert!(!c.is_path());
        let g = fig2a();
        let c = Link::parse(&g, "[v1 e0 v0 e1 v1]").unwrap();
        assert!(c.is_cycle());
        for l in enumerate_links(&g, 1, LIMIT).unwrap() {
            assert!(l.is_path() && !l.is_cycle());
        }
    }

    #[test]
    fn middle_units() {
        let g = fig2a();
        let v0 = g.vertex_index("v0").unwrap();
        assert_eq!(Link::vertex(v0).middle_unit(), Unit::Vertex(v0));
        let l = Link::parse(&g, "[u0 f0 v0 e0 v1]").unwrap();
        assert_eq!(l.middle_unit(), Unit::Vertex(v0));
        assert_eq!(l.arc().reverse().to_link().middle_unit(), Unit::Vertex(v0));
        let p = path(3).unwrap();
        let whole = &enumerate_links(&p, 3, LIMIT).unwrap()[0];
        assert_eq!(whole.middle_unit(), Unit::Edge(p.edge_index("e1").unwrap()));
    }

    #[test]
    fn conjunction_rules() {
        let g = fig2a();
        let a = Arc::from_names(&g, &["u0", "f0", "v0"]).unwrap();
        let b = Arc::from_names(&g, &["v0", "e0", "v1"]).unwrap();
        let ab = a.conjunction(&b).unwrap();
        assert_eq!(ab, Arc::from_names(&g, &["u0", "f0", "v0", "e0", "v1"]).unwrap());
        let u0 = Arc::vertex(g.vertex_index("u0").unwrap());
        assert_eq!(u0.conjunction(&a).unwrap(), a);
        assert_eq!(a.conjunction(&a.reverse()).unwrap_err(), Error::BacktrackEdge("#2".into()));
        assert_eq!(b.conjunction(&a), Err(Error::EndpointMismatch));
    }

    #[test]
    fn from_units_validates() {
        let g = fig2a();
        assert_eq!(
            Arc::from_names(&g, &["u0", "e0", "v1"]),
            Err(Error::EndpointMismatch)
        );
        assert!(matches!(
            Arc::from_names(&g, &["v0", "e0", "v1", "e0", "v0"]),
            Err(Error::BacktrackEdge(_))
        ));
        assert!(matches!(Arc::parse(&g, "[x]"), Err(Error::UnknownVertex(_))));
    }

    #[test]
    fn display_round_trip() {
        let g = fig2a();
        for l in enumerate_links(&g, 2, LIMIT).unwrap() {
            let text = l.display(&g).to_string();
            assert_eq!(Link::parse(&g, &text).unwrap(), l);
        }
    }

    #[test]
    fn shunting_trace_example() {
        let g = fig2a();
        let base = Arc::from_names(&g, &["u0", "f0", "v0", "e0", "v1", "f1", "u1"]).unwrap();
        let t = shunt_trace(&base, 2).unwrap();
        assert_eq!(t.images.len(), 2);
        assert_eq!(t.images[0], Link::parse(&g, "[u0 f0 v0 e0 v1]").unwrap());
        assert_eq!(t.images[1], Link::parse(&g, "[v0 e0 v1 f1 u1]").unwrap());
        assert_eq!(t.steps, vec![base.to_link()]);
        let whole = shunt_trace(&base, 3).unwrap();
        assert_eq!((whole.images.len(), whole.steps.len()), (1, 0));
        let edge = Arc::from_names(&g, &["u0", "f0", "v0"]).unwrap();
        let ends = shunt_trace(&edge, 0).unwrap();
        assert_eq!(ends.images.len(), 2);
        assert!(matches!(shunt_trace(&edge, 2), Err(Error::WindowTooLong { .. })));
    }

    #[test]
    fn one_step_counts() {
        let d = dipole(3).unwrap();
        for l in enumerate_links(&d, 1, LIMIT).unwrap() {
            assert_eq!(one_step_shunts(&d, &l).len(), 4);
        }
        let p = path(3).unwrap();
        let mid = Link::parse(&p, "[v1 e1 v2]").unwrap();
        assert_eq!(one_step_shunts(&p, &mid).len(), 2);
        let pet = petersen();
        for l in enumerate_links(&pet, 2, LIMIT).unwrap() {
            assert_eq!(one_step_shunts(&pet, &l).len(), 4);
        }
        let v = Link::vertex(0);
        assert_eq!(one_step_shunts(&pet, &v).len(), 3);
    }

    #[test]
    fn shunting_reachability() {
        let g = fig2a();
        let from = Link::parse(&g, "[u0 f0 v0 e0 v1]").unwrap();
        let to = Link::parse(&g, "[v1 e0 v0 e1 v1]").unwrap();
        let steps = can_shunt(&g, &from, &to).unwrap().unwrap();
        assert_eq!(replay_shunt(&from, &steps), Some(to.clone()));
        assert_eq!(can_shunt(&g, &from, &from).unwrap(), Some(vec![]));

        let two = parse_edge_list("a b\nc d\n").unwrap();
        let ls = enumerate_links(&two, 1, LIMIT).unwrap();
        assert_eq!(can_shunt(&two, &ls[0], &ls[1]).unwrap(), None);
        assert_eq!(
            can_shunt(&g, &from, &Link::vertex(0)),
            Err(Error::LengthMismatch(2, 0))
        );
    }

    #[test]
    fn hub_subgraphs() {
        let g = fig2a();
        assert_eq!(hub_subgraph(&g, 0, LIMIT).unwrap(), g);
        assert_eq!(hub_subgraph(&g, 1, LIMIT).unwrap(), g);
        let p = path(3).unwrap();
        let h = hub_subgraph(&p, 3, LIMIT).unwrap();
        assert_eq!(h.edge_ids(), &[EdgeId::from("e1")]);
        assert_eq!(h.order(), 2);
        let s = star(3).unwrap();
        let h = hub_subgraph(&s, 2, LIMIT).unwrap();
        assert_eq!(h.vertex_ids(), &[VertexId::from("a0")]);
    }
}
