//! Proper colourings of link graphs: exact oracles, the class-by-class
//! recolouring reduction, lifting from the `(ell-2)`-link graph, and the
//! resulting recursive upper bound.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::construction::{link_graph, LabeledGraph};
use crate::error::{Error, Result};
use crate::links::{Link, Unit};
use crate::multigraph::{Multigraph, SimpleGraph};
use crate::Limits;

/// Vertex colours `1..=t`, indexed by vertex. A zero entry means unassigned.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Coloring {
    pub colors: Vec<u32>,
}

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Self {
        Coloring { colors }
    }

    /// Largest colour used; the colouring is a `t`-colouring for this `t`.
    pub fn t(&self) -> u32 {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    pub fn distinct(&self) -> usize {
        self.colors.iter().collect::<BTreeSet<_>>().len()
    }

    /// Renumbers the colours in use to `1..=distinct`, keeping their order.
    pub fn compressed(&self) -> Coloring {
        let used: Vec<u32> = self.colors.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        Coloring {
            colors: self
                .colors
                .iter()
                .map(|c| used.binary_search(c).expect("colour is in use") as u32 + 1)
                .collect(),
        }
    }
}

/// Colours indexed by edge of the multigraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeColoring {
    pub colors: Vec<u32>,
}

impl EdgeColoring {
    pub fn is_proper(&self, g: &Multigraph) -> bool {
        self.colors.len() == g.size()
            && self.colors.iter().all(|&c| c > 0)
            && (0..g.order()).all(|v| {
                let cs: BTreeSet<u32> = g.incident(v).iter().map(|&e| self.colors[e]).collect();
                cs.len() == g.degree(v)
            })
    }
}

pub fn is_proper(h: &SimpleGraph, c: &Coloring) -> Result<bool> {
    if c.colors.len() != h.order() {
        return Err(Error::PartialColoring(c.colors.len().min(h.order())));
    }
    if let Some(v) = c.colors.iter().position(|&x| x == 0) {
        return Err(Error::PartialColoring(v));
    }
    Ok(h.edges().all(|(u, v)| c.colors[u] != c.colors[v]))
}

/// Largest number of distinct colours, other than its own, seen around a vertex.
pub fn max_foreign_colors(h: &SimpleGraph, c: &Coloring) -> usize {
    (0..h.order())
        .map(|v| {
            h.neighbors(v)
                .iter()
                .map(|&w| c.colors[w])
                .filter(|&x| x != c.colors[v])
                .collect::<BTreeSet<_>>()
                .len()
        })
        .max()
        .unwrap_or(0)
}

/// Saturation-ordered greedy colouring (DSATUR).
pub fn greedy_coloring(h: &SimpleGraph) -> Coloring {
    let n = h.order();
    let mut colors = vec![0u32; n];
    let mut seen: Vec<BTreeSet<u32>> = vec![BTreeSet::new(); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == 0)
            .max_by_key(|&v| (seen[v].len(), h.degree(v), std::cmp::Reverse(v)))
            .expect("an uncoloured vertex remains");
        let c = (1..).find(|c| !seen[v].contains(c)).unwrap();
        colors[v] = c;
        for &w in h.neighbors(v) {
            seen[w].insert(c);
        }
    }
    Coloring { colors }
}

struct Search<'a> {
    h: &'a SimpleGraph,
    colors: Vec<u32>,
    /// `counts[v][c]` = neighbours of `v` coloured `c`.
    counts: Vec<Vec<u32>>,
    sat: Vec<usize>,
    best: Vec<u32>,
    best_k: u32,
    lower: u32,
}

impl Search<'_> {
    fn set(&mut self, v: usize, c: u32) {
        self.colors[v] = c;
        for &w in self.h.neighbors(v) {
            let slot = &mut self.counts[w][c as usize];
            if *slot == 0 {
                self.sat[w] += 1;
            }
            *slot += 1;
        }
    }

    fn unset(&mut self, v: usize) {
        let c = self.colors[v];
        self.colors[v] = 0;
        for &w in self.h.neighbors(v) {
            let slot = &mut self.counts[w][c as usize];
            *slot -= 1;
            if *slot == 0 {
                self.sat[w] -= 1;
            }
        }
    }

    fn go(&mut self, colored: usize, used: u32) {
        if self.best_k <= self.lower {
            return;
        }
        let n = self.h.order();
        if colored == n {
            self.best_k = used;
            self.best = self.colors.clone();
            return;
        }
        let v = (0..n)
            .filter(|&v| self.colors[v] == 0)
            .max_by_key(|&v| (self.sat[v], self.h.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let top = (used + 1).min(self.best_k - 1);
        for c in 1..=top {
            if self.counts[v][c as usize] > 0 {
                continue;
            }
            self.set(v, c);
            self.go(colored + 1, used.max(c));
            self.unset(v);
            if self.best_k <= self.lower {
                return;
            }
        }
    }
}

fn chromatic_connected(h: &SimpleGraph) -> Coloring {
    let n = h.order();
    if n == 0 {
        return Coloring::default();
    }
    let greedy = greedy_coloring(h);
    let clique = h.max_clique().len() as u32;
    let lower = if h.two_coloring().is_none() { clique.max(3) } else { clique };
    let mut s = Search {
        h,
        colors: vec![0; n],
        counts: vec![vec![0; greedy.t() as usize + 2]; n],
        sat: vec![0; n],
        best: greedy.colors.clone(),
        best_k: greedy.t(),
        lower,
    };
    s.go(0, 0);
    Coloring { colors: s.best }
}

/// Exact chromatic number with an optimal colouring, by branch and bound
/// over saturation order on each component.
pub fn exact_chromatic(h: &SimpleGraph, cap: usize) -> Result<(usize, Coloring)> {
    if h.order() > cap {
        return Err(Error::OracleTooLarge { size: h.order(), cap });
    }
    let mut colors = vec![0u32; h.order()];
    for comp in h.components() {
        let sub = h.induced(&comp);
        let c = chromatic_connected(&sub);
        for (i, &v) in comp.iter().enumerate() {
            colors[v] = c.colors[i];
        }
    }
    let c = Coloring { colors };
    Ok((c.t() as usize, c))
}

/// Edges of `g` as vertices, adjacent when they share an end.
pub fn edge_conflict_graph(g: &Multigraph) -> SimpleGraph {
    let mut pairs = Vec::new();
    for v in 0..g.order() {
        let inc = g.incident(v);
        for (i, &e) in inc.iter().enumerate() {
            for &f in &inc[i + 1..] {
                pairs.push((e, f));
            }
        }
    }
    SimpleGraph::from_edges(g.size(), pairs)
}

pub fn exact_edge_chromatic(g: &Multigraph, cap: usize) -> Result<(usize, EdgeColoring)> {
    let (k, c) = exact_chromatic(&edge_conflict_graph(g), cap)?;
    Ok((k, EdgeColoring { colors: c.colors }))
}

/// `floor(t * r / (r + 1)) + 1`, or 0 for `t = 0`.
pub fn reduction_bound(t: usize, r: usize) -> usize {
    if t == 0 {
        0
    } else {
        t * r / (r + 1) + 1
    }
}

/// Recolours a proper `t`-colouring in which every vertex sees at most `r`
/// foreign colours, class by class from the top class down, moving each
/// vertex to the least colour absent from its neighbourhood whenever that
/// is below its class. The result is compressed to consecutive colours.
pub fn reduce_coloring(h: &SimpleGraph, c: &Coloring, r: usize) -> Result<Coloring> {
    if !is_proper(h, c)? {
        return Err(Error::PreconditionViolated("input colouring is not proper".into()));
    }
    let seen = max_foreign_colors(h, c);
    if seen > r {
        return Err(Error::PreconditionViolated(format!(
            "a vertex sees {seen} foreign colours, more than r = {r}"
        )));
    }
    let t = c.t();
    let mut colors = c.colors.clone();
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); t as usize + 1];
    for (v, &k) in c.colors.iter().enumerate() {
        classes[k as usize].push(v);
    }
    for class in (1..=t).rev() {
        for &u in &classes[class as usize] {
            let around: BTreeSet<u32> = h.neighbors(u).iter().map(|&w| colors[w]).collect();
            let s = (1..=t).find(|k| !around.contains(k)).unwrap_or(t + 1);
            if s < class {
                colors[u] = s;
            }
        }
    }
    let out = Coloring { colors }.compressed();
    let bound = reduction_bound(t as usize, r);
    if out.t() as usize > bound || !is_proper(h, &out)? {
        return Err(Error::ConstructionFailed(format!(
            "recolouring produced {} colours, bound {bound}",
            out.t()
        )));
    }
    Ok(out)
}

/// Colours each vertex of `upper` (an `ell`-link graph, `ell >= 2`) by the
/// colour of its middle `(ell-2)`-segment in `lower`. Every vertex then sees
/// at most two foreign colours.
pub fn lifted_coloring(
    upper: &LabeledGraph<'_>,
    lower: &LabeledGraph<'_>,
    c: &Coloring,
) -> Result<Coloring> {
    let l = upper.ell;
    if l < 2 || lower.ell + 2 != l {
        return Err(Error::WindowTooShort { min: 2, got: l });
    }
    if !is_proper(&lower.underlying_simple(), c)? {
        return Err(Error::PreconditionViolated("lower colouring is not proper".into()));
    }
    let colors = upper
        .vertices
        .iter()
        .map(|v| {
            let key = v.segment(1, l - 1).expect("in range");
            lower
                .vertex_index(&key)
                .map(|i| c.colors[i])
                .ok_or_else(|| Error::NotALink(format!("{}", key.display(upper.source))))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Coloring { colors })
}

/// Lift followed by the reduction with `r = 2`.
pub fn lift_coloring(
    upper: &LabeledGraph<'_>,
    lower: &LabeledGraph<'_>,
    c: &Coloring,
) -> Result<Coloring> {
    let lifted = lifted_coloring(upper, lower, c)?.compressed();
    let h = upper.underlying_simple();
    if !is_proper(&h, &lifted)? {
        return Err(Error::ConstructionFailed("lifted colouring is not proper".into()));
    }
    reduce_coloring(&h, &lifted, 2)
}

/// The recursive colouring of an `ell`-link graph, with the colour count at
/// each level of the recursion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RecursiveColoring {
    pub ell: usize,
    pub colors_used: usize,
    pub coloring: Coloring,
    /// `(level, colours)` from the base upward.
    pub chain: Vec<(usize, usize)>,
    /// False when the base colouring came from the greedy fallback.
    pub base_exact: bool,
}

/// Colours the 1-link graph from an edge colouring, via each link's edge.
pub fn edge_coloring_to_links(links: &[Link], ec: &EdgeColoring) -> Coloring {
    Coloring {
        colors: links
            .iter()
            .map(|l| match l.middle_unit() {
                Unit::Edge(e) => ec.colors[e],
                Unit::Vertex(_) => unreachable!("1-links have a middle edge"),
            })
            .collect(),
    }
}

fn base_coloring<'g>(g: &'g Multigraph, parity: usize, limits: &Limits) -> Result<(LabeledGraph<'g>, Coloring, bool)> {
    let h = link_graph(g, parity, limits.links)?;
    if parity == 0 {
        let s = g.underlying_simple();
        match exact_chromatic(&s, limits.chromatic_oracle) {
            Ok((_, c)) => Ok((h, c, true)),
            Err(Error::OracleTooLarge { .. }) => Ok((h, greedy_coloring(&s), false)),
            Err(e) => Err(e),
        }
    } else {
        let conflict = edge_conflict_graph(g);
        let (ec, exact) = match exact_chromatic(&conflict, limits.chromatic_oracle) {
            Ok((_, c)) => (EdgeColoring { colors: c.colors }, true),
            Err(Error::OracleTooLarge { .. }) => {
                let ec = EdgeColoring { colors: greedy_coloring(&conflict).colors };
                let shannon = 3 * g.max_degree() / 2;
                if ec.colors.iter().copied().max().unwrap_or(0) as usize > shannon {
                    return Err(Error::ConstructionFailed(format!(
                        "greedy edge colouring exceeds the Shannon bound {shannon}"
                    )));
                }
                (ec, false)
            }
            Err(e) => return Err(e),
        };
        let c = edge_coloring_to_links(&h.vertices, &ec);
        Ok((h, c, exact))
    }
}

/// Colours the `ell`-link graph by starting from an optimal colouring of
/// `G` (even `ell`) or an optimal edge colouring (odd `ell`) and lifting two
/// levels at a time. When the level two below fits the exact oracle, the
/// exact colouring there is lifted as well and the smaller result kept.
pub fn recursive_chromatic_bound(g: &Multigraph, ell: usize, limits: &Limits) -> Result<RecursiveColoring> {
    let parity = ell % 2;
    let (mut lower, mut c, base_exact) = base_coloring(g, parity, limits)?;
    let mut chain = vec![(parity, c.t() as usize)];
    let mut level = parity;
    while level < ell {
        let upper = link_graph(g, level + 2, limits.links)?;
        let mut next = lift_coloring(&upper, &lower, &c)?;
        if level > 1 {
            let s = lower.underlying_simple();
            if s.order() <= limits.chromatic_oracle {
                let (_, exact) = exact_chromatic(&s, limits.chromatic_oracle)?;
                let alt = lift_coloring(&upper, &lower, &exact)?;
                if alt.t() < next.t() {
                    next = alt;
                }
            }
        }
        level += 2;
        chain.push((level, next.t() as usize));
        c = next;
        lower = upper;
    }
    let h = lower.underlying_simple();
    if !is_proper(&h, &c)? {
        return Err(Error::ConstructionFailed("recursive colouring is not proper".into()));
    }
    Ok(RecursiveColoring { ell, colors_used: c.t() as usize, coloring: c, chain, base_exact })
}

/// `floor((2/3)^k * x) + 3` for integer `x` (which may be negative).
pub fn decay_bound(k: usize, x: i64) -> i64 {
    if k > 40 {
        return if x > 0 && (x as f64) >= 1.5f64.powi(k as i32) {
            // not reachable for graph-sized inputs; fall back to float
            ((2.0f64 / 3.0).powi(k as i32) * x as f64).floor() as i64 + 3
        } else if x >= 0 {
            3
        } else {
            2
        };
    }
    let num = (1i128 << k) * x as i128;
    let den = 3i128.pow(k as u32);
    num.div_euclid(den) as i64 + 3
}

/// The four upper bounds on the chromatic number of the `ell`-link graph;
/// `None` where a bound does not apply or its input is unknown.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem1Bounds {
    pub even: Option<i64>,
    pub odd: Option<i64>,
    pub max_degree: Option<i64>,
    pub two_below: Option<i64>,
}

impl Theorem1Bounds {
    pub fn min(&self) -> Option<i64> {
        [self.even, self.odd, self.max_degree, self.two_below].into_iter().flatten().min()
    }
}

/// `chi`, `chi_prime`: chromatic and edge-chromatic numbers of `G`;
/// `chi_two_below`: chromatic number of the `(ell-2)`-link graph if known.
pub fn theorem1_bounds(
    ell: usize,
    chi: Option<usize>,
    chi_prime: Option<usize>,
    max_degree: usize,
    chi_two_below: Option<usize>,
) -> Theorem1Bounds {
    let even = (ell % 2 == 0)
        .then_some(chi)
        .flatten()
        .map(|x| (x as i64).min(decay_bound(ell / 2, x as i64 - 3)));
    let odd = (ell % 2 == 1)
        .then_some(chi_prime)
        .flatten()
        .map(|x| (x as i64).min(decay_bound((ell - 1) / 2, x as i64 - 3)));
    Theorem1Bounds {
        even,
        odd,
        max_degree: (ell != 1).then_some(max_degree as i64 + 1),
        two_below: (ell >= 2).then_some(chi_two_below).flatten().map(|x| x as i64),
    }
}

/// Whether `3^k > x * 2^k`, exactly.
fn power_exceeds(k: usize, x: i64) -> bool {
    if x <= 0 {
        return true;
    }
    if k > 40 {
        return 1.5f64.powi(k as i32) > x as f64;
    }
    3i128.pow(k as u32) > (x as i128) << k
}

/// The thresholds beyond which the `ell`-link graph is 3-colourable.
pub fn three_colorable_by_threshold(ell: usize, chi: usize, chi_prime: usize) -> bool {
    if ell % 2 == 0 {
        chi <= 3 || power_exceeds(ell / 2, chi as i64 - 3)
    } else {
        chi_prime <= 3 || power_exceeds((ell - 1) / 2, chi_prime as i64 - 3)
    }
}
