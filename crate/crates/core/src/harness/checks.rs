//! Claim checks as pure functions of already-built objects, so a corrupted
//! object can be fed in to confirm the check notices.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::{json, Value};

use crate::coloring::{is_proper, reduction_bound, Coloring};
use crate::construction::{
    embeds_as_induced, natural_iso, quotient, verify_almost_standard, AlmostStandardPartition,
    LabeledDigraph, LabeledGraph,
};
use crate::links::Link;
use crate::minors::{verify_minor, MinorWitness};
use crate::multigraph::SimpleGraph;

/// Result of one check: pass flag, what was computed, what it was held to.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub pass: bool,
    pub computed: Value,
    pub bounds: Value,
    pub detail: String,
}

impl Outcome {
    pub fn new(pass: bool, computed: Value, bounds: Value) -> Self {
        Outcome { pass, computed, bounds, detail: String::new() }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }
}

/// Edges of the `ell`-link graph against vertices of the next one; for an
/// `r`-regular source also the closed-form count and the regularity.
pub fn edge_vertex_identity(h: &LabeledGraph<'_>, next_order: usize, regular: Option<(usize, usize)>) -> Outcome {
    let mut pass = h.size() == next_order;
    let mut bounds = json!({ "next_order": next_order });
    let mut computed = json!({ "edges": h.size() });
    if let Some((r, m)) = regular.filter(|&(r, _)| r >= 2) {
        let formula = (m as u128) * ((r - 1) as u128).pow(h.ell as u32);
        pass &= next_order as u128 == formula;
        bounds["formula"] = json!(formula.to_string());
        if h.ell >= 1 {
            let reg = h.regular_degree();
            pass &= reg == Some(2 * (r - 1));
            computed["regular_degree"] = json!(reg);
            bounds["regular_degree"] = json!(2 * (r - 1));
        }
    }
    Outcome::new(pass, computed, bounds)
}

/// Order and degree formulas for link graphs of `K_{n,m}`.
pub fn bipartite_counts(h: &LabeledGraph<'_>, n: usize, m: usize) -> Outcome {
    let ell = h.ell as u32;
    let base = ((n - 1) * (m - 1)) as u128;
    let (n128, m128) = (n as u128, m as u128);
    let computed = json!({ "order": h.order(), "edges": h.size(), "regular_degree": h.regular_degree() });
    if ell % 2 == 1 {
        let order = n128 * m128 * base.pow((ell - 1) / 2);
        let pass = h.order() as u128 == order && h.regular_degree() == Some(n + m - 2);
        Outcome::new(pass, computed, json!({ "order": order.to_string(), "regular_degree": n + m - 2 }))
    } else {
        let order = n128 * m128 * (n128 + m128 - 2) * base.pow(ell / 2 - 1) / 2;
        // average degree 2|E|/|V| = 4(n-1)(m-1)/(n+m-2), cross-multiplied
        let avg_ok = 2 * h.size() as u128 * (n128 + m128 - 2) == 4 * base * h.order() as u128;
        let pass = h.order() as u128 == order && avg_ok;
        Outcome::new(
            pass,
            computed,
            json!({ "order": order.to_string(), "average_degree": format!("{}/{}", 4 * base, n + m - 2) }),
        )
    }
}

pub fn loopless(h: &LabeledGraph<'_>) -> Outcome {
    let loops = h
        .edges
        .iter()
        .filter(|e| {
            e.ends.0 == e.ends.1
                || e.label.windows().is_some_and(|(a, b)| a == b)
        })
        .count();
    Outcome::new(loops == 0, json!({ "loops": loops }), json!({ "loops": 0 }))
}

pub fn multiplicity(h: &LabeledGraph<'_>, has_parallel: bool) -> Outcome {
    let mult = h.max_multiplicity();
    let pattern = h.check_multiplicity_pattern();
    let expected = if h.ell >= 1 && has_parallel { 2 } else { 1 };
    let pass = (h.size() == 0 || mult == expected) && pattern.is_ok();
    Outcome::new(pass, json!({ "max_multiplicity": mult }), json!({ "max_multiplicity": expected }))
        .with_detail(pattern.err().unwrap_or_default())
}

/// Links sharing a middle unit lie in one component exactly when the link
/// graph is connected.
pub fn same_middle_criterion(h: &LabeledGraph<'_>) -> Outcome {
    let comps = h.underlying_simple().components();
    let mut comp_of = vec![0; h.order()];
    for (c, members) in comps.iter().enumerate() {
        for &v in members {
            comp_of[v] = c;
        }
    }
    let mut by_middle: BTreeMap<_, BTreeSet<usize>> = BTreeMap::new();
    for (i, l) in h.vertices.iter().enumerate() {
        by_middle.entry(l.middle_unit()).or_default().insert(comp_of[i]);
    }
    let criterion = by_middle.values().all(|s| s.len() == 1);
    let connected = comps.len() <= 1;
    Outcome::new(criterion == connected, json!({ "criterion": criterion }), json!({ "connected": connected }))
}

pub fn connectivity_agreement(hub_answer: bool, h: &LabeledGraph<'_>) -> Outcome {
    let bfs = h.underlying_simple().components().len() <= 1;
    Outcome::new(hub_answer == bfs, json!({ "hub_criterion": hub_answer }), json!({ "bfs": bfs }))
}

pub fn partition(h: &LabeledGraph<'_>, p: &AlmostStandardPartition, lower: &LabeledGraph<'_>) -> Outcome {
    let embeds = quotient(h, p).is_ok_and(|q| embeds_as_induced(&q, lower));
    match verify_almost_standard(h, p) {
        Ok(r) => Outcome::new(
            r.all() && embeds,
            json!({ "conditions": r, "quotient_embeds": embeds }),
            json!({ "all": true }),
        ),
        Err(e) => Outcome::new(false, json!(null), json!({ "all": true })).with_detail(e.to_string()),
    }
}

/// Sending each link to its middle `(ell-2)`-segment maps edges to edges.
pub fn middle_homomorphism(h: &LabeledGraph<'_>, lower: &LabeledGraph<'_>) -> Outcome {
    let l = h.ell;
    let image: Option<Vec<usize>> =
        h.vertices.iter().map(|v| lower.vertex_index(&v.segment(1, l - 1).ok()?)).collect();
    let Some(image) = image else {
        return Outcome::new(false, json!(null), json!(null)).with_detail("a middle segment is not a link");
    };
    let ls = lower.underlying_simple();
    let bad = h.edges.iter().filter(|e| !ls.has_edge(image[e.ends.0], image[e.ends.1])).count();
    Outcome::new(bad == 0, json!({ "non_edges_hit": bad }), json!({ "non_edges_hit": 0 }))
}

/// Recolouring result against the `floor(tr/(r+1)) + 1` bound.
pub fn reduction(h: &SimpleGraph, input: &Coloring, output: &Coloring, r: usize) -> Outcome {
    let proper = is_proper(h, output).unwrap_or(false);
    let t = input.t() as usize;
    let bound = reduction_bound(t, r);
    Outcome::new(
        proper && output.t() as usize <= bound,
        json!({ "input_colours": t, "output_colours": output.t(), "proper": proper }),
        json!({ "bound": bound, "r": r }),
    )
}

/// A colouring checked for properness and a colour-count bound, with an
/// optional exact chromatic number held to the same bound.
pub fn coloring_bound(h: &SimpleGraph, c: &Coloring, bound: i64, exact: Option<usize>) -> Outcome {
    let proper = is_proper(h, c).unwrap_or(false);
    let used = c.t() as i64;
    let exact_ok = exact.is_none_or(|x| x as i64 <= bound);
    Outcome::new(
        proper && used <= bound && exact_ok,
        json!({ "colours_used": used, "proper": proper, "exact_chromatic": exact }),
        json!({ "bound": bound }),
    )
}

/// A verified witness of order at least `required`.
pub fn witness_at_least(h: &SimpleGraph, w: &MinorWitness, required: usize, exact: Option<usize>) -> Outcome {
    let verdict = verify_minor(h, w);
    let order = w.target.order();
    let exact_ok = exact.is_none_or(|x| x >= required && x >= order);
    Outcome::new(
        verdict.is_ok() && order >= required && exact_ok,
        json!({ "witness": w.target_name(), "verified": verdict.is_ok(), "exact_hadwiger": exact }),
        json!({ "at_least": required }),
    )
    .with_detail(verdict.err().map(|d| d.to_string()).unwrap_or_default())
}

/// Labelled simple graphs compared by vertex links and edge labels.
pub fn same_labeled_graph(a: &LabeledGraph<'_>, b: &LabeledGraph<'_>) -> Outcome {
    let edges = |h: &LabeledGraph<'_>| -> BTreeSet<(Link, Link)> {
        h.edges
            .iter()
            .map(|e| (h.vertices[e.ends.0].clone(), h.vertices[e.ends.1].clone()))
            .collect()
    };
    let pass = a.vertices == b.vertices && edges(a) == edges(b) && a.size() == b.size();
    Outcome::new(
        pass,
        json!({ "order": a.order(), "size": a.size() }),
        json!({ "order": b.order(), "size": b.size() }),
    )
}

pub fn digraph_iso(direct: &LabeledDigraph, iterated: &LabeledDigraph) -> Outcome {
    let pass = natural_iso(direct, iterated);
    Outcome::new(
        pass,
        json!({ "order": iterated.order(), "size": iterated.size() }),
        json!({ "order": direct.order(), "size": direct.size() }),
    )
}
