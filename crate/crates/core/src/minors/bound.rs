use std::collections::{BTreeMap, VecDeque};

use serde::Serialize;

use super::cut::cycle_window;
use super::{
    contraction_heuristic, degeneracy_minor, exact_hadwiger, kt1_minor_with_cycle, kt_minor_from_cut,
    lift_minor, CutInstance, LinkMinor, MinorWitness,
};
use crate::construction::{link_graph, LabeledGraph};
use crate::error::{Error, Result};
use crate::links::middle_units;
use crate::multigraph::Multigraph;
use crate::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Route {
    Edge,
    Cycle,
    Degeneracy,
    Cut,
    CutWithCycle,
    HubLift,
    Contraction,
}

/// A lower bound on the Hadwiger number of a link graph, carried by a
/// verified witness.
#[derive(Clone, Debug)]
pub struct HadwigerBound {
    pub bound: usize,
    pub route: Route,
    pub witness: MinorWitness,
    /// Best order reached by each route that produced something.
    pub routes: BTreeMap<Route, usize>,
    /// Exact Hadwiger number of `G`, when `G` fits the oracle.
    pub eta_g: Option<usize>,
    pub degeneracy: usize,
}

const CANDIDATE_CAP: usize = 200;
const CONTRACTION_SEED: u64 = 0x5eed;

/// A cycle of length at least 3 as closed units, found by BFS that ignores
/// every edge parallel to the starting one.
fn long_cycle(g: &Multigraph) -> Option<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    for e in 0..g.size() {
        let (a, b) = g.endpoints(e);
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; g.order()];
        let mut seen = vec![false; g.order()];
        seen[b] = true;
        let mut queue = VecDeque::from([b]);
        while let Some(u) = queue.pop_front() {
            for &f in g.incident(u) {
                let w = g.other_end(f, u);
                let parallel = (u == a && w == b) || (u == b && w == a);
                if parallel || seen[w] {
                    continue;
                }
                seen[w] = true;
                parent[w] = Some((u, f));
                queue.push_back(w);
            }
        }
        if !seen[a] {
            continue;
        }
        let mut units = vec![a];
        let mut cur = a;
        while let Some((p, f)) = parent[cur] {
            units.push(f);
            units.push(p);
            cur = p;
        }
        units.reverse();
        units.extend([e, b]);
        if best.as_ref().is_none_or(|c| units.len() < c.len()) {
            best = Some(units);
        }
    }
    best
}

fn cycle_minor(host: &LabeledGraph<'_>) -> Result<Option<MinorWitness>> {
    let g = host.source;
    let Some(closed) = long_cycle(g) else { return Ok(None) };
    let k = closed.len() / 2;
    let w: Vec<_> = (0..k).map(|p| Ok(cycle_window(g, &closed, p, host.ell)?.to_link())).collect::<Result<_>>()?;
    let m = LinkMinor {
        target: MinorWitness::complete_target(3),
        branch_sets: vec![vec![w[0].clone()], vec![w[1].clone()], w[2..].to_vec()],
        connectors: BTreeMap::from([
            ((0, 1), vec![w[0].clone(), w[1].clone()]),
            ((1, 2), vec![w[1].clone(), w[2].clone()]),
            ((0, 2), vec![w[0].clone(), w[k - 1].clone()]),
        ]),
    };
    Ok(m.realize_verified(host).ok())
}

fn component_masks(g: &Multigraph, mask: &[bool]) -> Vec<Vec<bool>> {
    g.components_within(mask)
        .into_iter()
        .map(|c| {
            let mut m = vec![false; g.order()];
            for v in c {
                m[v] = true;
            }
            m
        })
        .collect()
}

/// Single vertices, then balls of radius `r` with `2r < ell`.
fn cut_candidates(g: &Multigraph, ell: usize, within: &[bool]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (0..g.order()).filter(|&v| within[v]).map(|v| vec![v]).collect();
    let s = g.underlying_simple();
    for r in 1..=(ell.saturating_sub(1)) / 2 {
        for v in (0..g.order()).filter(|&v| within[v]) {
            let ball: Vec<usize> = s
                .distances(v)
                .iter()
                .enumerate()
                .filter(|&(w, d)| within[w] && d.is_some_and(|d| d <= r))
                .map(|(w, _)| w)
                .collect();
            if !out.contains(&ball) {
                out.push(ball);
            }
        }
    }
    out.truncate(CANDIDATE_CAP);
    out
}

fn cut_route(host: &LabeledGraph<'_>, floor: usize) -> Option<(Route, MinorWitness)> {
    let g = host.source;
    let ell = host.ell;
    let all = vec![true; g.order()];
    let mut masks = component_masks(g, &all);
    masks.extend(component_masks(g, &g.peel_leaves(&all)));
    let mut best: Option<(Route, MinorWitness)> = None;
    let mut floor = floor;
    for within in masks {
        for x in cut_candidates(g, ell, &within) {
            let inst = CutInstance { x, within: within.clone() };
            if inst.check(g, ell).is_err() {
                continue;
            }
            let t = inst.cut_arcs(g).len();
            let cyclic = g.has_cycle_within(&inst.y_mask());
            let potential = if cyclic { t + 1 } else { t };
            if potential <= floor {
                continue;
            }
            let attempt = if cyclic {
                kt1_minor_with_cycle(g, ell, &inst).map(|m| (Route::CutWithCycle, m))
            } else {
                kt_minor_from_cut(g, ell, &inst).map(|m| (Route::Cut, m))
            };
            if let Ok((route, m)) = attempt {
                if let Ok(w) = m.realize_verified(host) {
                    floor = w.target.order();
                    best = Some((route, w));
                }
            }
        }
    }
    best
}

fn to_link_minor(host: &LabeledGraph<'_>, w: &MinorWitness) -> LinkMinor {
    let link = |&k: &usize| host.vertices[k].clone();
    LinkMinor {
        target: w.target.clone(),
        branch_sets: w.branch_sets.iter().map(|s| s.iter().map(link).collect()).collect(),
        connectors: w.connectors.iter().map(|(&k, p)| (k, p.iter().map(link).collect())).collect(),
    }
}

/// Lifts a complete minor of `G` itself: peel leaves from the component
/// holding the oracle's model, check the peeled graph is its own hub, then
/// lift through the hub or fall back to a cut around a short branch set.
fn hub_route(host: &LabeledGraph<'_>, model: &MinorWitness, limits: &Limits) -> Result<Option<(Route, MinorWitness)>> {
    let g = host.source;
    let ell = host.ell;
    let mut mask = vec![false; g.order()];
    for s in &model.branch_sets {
        for &v in s {
            mask[v] = true;
        }
    }
    let Some(comp) = component_masks(g, &vec![true; g.order()]).into_iter().find(|c| (0..g.order()).any(|v| c[v] && mask[v]))
    else {
        return Ok(None);
    };
    let kept_mask = g.peel_leaves(&comp);
    let kept: Vec<usize> = (0..g.order()).filter(|&v| kept_mask[v]).collect();
    let mut position = vec![usize::MAX; g.order()];
    for (i, &v) in kept.iter().enumerate() {
        position[v] = i;
    }
    let sets: Vec<Vec<usize>> = model
        .branch_sets
        .iter()
        .map(|s| s.iter().filter(|&&v| kept_mask[v]).copied().collect::<Vec<_>>())
        .collect();
    if sets.iter().any(Vec::is_empty) {
        return Ok(None);
    }
    let peeled = g.induced_by_indices(&kept);
    let middles = middle_units(&peeled, ell, limits.links)?;
    let own_hub = if ell % 2 == 0 { middles.len() == peeled.order() } else { middles.len() == peeled.size() };
    if !own_hub {
        return Ok(None);
    }
    let local: Vec<Vec<usize>> = sets.iter().map(|s| s.iter().map(|&v| position[v]).collect()).collect();
    let peeled_host = link_graph(&peeled, ell, limits.links)?;
    match lift_minor(&peeled_host, &local, &model.target, limits.links) {
        Ok(w) => {
            let m = to_link_minor(&peeled_host, &w).transport(&peeled, g)?;
            Ok(m.realize_verified(host).ok().map(|w| (Route::HubLift, w)))
        }
        Err(Error::BranchSetLacksLink(_)) => {
            for x in &sets {
                let inst = CutInstance { x: x.clone(), within: kept_mask.clone() };
                if inst.check(g, ell).is_err() {
                    continue;
                }
                if let Ok(m) = kt1_minor_with_cycle(g, ell, &inst) {
                    if let Ok(w) = m.realize_verified(host) {
                        return Ok(Some((Route::CutWithCycle, w)));
                    }
                }
            }
            Ok(None)
        }
        Err(_) => Ok(None),
    }
}

/// Best verified complete minor of the `ell`-link graph over all routes.
pub fn hadwiger_lower_bound(g: &Multigraph, ell: usize, limits: &Limits) -> Result<HadwigerBound> {
    if ell == 0 {
        return Err(Error::PreconditionViolated("Hadwiger lower bound needs ell >= 1".into()));
    }
    let host = link_graph(g, ell, limits.links)?;
    hadwiger_lower_bound_in(&host, limits)
}

pub(crate) fn hadwiger_lower_bound_in(host: &LabeledGraph<'_>, limits: &Limits) -> Result<HadwigerBound> {
    let g = host.source;
    let h = host.underlying_simple();
    let Some((a, b)) = h.edges().next() else { return Err(Error::NoEdge) };
    let mut found: Vec<(Route, MinorWitness)> = Vec::new();
    found.push((Route::Edge, MinorWitness::from_adjacent_sets(&h, vec![vec![a], vec![b]]).expect("adjacent")));
    if let Some(w) = cycle_minor(host)? {
        found.push((Route::Cycle, w));
    }
    if let Some(w) = degeneracy_minor(host, limits.links)? {
        found.push((Route::Degeneracy, w));
    }
    let floor = found.iter().map(|(_, w)| w.target.order()).max().unwrap_or(0);
    if let Some(hit) = cut_route(host, floor) {
        found.push(hit);
    }
    let simple = g.underlying_simple();
    let eta_g = if simple.order() <= limits.hadwiger_oracle {
        let (eta, model) = exact_hadwiger(&simple, limits.hadwiger_oracle)?;
        if eta >= 4 {
            if let Some(hit) = hub_route(host, &model, limits)? {
                found.push(hit);
            }
        }
        Some(eta)
    } else {
        None
    };
    let trials = if h.order() <= 200 { 64 } else if h.order() <= 2000 { 4 } else { 0 };
    if let Some(w) = contraction_heuristic(&h, CONTRACTION_SEED, trials) {
        found.push((Route::Contraction, w));
    }
    let mut routes = BTreeMap::new();
    for (r, w) in &found {
        let e = routes.entry(*r).or_insert(0);
        *e = (*e).max(w.target.order());
    }
    let (route, witness) = found
        .into_iter()
        .rev()
        .max_by_key(|(r, w)| (w.target.order(), std::cmp::Reverse(*r)))
        .expect("the edge route always succeeds");
    Ok(HadwigerBound {
        bound: witness.target.order(),
        route,
        witness,
        routes,
        eta_g,
        degeneracy: g.degeneracy(),
    })
}

/// Which of the five sufficient conditions for Hadwiger's conjecture on the
/// `ell`-link graph hold for `G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Theorem3Cases {
    pub biconnected: bool,
    pub even: bool,
    pub degeneracy_threshold: bool,
    pub max_degree_threshold: bool,
    pub small_max_degree: bool,
}

impl Theorem3Cases {
    pub fn any(&self) -> bool {
        self.biconnected || self.even || self.degeneracy_threshold || self.max_degree_threshold || self.small_max_degree
    }

    pub fn tags(&self) -> Vec<&'static str> {
        [
            (self.biconnected, "Thm3.1"),
            (self.even, "Thm3.2"),
            (self.degeneracy_threshold, "Thm3.3"),
            (self.max_degree_threshold, "Thm3.4"),
            (self.small_max_degree, "Thm3.5"),
        ]
        .into_iter()
        .filter_map(|(on, tag)| on.then_some(tag))
        .collect()
    }
}

/// The additive constant of case (4), `4 log_{1.5} 2 - 3`.
pub fn case4_constant() -> f64 {
    4.0 * 2f64.ln() / 1.5f64.ln() - 3.0
}

pub fn theorem3_cases(g: &Multigraph, ell: usize) -> Theorem3Cases {
    let d = g.degeneracy() as i128;
    let delta = g.max_degree() as i128;
    // ell > 2 log_{1.5}((delta-2)/(d-2)) + 3, squared out into integers
    let degeneracy_threshold = d >= 3 && ell > 3 && {
        let x = (ell - 3) as u32;
        if x < 60 {
            3i128.pow(x) * (d - 2) * (d - 2) > (1i128 << x) * (delta - 2) * (delta - 2)
        } else {
            1.5f64.powi(x as i32) > (((delta - 2) * (delta - 2)) as f64 / ((d - 2) * (d - 2)) as f64)
        }
    };
    let max_degree_threshold = delta >= 3
        && (ell as f64) > 2.0 * ((delta - 2) as f64).ln() / 1.5f64.ln() - case4_constant();
    Theorem3Cases {
        biconnected: ell >= 1 && g.is_biconnected(),
        even: ell >= 2 && ell % 2 == 0,
        degeneracy_threshold,
        max_degree_threshold,
        small_max_degree: delta <= 5,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::*;

    fn bound(g: &Multigraph, ell: usize) -> HadwigerBound {
        hadwiger_lower_bound(g, ell, &Limits::default()).unwrap()
    }

    #[test]
    fn spec_examples() {
        assert!(bound(&complete(4).unwrap(), 1).bound >= 4);
        assert!(bound(&dipole(3).unwrap(), 1).bound >= 3);
        let w5 = bound(&wheel(5).unwrap(), 1);
        assert!(w5.bound >= 5);
        let p = bound(&petersen(), 2);
        assert_eq!(p.eta_g, Some(5));
        assert!(p.bound >= 6, "{:?}", p.routes);
    }

    #[test]
    fn no_edge_is_an_error() {
        let g = path(1).unwrap();
        assert!(matches!(hadwiger_lower_bound(&g, 1, &Limits::default()), Err(Error::NoEdge)));
    }

    #[test]
    fn cycles_give_triangles() {
        for n in 3..=8 {
            for ell in 1..=4 {
                let b = bound(&cycle(n).unwrap(), ell);
                assert_eq!(b.bound, 3);
            }
        }
    }

    #[test]
    fn theorem_three_conditions() {
        let c = theorem3_cases(&petersen(), 2);
        assert!(c.biconnected && c.even && c.small_max_degree);
        assert!(!theorem3_cases(&path(3).unwrap(), 1).biconnected);
        let k7 = complete(7).unwrap();
        assert!(!theorem3_cases(&k7, 1).small_max_degree);
        // Delta = d = 6: any ell > 3 qualifies
        assert!(theorem3_cases(&k7, 4).degeneracy_threshold);
        assert!(!theorem3_cases(&k7, 3).degeneracy_threshold);
        // Delta = 3: case (4) holds for every ell
        assert!(theorem3_cases(&petersen(), 1).max_degree_threshold);
        assert!((case4_constant() - 3.838).abs() < 1e-3);
    }
}
