use std::collections::BTreeSet;
use std::time::Instant;

use rayon::prelude::*;
use serde_json::json;

use super::checks::{self, Outcome};
use super::{claim_selected, Corpus, Family, Instance, Record, Report, Status};
use crate::coloring::{
    exact_chromatic, exact_edge_chromatic, greedy_coloring, lifted_coloring, max_foreign_colors,
    recursive_chromatic_bound, reduce_coloring, theorem1_bounds, three_colorable_by_threshold, Coloring,
    RecursiveColoring,
};
use crate::construction::{
    arc_digraph, hub_links, iterated_line_digraph, link_graph, link_graph_connected, natural_partition,
    path_graph, LabeledGraph,
};
use crate::error::{Error, Result};
use crate::links::{enumerate_links, hub_subgraph, middle_units, replay_shunt, shunt_path, Link};
use crate::minors::{
    exact_hadwiger, kt1_minor_with_cycle, kt_minor_from_cut, lift_minor, theorem3_cases, CutInstance,
    MinorWitness,
};
use crate::minors::hadwiger_lower_bound_in;
use crate::multigraph::{to_edge_list, Multigraph, SimpleGraph};
use crate::Limits;

enum Verdict {
    Checked(Outcome),
    Skip(String),
    NotApplicable,
}

struct Job<'a> {
    instance: &'a Instance,
    ell: usize,
    claims: Option<&'a [String]>,
    out: Vec<Record>,
}

impl Job<'_> {
    fn run(&mut self, claim: &str, f: impl FnOnce() -> Result<Verdict>) {
        if !claim_selected(self.claims, claim) {
            return;
        }
        let start = Instant::now();
        let verdict = f();
        let runtime_ms = start.elapsed().as_millis() as u64;
        let (status, computed, bounds, detail) = match verdict {
            Ok(Verdict::NotApplicable) => return,
            Ok(Verdict::Checked(o)) => {
                let status = if o.pass { Status::Pass } else { Status::Fail };
                (status, o.computed, o.bounds, o.detail)
            }
            Ok(Verdict::Skip(reason)) => (Status::Skip, json!(null), json!(null), reason),
            Err(e @ (Error::LimitExceeded { .. } | Error::OracleTooLarge { .. })) => {
                (Status::Skip, json!(null), json!(null), e.to_string())
            }
            Err(e) => (Status::Fail, json!(null), json!(null), e.to_string()),
        };
        let reproduce = (status == Status::Fail).then(|| self.reproduction(claim));
        self.out.push(Record {
            claim: claim.to_string(),
            instance: self.instance.name.clone(),
            ell: Some(self.ell),
            status,
            computed,
            bounds,
            detail,
            reproduce,
            runtime_ms,
        });
    }

    fn reproduction(&self, claim: &str) -> String {
        let ell = self.ell;
        match self.instance.family {
            Family::File => format!(
                "linkgraph verify --claims {claim} --ell {ell} <file holding:\n{}>",
                to_edge_list(&self.instance.graph)
            ),
            _ => format!("linkgraph verify --claims {claim} --ell {ell} @{}", self.instance.name),
        }
    }

    fn wants_any(&self, claims: &[&str]) -> bool {
        claims.iter().any(|c| claim_selected(self.claims, c))
    }
}

/// Non-backtracking walks of length `k >= 1`, counted by dynamic
/// programming over directed edges and halved for reversal.
pub(crate) fn count_links_by_walks(g: &Multigraph, k: usize) -> u128 {
    if k == 0 {
        return g.order() as u128;
    }
    // dart 2e runs from the first endpoint to the second, 2e+1 back
    let head = |d: usize| {
        let (a, b) = g.endpoints(d / 2);
        if d % 2 == 0 {
            b
        } else {
            a
        }
    };
    let mut count = vec![1u128; 2 * g.size()];
    for _ in 1..k {
        let mut next = vec![0u128; 2 * g.size()];
        for (d, &c) in count.iter().enumerate() {
            let v = head(d);
            for &e in g.incident(v) {
                if e != d / 2 {
                    let out = if g.endpoints(e).0 == v { 2 * e } else { 2 * e + 1 };
                    next[out] += c;
                }
            }
        }
        count = next;
    }
    count.iter().sum::<u128>() / 2
}

/// Paths with `k >= 1` edges, by depth-first search over distinct vertices.
pub(crate) fn count_paths_by_search(g: &Multigraph, k: usize) -> u128 {
    fn grow(g: &Multigraph, v: usize, left: usize, used: &mut Vec<bool>) -> u128 {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for &e in g.incident(v) {
            let w = g.other_end(e, v);
            if !used[w] {
                used[w] = true;
                total += grow(g, w, left - 1, used);
                used[w] = false;
            }
        }
        total
    }
    let mut used = vec![false; g.order()];
    let mut total = 0;
    for v in 0..g.order() {
        used[v] = true;
        total += grow(g, v, k, &mut used);
        used[v] = false;
    }
    if k == 0 {
        total
    } else {
        total / 2
    }
}

fn rename(l: &Link, from: &Multigraph, to: &Multigraph) -> Result<Link> {
    let names: Vec<&str> = l
        .units()
        .iter()
        .enumerate()
        .map(|(i, &u)| {
            if i % 2 == 0 {
                from.vertex_id(u as usize).0.as_str()
            } else {
                from.edge_id(u as usize).0.as_str()
            }
        })
        .collect();
    Link::from_names(to, &names)
}

fn hub_segments(g: &Multigraph, ell: usize, limit: usize) -> Result<Outcome> {
    let hub = hub_subgraph(g, ell, limit)?;
    let m = ell / 2;
    let mut missing = 0;
    let mut checked = 0;
    for s in 0..=2 {
        let middles: BTreeSet<Link> = enumerate_links(g, 2 * m + s, limit)?
            .iter()
            .map(|q| q.segment(m, m + s).map(|x| x.arc().to_link()))
            .collect::<Result<_>>()?;
        for l in enumerate_links(&hub, s, limit)? {
            checked += 1;
            if !middles.contains(&rename(&l, &hub, g)?) {
                missing += 1;
            }
        }
    }
    let connected = hub.is_connected();
    Ok(Outcome::new(
        connected && missing == 0,
        json!({ "hub_connected": connected, "hub_links_checked": checked, "not_middle_segments": missing }),
        json!({ "hub_connected": true, "not_middle_segments": 0 }),
    ))
}

fn hub_shunting(g: &Multigraph, ell: usize, limit: usize) -> Result<Verdict> {
    let hub = hub_subgraph(g, ell, limit)?;
    if !hub.is_connected() {
        return Ok(Verdict::NotApplicable);
    }
    let inner = hub_links(g, ell, limit)?;
    if inner.len() < 2 {
        return Ok(Verdict::NotApplicable);
    }
    let units = middle_units(g, ell, limit)?;
    let allow = |l: &Link| units.contains(&l.middle_unit());
    let step = (inner.len() / 8).max(1);
    let mut failures = 0;
    let mut pairs = 0;
    for target in inner.iter().skip(1).step_by(step) {
        pairs += 1;
        match shunt_path(g, &inner[0], target, allow)? {
            Some(steps) if replay_shunt(&inner[0], &steps).as_ref() == Some(target) => {}
            _ => failures += 1,
        }
    }
    Ok(Verdict::Checked(Outcome::new(
        failures == 0,
        json!({ "pairs": pairs, "failed": failures }),
        json!({ "failed": 0 }),
    )))
}

fn component_mask(g: &Multigraph, v: usize) -> Vec<bool> {
    let mut m = vec![false; g.order()];
    for comp in g.components() {
        if comp.contains(&v) {
            for w in comp {
                m[w] = true;
            }
        }
    }
    m
}

const CUT_ATTEMPTS: usize = 12;

/// Runs both cut constructions over single vertices and single edges as
/// `X`, returning the outcome for the plain cut and for the cycle variant.
fn cut_lemmas(host: &LabeledGraph<'_>) -> Result<(Option<Outcome>, Option<Outcome>)> {
    let g = host.source;
    let ell = host.ell;
    let mut candidates: Vec<Vec<usize>> = (0..g.order()).map(|v| vec![v]).collect();
    if ell >= 2 {
        let pairs: BTreeSet<(usize, usize)> = (0..g.size()).map(|e| g.endpoints(e)).collect();
        candidates.extend(pairs.into_iter().map(|(a, b)| vec![a, b]));
    }
    let mut plain = Vec::new();
    let mut cyclic = Vec::new();
    for x in candidates {
        if plain.len() >= CUT_ATTEMPTS && cyclic.len() >= CUT_ATTEMPTS {
            break;
        }
        let inst = CutInstance { within: component_mask(g, x[0]), x };
        if inst.check(g, ell).is_err() {
            continue;
        }
        let t = inst.cut_arcs(g).len();
        if t < 2 {
            continue;
        }
        let names: Vec<&str> = inst.x.iter().map(|&v| g.vertex_id(v).0.as_str()).collect();
        if plain.len() < CUT_ATTEMPTS {
            let got = kt_minor_from_cut(g, ell, &inst).and_then(|m| m.realize_verified(host));
            plain.push(json!({ "x": names, "t": t, "minor": got.map(|w| w.target.order()).ok() }));
        }
        if cyclic.len() < CUT_ATTEMPTS && g.has_cycle_within(&inst.y_mask()) {
            let got = kt1_minor_with_cycle(g, ell, &inst).and_then(|m| m.realize_verified(host));
            cyclic.push(json!({ "x": names, "t": t, "minor": got.map(|w| w.target.order()).ok() }));
        }
    }
    let summarize = |attempts: Vec<serde_json::Value>, extra: usize| {
        (!attempts.is_empty()).then(|| {
            let pass = attempts
                .iter()
                .all(|a| a["minor"].as_u64() == Some(a["t"].as_u64().unwrap() + extra as u64));
            Outcome::new(pass, json!({ "attempts": attempts }), json!({ "minor_order": format!("t + {extra}") }))
        })
    };
    Ok((summarize(plain, 0), summarize(cyclic, 1)))
}

/// Grows the branch sets of a complete-minor model until they cover every
/// vertex of their components, each step absorbing an unassigned neighbour.
fn cover(h: &SimpleGraph, sets: &mut [Vec<usize>]) {
    let mut owner: Vec<Option<usize>> = vec![None; h.order()];
    for (i, s) in sets.iter().enumerate() {
        for &v in s {
            owner[v] = Some(i);
        }
    }
    let mut grew = true;
    while grew {
        grew = false;
        for v in 0..h.order() {
            if owner[v].is_none() {
                if let Some(i) = h.neighbors(v).iter().find_map(|&w| owner[w]) {
                    owner[v] = Some(i);
                    sets[i].push(v);
                    grew = true;
                }
            }
        }
    }
    for s in sets.iter_mut() {
        s.sort_unstable();
    }
}

/// Two-part splits of a component along the edges of a BFS tree.
fn tree_splits(h: &SimpleGraph) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for comp in h.components() {
        let mut parent = vec![usize::MAX; h.order()];
        let mut order = vec![comp[0]];
        parent[comp[0]] = comp[0];
        let mut k = 0;
        while k < order.len() {
            let u = order[k];
            k += 1;
            for &w in h.neighbors(u) {
                if parent[w] == usize::MAX {
                    parent[w] = u;
                    order.push(w);
                }
            }
        }
        for &c in &order[1..] {
            let mut below = vec![false; h.order()];
            below[c] = true;
            for &v in &order {
                let mut x = v;
                while x != comp[0] && x != c {
                    x = parent[x];
                }
                if x == c {
                    below[v] = true;
                }
            }
            let (a, b): (Vec<usize>, Vec<usize>) = comp.iter().partition(|&&v| below[v]);
            out.push(vec![a, b]);
        }
    }
    out
}

/// Lifts complete minors of the hub subgraph. The first model is an
/// optimal one grown to cover the hub; a branch set without an `ell`-link
/// is merged into the smallest other set, giving a model one order smaller.
/// When that ends below `K_3`, two-part splits along a spanning tree are
/// tried for a `K_2`.
fn hub_lift(host: &LabeledGraph<'_>, limits: &Limits) -> Result<Verdict> {
    let g = host.source;
    let hub = hub_subgraph(g, host.ell, limits.links)?;
    let simple = hub.underlying_simple();
    if simple.order() > limits.hadwiger_oracle || simple.order() == 0 {
        return Ok(Verdict::NotApplicable);
    }
    let to_g = |sets: &[Vec<usize>]| -> Vec<Vec<usize>> {
        sets.iter()
            .map(|s| s.iter().map(|&v| g.vertex_index(&hub.vertex_id(v).0).expect("hub vertex is in G")).collect())
            .collect()
    };
    let (eta, model) = exact_hadwiger(&simple, limits.hadwiger_oracle)?;
    let mut local = model.branch_sets.clone();
    cover(&simple, &mut local);
    let mut sets = to_g(&local);
    let mut found = None;
    while sets.len() >= 2 {
        let target = MinorWitness::complete_target(sets.len());
        match lift_minor(host, &sets, &target, limits.links) {
            Ok(w) => {
                found = Some(w);
                break;
            }
            Err(Error::BranchSetLacksLink(i)) => {
                let absorbed = sets.remove(i);
                let j = (0..sets.len()).min_by_key(|&j| sets[j].len()).expect("another set remains");
                sets[j].extend(absorbed);
                sets[j].sort_unstable();
            }
            Err(e) => return Err(e),
        }
    }
    if found.is_none() {
        for split in tree_splits(&simple) {
            match lift_minor(host, &to_g(&split), &MinorWitness::complete_target(2), limits.links) {
                Ok(w) => {
                    found = Some(w);
                    break;
                }
                Err(Error::BranchSetLacksLink(_)) => {}
                Err(e) => return Err(e),
            }
        }
    }
    let Some(w) = found else {
        return Ok(Verdict::Skip(format!("no hub model has a {}-link in every branch set", host.ell)));
    };
    let order = w.target.order();
    let mut o = checks::witness_at_least(&host.underlying_simple(), &w, order, None);
    o.computed["hub_hadwiger"] = json!(eta);
    Ok(Verdict::Checked(o))
}

/// Whether `ell > 2 log_{1.5}(delta - 2) + 3`, in integers where possible.
fn beyond_degree_threshold(ell: usize, delta: usize) -> bool {
    if delta < 3 || ell <= 3 {
        return false;
    }
    let x = (ell - 3) as u32;
    let base = (delta - 2) as i128;
    if x < 60 {
        3i128.pow(x) > (1i128 << x) * base * base
    } else {
        1.5f64.powi(x as i32) > (base * base) as f64
    }
}

fn exact_or_none(h: &SimpleGraph, cap: usize) -> Result<Option<(usize, Coloring)>> {
    match exact_chromatic(h, cap) {
        Ok(x) => Ok(Some(x)),
        Err(Error::OracleTooLarge { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Every selected claim for one instance at one `ell`.
pub fn verify_instance(instance: &Instance, ell: usize, claims: Option<&[String]>, limits: &Limits) -> Vec<Record> {
    let mut job = Job { instance, ell, claims, out: Vec::new() };
    let g = &instance.graph;
    let host = match link_graph(g, ell, limits.links) {
        Ok(h) => h,
        Err(e) => {
            job.run("Obs3.1", || Ok(Verdict::Skip(e.to_string())));
            return job.out;
        }
    };
    let h = host.underlying_simple();
    let lower = if ell >= 2 { link_graph(g, ell - 2, limits.links).ok() } else { None };
    let cap = limits.chromatic_oracle;

    job.run("Obs3.1", || {
        let next = count_links_by_walks(g, ell + 1);
        let regular = g.regular_degree().map(|r| (r, g.size()));
        Ok(Verdict::Checked(checks::edge_vertex_identity(&host, next as usize, regular)))
    });
    job.run("Obs3.2", || match instance.family {
        Family::Bipartite(n, m) if ell >= 1 && n >= 2 && m >= 2 => {
            Ok(Verdict::Checked(checks::bipartite_counts(&host, n, m)))
        }
        _ => Ok(Verdict::NotApplicable),
    });
    job.run("Obs3.3", || Ok(Verdict::Checked(checks::loopless(&host))));
    job.run("Obs3.4", || {
        if ell == 0 {
            return Ok(Verdict::NotApplicable);
        }
        Ok(Verdict::Checked(checks::multiplicity(&host, g.has_parallel_edges())))
    });
    let connected_with_links = g.is_connected() && host.order() > 0;
    job.run("Lem3.5", || {
        if !connected_with_links {
            return Ok(Verdict::NotApplicable);
        }
        Ok(Verdict::Checked(hub_segments(g, ell, limits.links)?))
    });
    job.run("Cor3.6", || {
        if !connected_with_links {
            return Ok(Verdict::NotApplicable);
        }
        Ok(Verdict::Checked(checks::same_middle_criterion(&host)))
    });
    job.run("Lem3.7", || {
        if !connected_with_links {
            return Ok(Verdict::NotApplicable);
        }
        hub_shunting(g, ell, limits.links)
    });
    job.run("Cor3.8", || {
        Ok(Verdict::Checked(checks::connectivity_agreement(link_graph_connected(g, ell, limits.links)?, &host)))
    });
    job.run("Lem4.1", || {
        let Some(lower) = &lower else { return Ok(Verdict::NotApplicable) };
        Ok(Verdict::Checked(checks::partition(&host, &natural_partition(&host)?, lower)))
    });
    job.run("Hom2", || {
        let Some(lower) = &lower else { return Ok(Verdict::NotApplicable) };
        Ok(Verdict::Checked(checks::middle_homomorphism(&host, lower)))
    });

    let needs_lift = job.wants_any(&["Lem4.2", "Lem4.3"]);
    if let (Some(lower), true) = (&lower, needs_lift) {
        let ls = lower.underlying_simple();
        let lower_exact = exact_or_none(&ls, cap).ok().flatten();
        job.run("Lem4.2", || {
            let input = lower_exact.as_ref().map(|(_, c)| c.clone()).unwrap_or_else(|| greedy_coloring(&ls));
            let lifted = lifted_coloring(&host, lower, &input)?.compressed();
            let foreign = max_foreign_colors(&h, &lifted);
            let reduced = reduce_coloring(&h, &lifted, 2)?;
            let mut o = checks::reduction(&h, &lifted, &reduced, 2);
            o.pass &= foreign <= 2;
            o.computed["max_foreign_colours"] = json!(foreign);
            Ok(Verdict::Checked(o))
        });
        job.run("Lem4.3", || {
            let Some((chi_lower, c)) = &lower_exact else {
                return Ok(Verdict::Skip(format!("{}-link graph exceeds the chromatic oracle", ell - 2)));
            };
            let lifted = lifted_coloring(&host, lower, c)?.compressed();
            let reduced = reduce_coloring(&h, &lifted, 2)?;
            let exact = exact_or_none(&h, cap)?.map(|(x, _)| x);
            let bound = (2 * chi_lower / 3 + 1) as i64;
            let mut o = checks::coloring_bound(&h, &reduced, bound, exact);
            o.computed["chi_two_below"] = json!(chi_lower);
            Ok(Verdict::Checked(o))
        });
    }

    let thm1 = ["Thm1.1", "Thm1.2", "Thm1.3", "Thm1.4", "Cor1.2", "Cor4.4"];
    if job.wants_any(&thm1) {
        let s = g.underlying_simple();
        let chi = exact_or_none(&s, cap).ok().flatten().map(|(x, _)| x);
        let chi_prime = match exact_edge_chromatic(g, cap) {
            Ok((x, _)) => Some(x),
            Err(_) => None,
        };
        let chi_two_below = lower
            .as_ref()
            .and_then(|l| exact_or_none(&l.underlying_simple(), cap).ok().flatten())
            .map(|(x, _)| x);
        let bounds = theorem1_bounds(ell, chi, chi_prime, g.max_degree(), chi_two_below);
        let exact = exact_or_none(&h, cap).ok().flatten().map(|(x, _)| x);
        let rc: Result<RecursiveColoring> = recursive_chromatic_bound(g, ell, limits);
        let with_rc = |bound: Option<i64>| -> Result<Verdict> {
            let Some(b) = bound else { return Ok(Verdict::NotApplicable) };
            let rc = rc.as_ref().map_err(Clone::clone)?;
            let mut o = checks::coloring_bound(&h, &rc.coloring, b, exact);
            o.computed["chain"] = json!(rc.chain);
            o.computed["base_exact"] = json!(rc.base_exact);
            Ok(Verdict::Checked(o))
        };
        job.run("Thm1.1", || with_rc(bounds.even));
        job.run("Thm1.2", || with_rc(bounds.odd));
        job.run("Thm1.3", || with_rc(bounds.max_degree));
        job.run("Thm1.4", || with_rc(bounds.two_below));
        job.run("Cor1.2", || match (chi, chi_prime) {
            (Some(c), Some(cp)) if three_colorable_by_threshold(ell, c, cp) => with_rc(Some(3)),
            _ => Ok(Verdict::NotApplicable),
        });
        job.run("Cor4.4", || {
            if beyond_degree_threshold(ell, g.max_degree()) {
                with_rc(Some(3))
            } else {
                Ok(Verdict::NotApplicable)
            }
        });
    }

    if (1..=3).contains(&ell) && host.size() > 0 {
        if job.wants_any(&["Lem5.1", "Lem5.2"]) {
            let cuts = cut_lemmas(&host);
            let (plain, cyclic) = match cuts {
                Ok(pair) => pair,
                Err(e) => (Some(Outcome::new(false, json!(null), json!(null)).with_detail(e.to_string())), None),
            };
            job.run("Lem5.1", || Ok(plain.map_or(Verdict::NotApplicable, Verdict::Checked)));
            job.run("Lem5.2", || Ok(cyclic.map_or(Verdict::NotApplicable, Verdict::Checked)));
        }
        job.run("Cor5.3", || hub_lift(&host, limits));
        job.run("Thm2", || {
            let s = g.underlying_simple();
            if s.order() > limits.hadwiger_oracle {
                return Ok(Verdict::Skip("G exceeds the Hadwiger oracle".into()));
            }
            let (eta_g, _) = exact_hadwiger(&s, limits.hadwiger_oracle)?;
            let required = eta_g.max(g.degeneracy());
            let hb = hadwiger_lower_bound_in(&host, limits)?;
            let exact = if h.order() <= limits.hadwiger_oracle {
                Some(exact_hadwiger(&h, limits.hadwiger_oracle)?.0)
            } else {
                None
            };
            let mut o = checks::witness_at_least(&h, &hb.witness, required, exact);
            o.computed["route"] = json!(hb.route);
            o.computed["routes"] = json!(hb.routes.iter().map(|(r, k)| (format!("{r:?}"), *k)).collect::<Vec<_>>());
            o.bounds["eta_g"] = json!(eta_g);
            o.bounds["degeneracy"] = json!(g.degeneracy());
            Ok(Verdict::Checked(o))
        });
    }

    if ell >= 1 {
        let cases = theorem3_cases(g, ell);
        let tags = cases.tags();
        if tags.iter().any(|t| claim_selected(claims, t)) {
            let evidence = || -> Result<Verdict> {
                if h.order() > cap {
                    return Ok(Verdict::Skip(format!("{}-link graph exceeds the chromatic oracle", ell)));
                }
                let (chi, _) = exact_chromatic(&h, cap)?;
                let (eta, how) = if h.order() <= limits.hadwiger_oracle || h.size() == 0 {
                    (exact_hadwiger(&h, limits.hadwiger_oracle.max(h.order()))?.0, "exact")
                } else {
                    (hadwiger_lower_bound_in(&host, limits)?.bound, "witness")
                };
                Ok(Verdict::Checked(Outcome::new(
                    eta >= chi,
                    json!({ "hadwiger": eta, "hadwiger_from": how }),
                    json!({ "chromatic": chi }),
                )))
            };
            let shared = evidence();
            for tag in tags {
                let v = match &shared {
                    Ok(Verdict::Checked(o)) => Ok(Verdict::Checked(o.clone())),
                    Ok(Verdict::Skip(r)) => Ok(Verdict::Skip(r.clone())),
                    Ok(Verdict::NotApplicable) => Ok(Verdict::NotApplicable),
                    Err(e) => Err(e.clone()),
                };
                job.run(tag, || v);
            }
        }
    }

    if ell >= 1 {
        job.run("Path2", || {
            let p = path_graph(g, ell, limits.links)?;
            let paths = count_paths_by_search(g, ell);
            let mut o = Outcome::new(
                p.order() as u128 == paths,
                json!({ "path_graph_order": p.order() }),
                json!({ "paths": paths.to_string() }),
            );
            if g.girth().is_none_or(|girth| girth > ell.max(2)) {
                let same = checks::same_labeled_graph(&p, &host.simplify());
                o.pass &= same.pass;
                o.computed["equals_link_graph"] = json!(same.pass);
            }
            Ok(Verdict::Checked(o))
        });
    }
    if (1..=3).contains(&ell) {
        job.run("Iso2", || {
            let direct = arc_digraph(g, ell, limits.links)?;
            let iterated = iterated_line_digraph(g, ell, limits.links)?;
            Ok(Verdict::Checked(checks::digraph_iso(&direct, &iterated)))
        });
    }
    job.out
}

/// Runs every selected claim on every instance of the corpus, in parallel.
pub fn verify_suite(corpus: &Corpus, claims: Option<&[String]>, limits: &Limits) -> Report {
    let jobs: Vec<(&Instance, usize)> =
        corpus.instances.iter().flat_map(|i| corpus.ells.clone().map(move |l| (i, l))).collect();
    let records: Vec<Record> = jobs
        .par_iter()
        .flat_map_iter(|&(instance, ell)| verify_instance(instance, ell, claims, limits))
        .collect();
    Report::new(corpus.seed, records)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::link_graph;
    use crate::multigraph::*;

    #[test]
    fn walk_count_matches_enumeration() {
        for g in [petersen(), fig2a(), dipole(3).unwrap(), random_multigraph(3, 6, 9).unwrap()] {
            for k in 0..=4 {
                let n = link_graph(&g, k, 1_000_000).unwrap().order() as u128;
                assert_eq!(count_links_by_walks(&g, k), n);
            }
        }
    }

    #[test]
    fn path_count() {
        assert_eq!(count_paths_by_search(&fig2a(), 2), 4);
        assert_eq!(count_paths_by_search(&complete(4).unwrap(), 3), 12);
        assert_eq!(count_paths_by_search(&cycle(5).unwrap(), 4), 5);
    }

    #[test]
    fn degree_threshold() {
        assert!(!beyond_degree_threshold(3, 3));
        assert!(beyond_degree_threshold(4, 3));
        // 1.5^x > 4 first at x = 4
        assert!(!beyond_degree_threshold(6, 4));
        assert!(beyond_degree_threshold(7, 4));
    }
}
