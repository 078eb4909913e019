use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::Result;
use crate::links::{enumerate_links, hub_subgraph, one_step_shunts, Link, Unit};
use crate::multigraph::Multigraph;

/// The `ell`-links all of whose units lie in the hub subgraph.
pub fn hub_links(g: &Multigraph, ell: usize, limit: usize) -> Result<Vec<Link>> {
    let hub = hub_subgraph(g, ell, limit)?;
    let vmask: Vec<bool> =
        (0..g.order()).map(|v| hub.vertex_index(&g.vertex_id(v).0).is_some()).collect();
    let emask: Vec<bool> =
        (0..g.size()).map(|e| hub.edge_index(&g.edge_id(e).0).is_some()).collect();
    Ok(enumerate_links(g, ell, limit)?
        .into_iter()
        .filter(|l| l.arc().vertices().all(|v| vmask[v]) && l.arc().edges().all(|e| emask[e]))
        .collect())
}

/// Everything reachable from `sources` by shunting.
fn reachable(g: &Multigraph, sources: &[Link]) -> BTreeSet<Link> {
    let mut seen: BTreeSet<Link> = sources.iter().cloned().collect();
    let mut queue: VecDeque<Link> = sources.iter().cloned().collect();
    while let Some(cur) = queue.pop_front() {
        for (_, r) in one_step_shunts(g, &cur) {
            if seen.insert(r.clone()) {
                queue.push_back(r);
            }
        }
    }
    seen
}

/// Connectivity of the `ell`-link graph decided through the hub subgraph.
///
/// The hub must be connected. When it carries at least one `ell`-link,
/// every link must shunt into the hub's links; otherwise links sharing a
/// middle unit must shunt to one another.
pub fn link_graph_connected(g: &Multigraph, ell: usize, limit: usize) -> Result<bool> {
    let links = enumerate_links(g, ell, limit)?;
    if links.is_empty() {
        return Ok(true);
    }
    if !hub_subgraph(g, ell, limit)?.is_connected() {
        return Ok(false);
    }
    let inner = hub_links(g, ell, limit)?;
    if !inner.is_empty() {
        let reached = reachable(g, &inner);
        return Ok(links.iter().all(|l| reached.contains(l)));
    }
    let mut by_middle: BTreeMap<Unit, Vec<&Link>> = BTreeMap::new();
    for l in &links {
        by_middle.entry(l.middle_unit()).or_default().push(l);
    }
    Ok(by_middle.values().all(|group| {
        let reached = reachable(g, &[group[0].clone()]);
        group.iter().all(|l| reached.contains(*l))
    }))
}
