use std::collections::{BTreeMap, VecDeque};

use super::{verify_minor, LinkMinor, MinorWitness};
use crate::construction::LabeledGraph;
use crate::error::{Error, Result};
use crate::links::{enumerate_arcs, middle_units, Arc, Unit};
use crate::multigraph::{complete_bipartite, Multigraph, SimpleGraph};

/// Zelinka's model of `K_d` on two sides `a`, `b` of length `d - 1`:
/// `{a_1}`, `{b_1}` and `{a_i, b_i}` for `i >= 2`.
pub fn zelinka_sets<T: Clone>(a: &[T], b: &[T]) -> Vec<Vec<T>> {
    let mut sets = vec![vec![a[0].clone()], vec![b[0].clone()]];
    sets.extend((1..a.len()).map(|i| vec![a[i].clone(), b[i].clone()]));
    sets
}

/// `K_d` inside `K_{d-1,d-1}`, returned with its host.
pub fn zelinka_minor(d: usize) -> Result<(SimpleGraph, MinorWitness)> {
    if d < 2 {
        return Err(Error::InvalidParameter("Zelinka's minor needs d >= 2".into()));
    }
    let host = complete_bipartite(d - 1, d - 1)?.underlying_simple();
    let a: Vec<usize> = (0..d - 1).collect();
    let b: Vec<usize> = (d - 1..2 * d - 2).collect();
    let w = MinorWitness::from_adjacent_sets(&host, zelinka_sets(&a, &b))
        .ok_or_else(|| Error::ConstructionFailed("Zelinka sets are not pairwise adjacent".into()))?;
    verify_minor(&host, &w).map_err(|e| Error::ConstructionFailed(e.to_string()))?;
    Ok((host, w))
}

fn realize_checked(host: &LabeledGraph<'_>, m: &LinkMinor) -> Option<MinorWitness> {
    m.realize_verified(host).ok()
}

/// A `K_d` minor with `d` the degeneracy of `G`, from the edge part of an
/// `(ell-1)`-link inside a subgraph of minimum degree `d` (a clique on the
/// edges at one vertex when `ell = 1`).
pub fn degeneracy_minor(host: &LabeledGraph<'_>, limit: usize) -> Result<Option<MinorWitness>> {
    let g = host.source;
    let ell = host.ell;
    let (d, core) = g.degeneracy_core();
    if ell == 0 || d < 2 {
        return Ok(None);
    }
    let mut in_core = vec![false; g.order()];
    for &v in &core {
        in_core[v] = true;
    }
    let core_edges = |v: usize| -> Vec<usize> {
        g.incident(v).iter().copied().filter(|&e| in_core[g.other_end(e, v)]).collect()
    };
    if ell == 1 {
        for &v in &core {
            let es = core_edges(v);
            if es.len() < d {
                continue;
            }
            let links = es[..d]
                .iter()
                .map(|&e| Ok(Arc::from_units(g, &[g.other_end(e, v), e, v])?.to_link()))
                .collect::<Result<Vec<_>>>()?;
            let sets: Vec<Vec<usize>> = links
                .iter()
                .map(|l| host.vertex_index(l).map(|i| vec![i]))
                .collect::<Option<_>>()
                .ok_or(Error::NotALink("edge link missing".into()))?;
            let h = host.underlying_simple();
            if let Some(w) = MinorWitness::from_adjacent_sets(&h, sets) {
                if verify_minor(&h, &w).is_ok() {
                    return Ok(Some(w));
                }
            }
        }
        return Ok(None);
    }
    for p in enumerate_arcs(g, ell - 1, limit)? {
        if !p.vertices().all(|v| in_core[v]) {
            continue;
        }
        let (u, w) = (p.tail(), p.head());
        let front: Vec<Arc> = core_edges(u)
            .into_iter()
            .filter(|&e| Some(e) != p.tail_edge())
            .filter_map(|e| Arc::from_units(g, &[g.other_end(e, u), e, u]).ok()?.conjunction(&p).ok())
            .take(d - 1)
            .collect();
        let back: Vec<Arc> = core_edges(w)
            .into_iter()
            .filter(|&e| Some(e) != p.head_edge())
            .filter_map(|e| p.extend(g, e).ok())
            .take(d - 1)
            .collect();
        if front.len() < d - 1 || back.len() < d - 1 {
            continue;
        }
        let a: Vec<_> = front.iter().map(Arc::to_link).collect();
        let b: Vec<_> = back.iter().map(Arc::to_link).collect();
        let branch_sets = zelinka_sets(&a, &b);
        let mut connectors = BTreeMap::new();
        let side = |k: usize| -> (Vec<_>, Vec<_>) {
            match k {
                0 => (vec![a[0].clone()], vec![]),
                1 => (vec![], vec![b[0].clone()]),
                k => (vec![a[k - 1].clone()], vec![b[k - 1].clone()]),
            }
        };
        for i in 0..d {
            for j in i + 1..d {
                let (ai, bi) = side(i);
                let (aj, bj) = side(j);
                let pair = if let (Some(x), Some(y)) = (ai.first(), bj.first()) {
                    vec![x.clone(), y.clone()]
                } else {
                    vec![bi[0].clone(), aj[0].clone()]
                };
                connectors.insert((i, j), pair);
            }
        }
        let m = LinkMinor { target: MinorWitness::complete_target(d), branch_sets, connectors };
        if let Some(w) = realize_checked(host, &m) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

fn middle_in(u: Unit, g: &Multigraph, set: &[bool], hub_edge: &[bool]) -> bool {
    match u {
        Unit::Vertex(v) => set[v],
        Unit::Edge(e) => {
            let (a, b) = g.endpoints(e);
            hub_edge[e] && set[a] && set[b]
        }
    }
}

/// Lifts a minor of the hub subgraph, given by branch sets of `G`-vertices
/// each spanning at least one `ell`-link, to a minor of the `ell`-link graph.
pub fn lift_minor(
    host: &LabeledGraph<'_>,
    sets: &[Vec<usize>],
    target: &SimpleGraph,
    limit: usize,
) -> Result<MinorWitness> {
    let g = host.source;
    let ell = host.ell;
    if sets.len() != target.order() {
        return Err(Error::PreconditionViolated("one branch set per target vertex".into()));
    }
    let units = middle_units(g, ell, limit)?;
    let mut hub_vertex = vec![false; g.order()];
    let mut hub_edge = vec![false; g.size()];
    for u in &units {
        match *u {
            Unit::Vertex(v) => hub_vertex[v] = true,
            Unit::Edge(e) => {
                hub_edge[e] = true;
                let (a, b) = g.endpoints(e);
                hub_vertex[a] = true;
                hub_vertex[b] = true;
            }
        }
    }
    if ell % 2 == 0 {
        for e in 0..g.size() {
            let (a, b) = g.endpoints(e);
            hub_edge[e] = hub_vertex[a] && hub_vertex[b];
        }
    }
    let h = host.underlying_simple();
    let mut owner: Vec<Option<usize>> = vec![None; g.order()];
    let mut branch_sets = Vec::with_capacity(sets.len());
    for (i, set) in sets.iter().enumerate() {
        let mut mask = vec![false; g.order()];
        for &v in set {
            if v >= g.order() || !hub_vertex[v] || owner[v].is_some() {
                return Err(Error::PreconditionViolated(format!("branch set {i} is not a hub vertex set")));
            }
            mask[v] = true;
            owner[v] = Some(i);
        }
        let candidates: Vec<usize> = (0..host.order())
            .filter(|&k| middle_in(host.vertices[k].middle_unit(), g, &mask, &hub_edge))
            .collect();
        let inside = |k: usize| {
            let l = &host.vertices[k];
            l.arc().vertices().all(|v| mask[v]) && l.arc().edges().all(|e| hub_edge[e])
        };
        let mut chosen = Vec::new();
        for comp in h.induced(&candidates).components() {
            let members: Vec<usize> = comp.iter().map(|&c| candidates[c]).collect();
            if members.iter().any(|&k| inside(k)) {
                chosen.extend(members);
            }
        }
        if chosen.is_empty() {
            return Err(Error::BranchSetLacksLink(i));
        }
        chosen.sort_unstable();
        branch_sets.push(chosen);
    }
    let mut in_branch: Vec<Option<usize>> = vec![None; host.order()];
    for (i, s) in branch_sets.iter().enumerate() {
        for &k in s {
            in_branch[k] = Some(i);
        }
    }
    let mut connectors = BTreeMap::new();
    for (i, j) in target.edges() {
        let (i, j) = (i.min(j), i.max(j));
        let bridge_edges: Vec<usize> = (0..g.size())
            .filter(|&e| {
                let (a, b) = g.endpoints(e);
                hub_edge[e]
                    && ((owner[a] == Some(i) && owner[b] == Some(j)) || (owner[a] == Some(j) && owner[b] == Some(i)))
            })
            .collect();
        let path = bridge_edges
            .iter()
            .find_map(|&e| {
                let through = |k: usize| in_branch[k].is_none() && host.vertices[k].middle_unit() == Unit::Edge(e);
                bfs_between(&h, &branch_sets[i], &branch_sets[j], through)
            })
            .ok_or_else(|| Error::PreconditionViolated(format!("no hub edge joins branch sets {i} and {j}")))?;
        connectors.insert((i, j), path);
    }
    let w = MinorWitness { target: target.clone(), branch_sets, connectors };
    verify_minor(&h, &w).map_err(|d| Error::ConstructionFailed(format!("lifted minor rejected: {d}")))?;
    Ok(w)
}

/// Shortest path from `from` to `to` whose interior satisfies `through`.
fn bfs_between(h: &SimpleGraph, from: &[usize], to: &[usize], through: impl Fn(usize) -> bool) -> Option<Vec<usize>> {
    let mut target = vec![false; h.order()];
    for &v in to {
        target[v] = true;
    }
    let mut parent: Vec<Option<usize>> = vec![None; h.order()];
    let mut seen = vec![false; h.order()];
    let mut queue = VecDeque::new();
    for &v in from {
        seen[v] = true;
        queue.push_back(v);
    }
    while let Some(u) = queue.pop_front() {
        for &w in h.neighbors(u) {
            if seen[w] {
                continue;
            }
            if target[w] {
                let mut path = vec![w, u];
                let mut cur = u;
                while let Some(p) = parent[cur] {
                    path.push(p);
                    cur = p;
                }
                path.reverse();
                return Some(path);
            }
            if through(w) {
                seen[w] = true;
                parent[w] = Some(u);
                queue.push_back(w);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::link_graph;
    use crate::multigraph::*;

    const LIMIT: usize = 1_000_000;

    #[test]
    fn zelinka_examples() {
        for d in [2, 3, 4, 6] {
            let (host, w) = zelinka_minor(d).unwrap();
            assert_eq!(w.clique_order(), Some(d));
            assert_eq!(verify_minor(&host, &w), Ok(()));
        }
        assert!(zelinka_minor(1).is_err());
    }

    #[test]
    fn degeneracy_route() {
        let d3 = dipole(3).unwrap();
        let h = link_graph(&d3, 1, LIMIT).unwrap();
        assert_eq!(degeneracy_minor(&h, LIMIT).unwrap().unwrap().clique_order(), Some(3));
        for ell in 2..=4 {
            let g = complete(5).unwrap();
            let h = link_graph(&g, ell, LIMIT).unwrap();
            let w = degeneracy_minor(&h, LIMIT).unwrap().unwrap();
            assert_eq!(w.clique_order(), Some(4));
        }
    }

    #[test]
    fn identity_lift_at_level_zero() {
        let g = complete(4).unwrap();
        let h = link_graph(&g, 0, LIMIT).unwrap();
        let sets: Vec<Vec<usize>> = (0..4).map(|v| vec![v]).collect();
        let w = lift_minor(&h, &sets, &MinorWitness::complete_target(4), LIMIT).unwrap();
        assert_eq!(w.branch_sets.len(), 4);
    }

    #[test]
    fn singleton_sets_lack_links() {
        let g = complete(4).unwrap();
        let h = link_graph(&g, 2, LIMIT).unwrap();
        let sets: Vec<Vec<usize>> = (0..4).map(|v| vec![v]).collect();
        assert_eq!(
            lift_minor(&h, &sets, &MinorWitness::complete_target(4), LIMIT),
            Err(Error::BranchSetLacksLink(0))
        );
    }

    /// Each vertex of K_4 replaced by a triangle.
    fn truncated_tetrahedron() -> Multigraph {
        let mut text = String::new();
        for i in 0..4 {
            let others: Vec<usize> = (0..4).filter(|&j| j != i).collect();
            for (a, b) in [(0, 1), (1, 2), (0, 2)] {
                text += &format!("t{i}{} t{i}{}\n", others[a], others[b]);
            }
            for &j in &others {
                if i < j {
                    text += &format!("t{i}{j} t{j}{i}\n");
                }
            }
        }
        parse_edge_list(&text).unwrap()
    }

    #[test]
    fn lifts_k4_through_the_hub() {
        let g = truncated_tetrahedron();
        let sets: Vec<Vec<usize>> = (0..4)
            .map(|i| {
                (0..4).filter(|&j| j != i).map(|j| g.vertex_index(&format!("t{i}{j}")).unwrap()).collect()
            })
            .collect();
        for ell in 0..=3 {
            let h = link_graph(&g, ell, LIMIT).unwrap();
            let w = lift_minor(&h, &sets, &MinorWitness::complete_target(4), LIMIT).unwrap();
            assert_eq!(w.clique_order(), Some(4));
        }
    }
}
