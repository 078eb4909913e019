//! Minor models in link graphs: witnesses and their structural check, an
//! exact Hadwiger oracle, and explicit constructions of complete minors.

mod bound;
mod cut;
mod lift;
mod oracle;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::construction::LabeledGraph;
use crate::error::{Error, Result};
use crate::links::Link;
use crate::multigraph::{Multigraph, SimpleGraph};

pub use bound::{hadwiger_lower_bound, theorem3_cases, HadwigerBound, Route, Theorem3Cases};
pub(crate) use bound::hadwiger_lower_bound_in;
pub use cut::{kt1_minor_with_cycle, kt_minor_from_cut, CutInstance};
pub use lift::{degeneracy_minor, lift_minor, zelinka_minor};
pub use oracle::{contraction_heuristic, exact_hadwiger};

/// Branch sets and connecting paths of a minor model inside a host graph.
/// Connector `(i, j)` with `i < j` runs from branch set `i` to branch set `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorWitness {
    pub target: SimpleGraph,
    pub branch_sets: Vec<Vec<usize>>,
    pub connectors: BTreeMap<(usize, usize), Vec<usize>>,
}

/// The first defect found by [`verify_minor`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum MinorDefect {
    BranchCount { expected: usize, got: usize },
    IndexOutOfRange(usize),
    EmptyBranchSet(usize),
    DisjointnessViolated { sets: (usize, usize), vertex: usize },
    Disconnected(usize),
    MissingConnector(usize, usize),
    ConnectorNotAPath(usize, usize),
    ConnectorEnds(usize, usize),
    ConnectorEntersBranchSet { connector: (usize, usize), vertex: usize },
    ConnectorsShareVertex { first: (usize, usize), second: (usize, usize), vertex: usize },
}

impl fmt::Display for MinorDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl MinorWitness {
    pub fn complete_target(t: usize) -> SimpleGraph {
        SimpleGraph::from_edges(t, (0..t).flat_map(|i| (i + 1..t).map(move |j| (i, j))))
    }

    /// A witness for a complete minor where every pair of branch sets is
    /// joined by a host edge.
    pub fn from_adjacent_sets(h: &SimpleGraph, branch_sets: Vec<Vec<usize>>) -> Option<MinorWitness> {
        let t = branch_sets.len();
        let mut connectors = BTreeMap::new();
        for i in 0..t {
            for j in i + 1..t {
                let pair = branch_sets[i]
                    .iter()
                    .find_map(|&a| branch_sets[j].iter().find(|&&b| h.has_edge(a, b)).map(|&b| (a, b)))?;
                connectors.insert((i, j), vec![pair.0, pair.1]);
            }
        }
        Some(MinorWitness { target: Self::complete_target(t), branch_sets, connectors })
    }

    /// The `t` of the complete target, when the target is complete.
    pub fn clique_order(&self) -> Option<usize> {
        self.target.is_complete().then_some(self.target.order())
    }

    pub fn target_name(&self) -> String {
        match self.clique_order() {
            Some(t) => format!("K_{t}"),
            None => format!("M({} vertices, {} edges)", self.target.order(), self.target.size()),
        }
    }
}

/// Checks every structural requirement of a minor model, returning the
/// first defect.
pub fn verify_minor(h: &SimpleGraph, w: &MinorWitness) -> std::result::Result<(), MinorDefect> {
    let t = w.target.order();
    if w.branch_sets.len() != t {
        return Err(MinorDefect::BranchCount { expected: t, got: w.branch_sets.len() });
    }
    let n = h.order();
    let mut owner: Vec<Option<usize>> = vec![None; n];
    for (i, set) in w.branch_sets.iter().enumerate() {
        if set.is_empty() {
            return Err(MinorDefect::EmptyBranchSet(i));
        }
        for &v in set {
            if v >= n {
                return Err(MinorDefect::IndexOutOfRange(v));
            }
            if let Some(j) = owner[v] {
                return Err(MinorDefect::DisjointnessViolated { sets: (j, i), vertex: v });
            }
            owner[v] = Some(i);
        }
        if !h.induced(set).is_connected() {
            return Err(MinorDefect::Disconnected(i));
        }
    }
    let mut interior_owner: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for (i, j) in w.target.edges() {
        let key = (i.min(j), i.max(j));
        let path = w.connectors.get(&key).ok_or(MinorDefect::MissingConnector(key.0, key.1))?;
        if path.len() < 2 || path.iter().any(|&v| v >= n) {
            return Err(MinorDefect::ConnectorNotAPath(key.0, key.1));
        }
        if path.windows(2).any(|p| !h.has_edge(p[0], p[1]))
            || path.iter().collect::<BTreeSet<_>>().len() != path.len()
        {
            return Err(MinorDefect::ConnectorNotAPath(key.0, key.1));
        }
        if owner[path[0]] != Some(key.0) || owner[*path.last().unwrap()] != Some(key.1) {
            return Err(MinorDefect::ConnectorEnds(key.0, key.1));
        }
        for &v in &path[1..path.len() - 1] {
            if owner[v].is_some() {
                return Err(MinorDefect::ConnectorEntersBranchSet { connector: key, vertex: v });
            }
            if let Some(prev) = interior_owner.insert(v, key) {
                return Err(MinorDefect::ConnectorsShareVertex { first: prev, second: key, vertex: v });
            }
        }
    }
    Ok(())
}

/// A complete-minor model described by links of a multigraph, before it is
/// placed in a concrete link graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkMinor {
    pub target: SimpleGraph,
    pub branch_sets: Vec<Vec<Link>>,
    pub connectors: BTreeMap<(usize, usize), Vec<Link>>,
}

impl LinkMinor {
    /// Index form inside `host`, which must be a link graph of the graph the
    /// links belong to.
    pub fn realize(&self, host: &LabeledGraph<'_>) -> Result<MinorWitness> {
        let index = |l: &Link| {
            host.vertex_index(l).ok_or_else(|| Error::NotALink(l.display(host.source).to_string()))
        };
        let mut branch_sets = Vec::with_capacity(self.branch_sets.len());
        for set in &self.branch_sets {
            let mut idx = set.iter().map(index).collect::<Result<Vec<_>>>()?;
            idx.sort_unstable();
            idx.dedup();
            branch_sets.push(idx);
        }
        let mut connectors = BTreeMap::new();
        for (&k, path) in &self.connectors {
            connectors.insert(k, path.iter().map(index).collect::<Result<Vec<_>>>()?);
        }
        Ok(MinorWitness { target: self.target.clone(), branch_sets, connectors })
    }

    /// The same links rewritten by name in another multigraph that contains
    /// all their units.
    pub fn transport(&self, from: &Multigraph, to: &Multigraph) -> Result<LinkMinor> {
        let move_link = |l: &Link| -> Result<Link> {
            let units = l.units();
            let names: Vec<&str> = units
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
        };
        Ok(LinkMinor {
            target: self.target.clone(),
            branch_sets: self
                .branch_sets
                .iter()
                .map(|s| s.iter().map(move_link).collect())
                .collect::<Result<_>>()?,
            connectors: self
                .connectors
                .iter()
                .map(|(&k, p)| Ok((k, p.iter().map(move_link).collect::<Result<Vec<_>>>()?)))
                .collect::<Result<_>>()?,
        })
    }

    /// Realises in `host` and verifies, turning any defect into an error.
    pub fn realize_verified(&self, host: &LabeledGraph<'_>) -> Result<MinorWitness> {
        let w = self.realize(host)?;
        verify_minor(&host.underlying_simple(), &w)
            .map_err(|d| Error::ConstructionFailed(format!("minor model rejected: {d}")))?;
        Ok(w)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k2_host() -> SimpleGraph {
        SimpleGraph::from_edges(2, [(0, 1)])
    }

    #[test]
    fn trivial_witnesses() {
        let w = MinorWitness::from_adjacent_sets(&k2_host(), vec![vec![0], vec![1]]).unwrap();
        assert_eq!(verify_minor(&k2_host(), &w), Ok(()));
        let mut bad = w.clone();
        bad.branch_sets[1] = vec![0];
        assert!(matches!(verify_minor(&k2_host(), &bad), Err(MinorDefect::DisjointnessViolated { .. })));
    }

    #[test]
    fn connectors_are_checked() {
        // path 0-1-2-3: K_2 between {0} and {3} through 1, 2
        let h = SimpleGraph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        let mut w = MinorWitness {
            target: MinorWitness::complete_target(2),
            branch_sets: vec![vec![0], vec![3]],
            connectors: BTreeMap::from([((0, 1), vec![0, 1, 2, 3])]),
        };
        assert_eq!(verify_minor(&h, &w), Ok(()));
        w.connectors.insert((0, 1), vec![0, 2, 3]);
        assert_eq!(verify_minor(&h, &w), Err(MinorDefect::ConnectorNotAPath(0, 1)));
        w.connectors.clear();
        assert_eq!(verify_minor(&h, &w), Err(MinorDefect::MissingConnector(0, 1)));
        w.branch_sets = vec![vec![0, 2], vec![3]];
        assert_eq!(verify_minor(&h, &w), Err(MinorDefect::Disconnected(0)));
    }

    #[test]
    fn shared_interiors_are_rejected() {
        // star with centre 3 joining three singletons
        let h = SimpleGraph::from_edges(4, [(0, 3), (1, 3), (2, 3)]);
        let w = MinorWitness {
            target: MinorWitness::complete_target(3),
            branch_sets: vec![vec![0], vec![1], vec![2]],
            connectors: BTreeMap::from([
                ((0, 1), vec![0, 3, 1]),
                ((0, 2), vec![0, 3, 2]),
                ((1, 2), vec![1, 3, 2]),
            ]),
        };
        assert!(matches!(verify_minor(&h, &w), Err(MinorDefect::ConnectorsShareVertex { .. })));
    }
}
