use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::links::{enumerate_arcs, Arc};
use crate::multigraph::{Multigraph, SimpleGraph};

/// A digraph whose vertices are `ell`-arcs and whose arcs are labelled by
/// `(ell+1)`-arcs, running from the label's first window to its last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledDigraph {
    pub ell: usize,
    pub vertices: Vec<Arc>,
    pub arcs: Vec<(usize, usize, Arc)>,
}

impl LabeledDigraph {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn size(&self) -> usize {
        self.arcs.len()
    }

    pub fn underlying_simple(&self) -> SimpleGraph {
        SimpleGraph::from_edges(self.order(), self.arcs.iter().map(|&(t, h, _)| (t, h)))
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.order()];
        for &(t, _, _) in &self.arcs {
            d[t] += 1;
        }
        d
    }

    /// Every label's windows equal its tail and head, labels are distinct,
    /// and there are no loops.
    pub fn check_invariants(&self) -> bool {
        let labels: BTreeSet<&Arc> = self.arcs.iter().map(|(_, _, a)| a).collect();
        labels.len() == self.arcs.len()
            && self.arcs.iter().all(|(t, h, a)| {
                let l = a.len();
                t != h
                    && a.segment(0, l - 1).ok().as_ref() == Some(&self.vertices[*t])
                    && a.segment(1, l).ok().as_ref() == Some(&self.vertices[*h])
            })
    }
}

/// The `ell`-arc digraph, built directly from arc enumeration.
pub fn arc_digraph(g: &Multigraph, ell: usize, limit: usize) -> Result<LabeledDigraph> {
    let vertices = enumerate_arcs(g, ell, limit)?;
    let labels = enumerate_arcs(g, ell + 1, limit)?;
    let mut arcs = Vec::with_capacity(labels.len());
    for q in labels {
        let l = q.len();
        let t = vertices.binary_search(&q.segment(0, l - 1)?).expect("window is an arc");
        let h = vertices.binary_search(&q.segment(1, l)?).expect("window is an arc");
        arcs.push((t, h, q));
    }
    Ok(LabeledDigraph { ell, vertices, arcs })
}

/// Plain index digraph used for the iteration below.
struct Level {
    /// Flattened arc carried by each vertex.
    vertices: Vec<Arc>,
    arcs: Vec<(usize, usize)>,
}

fn line_digraph(g: &Multigraph, d: &Level, limit: usize) -> Result<Level> {
    let mut out_arcs: Vec<Vec<usize>> = vec![Vec::new(); d.vertices.len()];
    for (k, &(t, _)) in d.arcs.iter().enumerate() {
        out_arcs[t].push(k);
    }
    let vertices: Vec<Arc> = d
        .arcs
        .iter()
        .map(|&(t, h, ..)| {
            let tail = &d.vertices[t];
            let head = &d.vertices[h];
            let last = head.edge_at(head.len());
            tail.extend(g, last).expect("consecutive arcs share a vertex")
        })
        .collect();
    let mut arcs = Vec::new();
    for (a, &(_, h)) in d.arcs.iter().enumerate() {
        for &b in &out_arcs[h] {
            if a != b {
                arcs.push((a, b));
                if arcs.len() > limit {
                    return Err(Error::LimitExceeded { count: arcs.len(), limit });
                }
            }
        }
    }
    Ok(Level { vertices, arcs })
}

/// The `ell`-fold line digraph of the 1-arc digraph, with each vertex
/// flattened to the arc it stands for.
pub fn iterated_line_digraph(g: &Multigraph, ell: usize, limit: usize) -> Result<LabeledDigraph> {
    if ell == 0 {
        return Err(Error::InvalidParameter("iterated line digraph needs ell >= 1".into()));
    }
    let base = arc_digraph(g, 1, limit)?;
    let mut level = Level {
        vertices: base.vertices,
        arcs: base.arcs.iter().map(|&(t, h, _)| (t, h)).collect(),
    };
    for _ in 1..ell {
        level = line_digraph(g, &level, limit)?;
    }
    let arcs = level
        .arcs
        .iter()
        .map(|&(t, h)| {
            let head = &level.vertices[h];
            let label = level.vertices[t]
                .extend(g, head.edge_at(head.len()))
                .expect("consecutive arcs share a vertex");
            (t, h, label)
        })
        .collect();
    Ok(LabeledDigraph { ell, vertices: level.vertices, arcs })
}

/// Sends each vertex of the iterated line digraph to the `ell`-arc it
/// flattens to and checks this is a label-preserving isomorphism onto the
/// `ell`-arc digraph.
pub fn digraph_natural_iso_check(g: &Multigraph, ell: usize, limit: usize) -> Result<bool> {
    let direct = arc_digraph(g, ell, limit)?;
    let iterated = iterated_line_digraph(g, ell, limit)?;
    Ok(natural_iso(&direct, &iterated))
}

/// Label-preserving check that `iterated` maps onto `direct` by the arcs
/// its vertices flatten to.
pub fn natural_iso(direct: &LabeledDigraph, iterated: &LabeledDigraph) -> bool {
    if direct.order() != iterated.order() || direct.size() != iterated.size() {
        return false;
    }
    let mut map = Vec::with_capacity(iterated.order());
    for v in &iterated.vertices {
        match direct.vertices.binary_search(v) {
            Ok(i) => map.push(i),
            Err(_) => return false,
        }
    }
    if map.iter().collect::<BTreeSet<_>>().len() != map.len() {
        return false;
    }
    let want: BTreeSet<(usize, usize, &Arc)> =
        direct.arcs.iter().map(|(t, h, a)| (*t, *h, a)).collect();
    let got: BTreeSet<(usize, usize, &Arc)> =
        iterated.arcs.iter().map(|(t, h, a)| (map[*t], map[*h], a)).collect();
    want == got && got.len() == iterated.size()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::*;

    const LIMIT: usize = 1_000_000;

    #[test]
    fn dipole_arc_digraph() {
        let d = arc_digraph(&dipole(3).unwrap(), 1, LIMIT).unwrap();
        assert_eq!(d.order(), 6);
        assert_eq!(d.size(), 12);
        assert!(d.out_degrees().iter().all(|&x| x == 2));
        assert!(d.check_invariants());
    }

    #[test]
    fn cycle_digraph_is_two_directed_cycles() {
        for n in 3..=6 {
            for ell in 1..=3 {
                let d = arc_digraph(&cycle(n).unwrap(), ell, LIMIT).unwrap();
                assert_eq!((d.order(), d.size()), (2 * n, 2 * n));
                assert_eq!(d.underlying_simple().components().len(), 2);
                assert!(d.out_degrees().iter().all(|&x| x == 1));
            }
        }
    }

    #[test]
    fn iteration_matches_direct_construction() {
        for (g, ell) in [(dipole(3).unwrap(), 2), (petersen(), 2), (cycle(3).unwrap(), 1), (fig2a(), 3)] {
            assert!(digraph_natural_iso_check(&g, ell, LIMIT).unwrap());
        }
        let g = complete(4).unwrap();
        assert_eq!(
            iterated_line_digraph(&g, 1, LIMIT).unwrap(),
            arc_digraph(&g, 1, LIMIT).unwrap()
        );
    }

    #[test]
    fn corrupted_digraph_is_rejected() {
        let g = dipole(3).unwrap();
        let direct = arc_digraph(&g, 2, LIMIT).unwrap();
        let mut bad = iterated_line_digraph(&g, 2, LIMIT).unwrap();
        let (t, h, _) = bad.arcs[0].clone();
        bad.arcs[0].0 = h;
        bad.arcs[0].1 = t;
        assert!(!natural_iso(&direct, &bad));
    }
}
