use std::collections::BTreeMap;

use super::{LinkMinor, MinorWitness};
use crate::error::{Error, Result};
use crate::links::{Arc, Link};
use crate::multigraph::Multigraph;

/// A vertex set `X` of `G`, considered inside the subgraph induced by
/// `within`. `Y` is the rest of `within`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutInstance {
    pub x: Vec<usize>,
    pub within: Vec<bool>,
}

impl CutInstance {
    pub fn new(g: &Multigraph, x: Vec<usize>) -> Self {
        CutInstance { x, within: vec![true; g.order()] }
    }

    pub fn x_mask(&self) -> Vec<bool> {
        let mut m = vec![false; self.within.len()];
        for &v in &self.x {
            m[v] = true;
        }
        m
    }

    pub fn y_mask(&self) -> Vec<bool> {
        let x = self.x_mask();
        self.within.iter().zip(&x).map(|(&w, &x)| w && !x).collect()
    }

    /// Arcs `(y, e, x)` from `Y` into `X`, by edge index.
    pub fn cut_arcs(&self, g: &Multigraph) -> Vec<(usize, usize, usize)> {
        let xm = self.x_mask();
        let ym = self.y_mask();
        (0..g.size())
            .filter_map(|e| {
                let (a, b) = g.endpoints(e);
                if xm[a] && ym[b] {
                    Some((b, e, a))
                } else if xm[b] && ym[a] {
                    Some((a, e, b))
                } else {
                    None
                }
            })
            .collect()
    }

    /// Diameter of the subgraph induced by `X`; `None` if it is disconnected.
    pub fn x_diameter(&self, g: &Multigraph) -> Option<usize> {
        let xm = self.x_mask();
        let mut best = 0;
        for &a in &self.x {
            for &b in &self.x {
                best = best.max(g.shortest_path_within(&xm, a, b, None)?.len() / 2);
            }
        }
        Some(best)
    }

    pub fn check(&self, g: &Multigraph, ell: usize) -> Result<()> {
        if ell == 0 {
            return Err(Error::PreconditionViolated("cut constructions need ell >= 1".into()));
        }
        if self.within.len() != g.order() || self.x.is_empty() || self.x.iter().any(|&v| v >= g.order() || !self.within[v]) {
            return Err(Error::PreconditionViolated("X must be a nonempty subset of the host".into()));
        }
        match self.x_diameter(g) {
            Some(d) if d < ell => {}
            Some(d) => {
                return Err(Error::PreconditionViolated(format!("diameter of X is {d}, not below {ell}")))
            }
            None => return Err(Error::PreconditionViolated("X is disconnected".into())),
        }
        let comps = g.components_within(&self.y_mask());
        if comps.len() != 1 {
            return Err(Error::PreconditionViolated(format!("Y has {} components", comps.len())));
        }
        Ok(())
    }
}

/// Vertex `p` (taken mod the cycle length) of the periodic walk around a
/// closed arc, going back `ell` steps: the `ell`-window ending there.
pub(super) fn cycle_window(g: &Multigraph, closed: &[usize], end: usize, ell: usize) -> Result<Arc> {
    let k = closed.len() / 2;
    let vertex = |i: usize| closed[2 * (i % k)];
    let edge = |i: usize| closed[2 * ((i + k - 1) % k) + 1];
    let start = end + k * (ell / k + 1) - ell;
    let mut units = vec![vertex(start)];
    for i in start + 1..=start + ell {
        units.push(edge(i));
        units.push(vertex(i));
    }
    Arc::from_units(g, &units)
}

fn path_arc(g: &Multigraph, mask: &[bool], a: usize, b: usize) -> Result<Arc> {
    let units = g
        .shortest_path_within(mask, a, b, None)
        .ok_or_else(|| Error::PreconditionViolated("no path inside the required side".into()))?;
    Arc::from_units(g, &units)
}

fn windows(arc: &Arc, ell: usize) -> Result<Vec<Link>> {
    (0..=arc.len() - ell).map(|k| Ok(arc.segment(k, k + ell)?.to_link())).collect()
}

/// The branch sets `X_i` and connectors `R_ij` shared by both cut lemmas,
/// given the arcs `L_i` ending with the cut arcs.
fn shunting_model(
    g: &Multigraph,
    ell: usize,
    inst: &CutInstance,
    heads: &[Arc],
) -> Result<(Vec<Vec<Link>>, BTreeMap<(usize, usize), Vec<Link>>)> {
    let xm = inst.x_mask();
    let t = heads.len();
    let mut p: BTreeMap<(usize, usize), Arc> = BTreeMap::new();
    for i in 0..t {
        for j in i..t {
            let a = path_arc(g, &xm, heads[i].head(), heads[j].head())?;
            p.insert((j, i), a.reverse());
            p.insert((i, j), a);
        }
    }
    let mut sets = Vec::with_capacity(t);
    for i in 0..t {
        let mut set = Vec::new();
        for j in 0..t {
            set.extend(windows(&heads[i].conjunction(&p[&(i, j)])?, ell)?);
        }
        set.sort();
        set.dedup();
        sets.push(set);
    }
    let mut connectors = BTreeMap::new();
    for i in 0..t {
        for j in i + 1..t {
            let pij = &p[&(i, j)];
            let lij = pij.len();
            let r = heads[i]
                .segment(lij, ell)?
                .conjunction(pij)?
                .conjunction(&heads[j].segment(lij, ell)?.reverse())?;
            connectors.insert((i, j), windows(&r, ell)?);
        }
    }
    Ok((sets, connectors))
}

/// A `K_t` minor of the `ell`-link graph from a cut with `t` edges.
pub fn kt_minor_from_cut(g: &Multigraph, ell: usize, inst: &CutInstance) -> Result<LinkMinor> {
    inst.check(g, ell)?;
    let arcs = inst.cut_arcs(g);
    let t = arcs.len();
    if t < 2 {
        return Err(Error::PreconditionViolated(format!("cut has {t} edges, need at least 2")));
    }
    let xm = inst.x_mask();
    let ym = inst.y_mask();
    let mut heads = Vec::with_capacity(t);
    let mut first_cycle = Vec::new();
    for i in 0..t {
        let next = (i + 1) % t;
        let (yi, ei, xi) = arcs[i];
        let (yn, en, xn) = arcs[next];
        let mut closed = g
            .shortest_path_within(&xm, xi, xn, None)
            .ok_or_else(|| Error::PreconditionViolated("X is disconnected".into()))?;
        let q = g
            .shortest_path_within(&ym, yn, yi, None)
            .ok_or_else(|| Error::PreconditionViolated("Y is disconnected".into()))?;
        closed.extend([en, yn]);
        closed.extend_from_slice(&q[1..]);
        closed.extend([ei, xi]);
        let k = closed.len() / 2;
        heads.push(cycle_window(g, &closed, k, ell)?);
        if i == 0 {
            first_cycle = closed;
        }
    }
    if t == 2 {
        let k = first_cycle.len() / 2;
        let a = heads[0].to_link();
        let b = cycle_window(g, &first_cycle, k - 1, ell)?.to_link();
        return Ok(LinkMinor {
            target: MinorWitness::complete_target(2),
            connectors: BTreeMap::from([((0, 1), vec![a.clone(), b.clone()])]),
            branch_sets: vec![vec![a], vec![b]],
        });
    }
    let (branch_sets, connectors) = shunting_model(g, ell, inst, &heads)?;
    Ok(LinkMinor { target: MinorWitness::complete_target(t), branch_sets, connectors })
}

/// A `K_{t+1}` minor of the `ell`-link graph from a cut with `t` edges whose
/// far side contains a cycle. The extra branch set comes last.
pub fn kt1_minor_with_cycle(g: &Multigraph, ell: usize, inst: &CutInstance) -> Result<LinkMinor> {
    inst.check(g, ell)?;
    let ym = inst.y_mask();
    let closed = g.shortest_cycle_within(&ym).ok_or(Error::NoCycleInY)?;
    let arcs = inst.cut_arcs(g);
    let t = arcs.len();
    if t == 0 {
        return Err(Error::PreconditionViolated("cut is empty".into()));
    }
    let k = closed.len() / 2;
    let reversed: Vec<usize> = closed.iter().rev().copied().collect();
    let mut heads = Vec::with_capacity(t);
    let mut z: Vec<Link> = (0..k).map(|p| Ok(cycle_window(g, &closed, p, ell)?.to_link())).collect::<Result<_>>()?;
    let mut bridges = Vec::with_capacity(t);
    for &(yi, ei, xi) in &arcs {
        let (pos, pi) = (0..k)
            .filter_map(|p| g.shortest_path_within(&ym, closed[2 * p], yi, None).map(|u| (p, u)))
            .min_by_key(|(p, u)| (u.len(), *p))
            .ok_or_else(|| Error::PreconditionViolated("Y is disconnected".into()))?;
        let pi = Arc::from_units(g, &pi)?;
        let tail = Arc::from_units(g, &[yi, ei, xi])?;
        let full = [cycle_window(g, &closed, pos, ell), cycle_window(g, &reversed, k - pos, ell)]
            .into_iter()
            .find_map(|q| q.ok()?.conjunction(&pi).ok()?.conjunction(&tail).ok())
            .ok_or_else(|| Error::ConstructionFailed("no orientation of the cycle extends".into()))?;
        let s = pi.len();
        let head = full.segment(s + 1, ell + s + 1)?;
        z.extend(windows(&full.segment(0, ell + s)?, ell)?);
        bridges.push(vec![full.segment(s, ell + s)?.to_link(), head.to_link()]);
        heads.push(head);
    }
    z.sort();
    z.dedup();
    let (mut branch_sets, mut connectors) = if t == 1 {
        (vec![vec![heads[0].to_link()]], BTreeMap::new())
    } else {
        shunting_model(g, ell, inst, &heads)?
    };
    for (i, bridge) in bridges.into_iter().enumerate() {
        let mut path = bridge;
        path.reverse();
        connectors.insert((i, t), path);
    }
    branch_sets.push(z);
    Ok(LinkMinor { target: MinorWitness::complete_target(t + 1), branch_sets, connectors })
}
