use std::collections::VecDeque;

use super::Multigraph;

impl Multigraph {
    /// Degeneracy by minimum-degree peeling, counting edge multiplicity.
    pub fn degeneracy(&self) -> usize {
        self.degeneracy_core().0
    }

    /// Degeneracy together with the vertex set of a subgraph whose minimum
    /// degree equals it (the remaining graph when the peeling maximum was hit).
    pub fn degeneracy_core(&self) -> (usize, Vec<usize>) {
        let n = self.order();
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut alive = vec![true; n];
        let mut best = 0;
        let mut best_set: Vec<usize> = (0..n).collect();
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| alive[v])
                .min_by_key(|&v| (deg[v], v))
                .expect("some vertex is alive");
            if deg[v] > best {
                best = deg[v];
                best_set = (0..n).filter(|&w| alive[w]).collect();
            }
            alive[v] = false;
            for &e in self.incident(v) {
                let w = self.other_end(e, v);
                if alive[w] {
                    deg[w] -= 1;
                }
            }
        }
        (best, best_set)
    }

    /// Length of a shortest cycle; a pair of parallel edges is a 2-cycle.
    /// `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let all = vec![true; self.order()];
        self.shortest_cycle_within(&all).map(|units| units.len() / 2)
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.underlying_simple().components()
    }

    pub fn is_connected(&self) -> bool {
        self.underlying_simple().is_connected()
    }

    /// Connected, at least two vertices, and no cut vertex. A two-vertex
    /// graph with at least one edge qualifies.
    pub fn is_biconnected(&self) -> bool {
        let n = self.order();
        if n < 2 || !self.is_connected() {
            return false;
        }
        let simple = self.underlying_simple();
        (0..n).all(|cut| {
            let rest: Vec<usize> = (0..n).filter(|&v| v != cut).collect();
            simple.induced(&rest).is_connected()
        })
    }

    /// Diameter of the underlying simple graph; `None` when disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let simple = self.underlying_simple();
        let mut best = 0;
        for s in 0..self.order() {
            for d in simple.distances(s) {
                best = best.max(d?);
            }
        }
        Some(best)
    }

    /// Whether the sub-multigraph induced by `mask` contains a cycle
    /// (including 2-cycles formed by parallel edges).
    pub fn has_cycle_within(&self, mask: &[bool]) -> bool {
        let verts: Vec<usize> = (0..self.order()).filter(|&v| mask[v]).collect();
        let edges = (0..self.size())
            .filter(|&e| {
                let (a, b) = self.endpoints(e);
                mask[a] && mask[b]
            })
            .count();
        let comps = self.components_within(mask).len();
        edges + comps > verts.len()
    }

    /// Components of the subgraph induced by `mask`.
    pub fn components_within(&self, mask: &[bool]) -> Vec<Vec<usize>> {
        let keep: Vec<usize> = (0..self.order()).filter(|&v| mask[v]).collect();
        self.underlying_simple()
            .induced(&keep)
            .components()
            .into_iter()
            .map(|c| c.into_iter().map(|i| keep[i]).collect())
            .collect()
    }

    /// Shortest path from `from` to `to` inside `mask` as interleaved units
    /// `[v0, e1, v1, ..., vk]`. Ties go to the smallest edge index at each
    /// BFS expansion. `skip_edge` is never used.
    pub fn shortest_path_within(
        &self,
        mask: &[bool],
        from: usize,
        to: usize,
        skip_edge: Option<usize>,
    ) -> Option<Vec<usize>> {
        if !mask[from] || !mask[to] {
            return None;
        }
        let mut parent: Vec<Option<(usize, usize)>> = vec![None; self.order()];
        let mut seen = vec![false; self.order()];
        seen[from] = true;
        let mut queue = VecDeque::from([from]);
        while let Some(u) = queue.pop_front() {
            if u == to {
                break;
            }
            for &e in self.incident(u) {
                if Some(e) == skip_edge {
                    continue;
                }
                let w = self.other_end(e, u);
                if mask[w] && !seen[w] {
                    seen[w] = true;
                    parent[w] = Some((u, e));
                    queue.push_back(w);
                }
            }
        }
        if !seen[to] {
            return None;
        }
        let mut units = vec![to];
        let mut cur = to;
        while let Some((p, e)) = parent[cur] {
            units.push(e);
            units.push(p);
            cur = p;
        }
        units.reverse();
        Some(units)
    }

    /// A shortest cycle inside `mask`, as closed interleaved units
    /// `[v0, e1, v1, ..., ek, v0]`.
    pub fn shortest_cycle_within(&self, mask: &[bool]) -> Option<Vec<usize>> {
        let mut best: Option<Vec<usize>> = None;
        for e in 0..self.size() {
            let (a, b) = self.endpoints(e);
            if !mask[a] || !mask[b] {
                continue;
            }
            if let Some(mut units) = self.shortest_path_within(mask, b, a, Some(e)) {
                units.push(e);
                units.push(b);
                if best.as_ref().is_none_or(|cur| units.len() < cur.len()) {
                    best = Some(units);
                }
            }
        }
        best
    }

    /// Repeatedly drop vertices of degree one (degree taken inside the mask).
    pub fn peel_leaves(&self, mask: &[bool]) -> Vec<bool> {
        let mut mask = mask.to_vec();
        loop {
            let leaf = (0..self.order()).find(|&v| {
                mask[v]
                    && self
                        .incident(v)
                        .iter()
                        .filter(|&&e| mask[self.other_end(e, v)])
                        .count()
                        == 1
            });
            match leaf {
                Some(v) => mask[v] = false,
                None => return mask,
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::multigraph::*;

    /// Brute-force degeneracy: max over all vertex subsets of the minimum degree.
    fn degeneracy_oracle(g: &Multigraph) -> usize {
        let n = g.order();
        let mut best = 0;
        for mask in 1u32..(1 << n) {
            let inside = |v: usize| mask >> v & 1 == 1;
            let min = (0..n)
                .filter(|&v| inside(v))
                .map(|v| g.incident(v).iter().filter(|&&e| inside(g.other_end(e, v))).count())
                .min()
                .unwrap();
            best = best.max(min);
        }
        best
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(complete(4).unwrap().degeneracy(), 3);
        assert_eq!(dipole(3).unwrap().degeneracy(), 3);
        assert_eq!(petersen().degeneracy(), 3);
        assert_eq!(path(4).unwrap().degeneracy(), 1);
        assert_eq!(Multigraph::default().degeneracy(), 0);
        assert_eq!(complete(1).unwrap().degeneracy(), 0);
        for n in 1..=8 {
            assert_eq!(complete(n).unwrap().degeneracy(), n - 1);
        }
    }

    #[test]
    fn degeneracy_matches_subset_oracle() {
        for seed in 0..20 {
            let g = random_multigraph(seed, 7, 12).unwrap();
            let (d, core) = g.degeneracy_core();
            assert_eq!(d, degeneracy_oracle(&g), "seed {seed}");
            assert!(d <= g.max_degree());
            let mask: Vec<bool> = (0..g.order()).map(|v| core.contains(&v)).collect();
            let min_inside = core
                .iter()
                .map(|&v| g.incident(v).iter().filter(|&&e| mask[g.other_end(e, v)]).count())
                .min()
                .unwrap_or(0);
            assert_eq!(min_inside, d);
        }
    }

    #[test]
    fn girth_examples() {
        assert_eq!(dipole(2).unwrap().girth(), Some(2));
        assert_eq!(petersen().girth(), Some(5));
        assert_eq!(path(4).unwrap().girth(), None);
        assert_eq!(complete(4).unwrap().girth(), Some(3));
        assert_eq!(fig2a().girth(), Some(2));
    }

    #[test]
    fn connectivity_examples() {
        let c5 = cycle(5).unwrap();
        assert!(c5.is_connected() && c5.is_biconnected());
        assert_eq!(c5.diameter(), Some(2));
        let p3 = path(3).unwrap();
        assert_eq!(p3.diameter(), Some(3));
        assert!(!p3.is_biconnected());
        let g = fig2a();
        assert!(g.is_connected());
        assert!(!g.is_biconnected());
        assert!(dipole(2).unwrap().is_biconnected());
        assert!(!complete(1).unwrap().is_biconnected());
        let two_edges = parse_edge_list("a b\nc d\n").unwrap();
        assert!(!two_edges.is_connected());
        assert_eq!(two_edges.diameter(), None);
    }

    #[test]
    fn shortest_cycle_is_closed_walk() {
        let p = petersen();
        let all = vec![true; 10];
        let c = p.shortest_cycle_within(&all).unwrap();
        assert_eq!(c.len(), 11);
        assert_eq!(c[0], c[10]);
    }

    #[test]
    fn peel_leaves_keeps_the_cycle() {
        let g = parse_edge_list("a b\nb c\nc a\nc d\nd e\n").unwrap();
        let core = g.peel_leaves(&vec![true; g.order()]);
        let kept: Vec<&str> = (0..g.order())
            .filter(|&v| core[v])
            .map(|v| g.vertex_id(v).0.as_str())
            .collect();
        assert_eq!(kept, ["a", "b", "c"]);
    }
}
