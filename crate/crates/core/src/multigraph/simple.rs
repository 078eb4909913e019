use std::collections::VecDeque;

/// Index-based simple undirected graph.
///
/// This is the working representation for the oracles (colouring, minors,
/// connectivity): parallel edges are collapsed and loops are dropped, since
/// none of those questions depend on multiplicity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SimpleGraph {
    adj: Vec<Vec<usize>>,
}

impl SimpleGraph {
    pub fn new(n: usize) -> Self {
        SimpleGraph { adj: vec![Vec::new(); n] }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u == v {
                continue;
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        SimpleGraph { adj }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The null graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// BFS distances from `src`; `None` for unreachable vertices.
    pub fn distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.order()];
        dist[src] = Some(0);
        let mut queue = VecDeque::from([src]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Subgraph induced by `keep` (in the given order), with vertex `i`
    /// of the result corresponding to `keep[i]`.
    pub fn induced(&self, keep: &[usize]) -> SimpleGraph {
        let mut pos = vec![usize::MAX; self.order()];
        for (i, &v) in keep.iter().enumerate() {
            pos[v] = i;
        }
        let edges = keep.iter().enumerate().flat_map(|(i, &v)| {
            let pos = &pos;
            self.adj[v]
                .iter()
                .filter(move |&&w| pos[w] != usize::MAX)
                .map(move |&w| (i, pos[w]))
        });
        SimpleGraph::from_edges(keep.len(), edges.collect::<Vec<_>>())
    }

    /// Proper 2-colouring if the graph is bipartite.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let n = self.order();
        let mut side = vec![u8::MAX; n];
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if side[w] == u8::MAX {
                        side[w] = 1 - side[u];
                        queue.push_back(w);
                    } else if side[w] == side[u] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.order();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    /// A maximum clique, found by Bron–Kerbosch with pivoting.
    pub fn max_clique(&self) -> Vec<usize> {
        let mut best = Vec::new();
        let mut current = Vec::new();
        let candidates: Vec<usize> = (0..self.order()).collect();
        self.bron_kerbosch(&mut current, candidates, Vec::new(), &mut best);
        best.sort_unstable();
        best
    }

    fn bron_kerbosch(
        &self,
        current: &mut Vec<usize>,
        candidates: Vec<usize>,
        excluded: Vec<usize>,
        best: &mut Vec<usize>,
    ) {
        if candidates.is_empty() {
            if excluded.is_empty() && current.len() > best.len() {
                *best = current.clone();
            }
            return;
        }
        if current.len() + candidates.len() <= best.len() {
            return;
        }
        let pivot = candidates
            .iter()
            .chain(excluded.iter())
            .copied()
            .max_by_key(|&u| {
                candidates.iter().filter(|&&w| self.has_edge(u, w)).count()
            })
            .unwrap();
        let mut candidates = candidates;
        let mut excluded = excluded;
        let branch: Vec<usize> = candidates
            .iter()
            .copied()
            .filter(|&v| !self.has_edge(pivot, v))
            .collect();
        for v in branch {
            let next_c: Vec<usize> =
                candidates.iter().copied().filter(|&w| self.has_edge(v, w)).collect();
            let next_x: Vec<usize> =
                excluded.iter().copied().filter(|&w| self.has_edge(v, w)).collect();
            current.push(v);
            self.bron_kerbosch(current, next_c, next_x, best);
            current.pop();
            candidates.retain(|&w| w != v);
            excluded.push(v);
        }
    }
}
