//! Canonical forms of small simple graphs by colour refinement and
//! individualisation, used as memo keys.

use crate::multigraph::SimpleGraph;

/// Adjacency rows of a relabelled copy of the graph. Two graphs with equal
/// forms are always isomorphic; isomorphic graphs get equal forms unless
/// the leaf budget ran out while searching.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(pub Vec<u64>);

const LEAF_BUDGET: usize = 512;

/// Bitmask adjacency; panics above 64 vertices.
pub fn bitmask_rows(h: &SimpleGraph) -> Vec<u64> {
    assert!(h.order() <= 64, "bitmask rows need at most 64 vertices");
    (0..h.order())
        .map(|v| h.neighbors(v).iter().fold(0u64, |m, &w| m | 1 << w))
        .collect()
}

fn rerank<K: Ord + Clone>(keys: &[K]) -> Vec<u32> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(k).unwrap() as u32).collect()
}

fn refine(rows: &[u64], mut colors: Vec<u32>) -> Vec<u32> {
    let n = rows.len();
    let mut classes = colors.iter().collect::<std::collections::BTreeSet<_>>().len();
    loop {
        let keys: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut around: Vec<u32> =
                    (0..n).filter(|&w| rows[v] >> w & 1 == 1).map(|w| colors[w]).collect();
                around.sort_unstable();
                (colors[v], around)
            })
            .collect();
        let next = rerank(&keys);
        let count = next.iter().collect::<std::collections::BTreeSet<_>>().len();
        colors = next;
        if count == classes {
            return colors;
        }
        classes = count;
    }
}

fn relabel(rows: &[u64], perm: &[u32]) -> Vec<u64> {
    let mut out = vec![0u64; rows.len()];
    for (v, &row) in rows.iter().enumerate() {
        let mut bits = row;
        while bits != 0 {
            let w = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            out[perm[v] as usize] |= 1 << perm[w];
        }
    }
    out
}

struct Walk<'a> {
    rows: &'a [u64],
    best: Option<Vec<u64>>,
    leaves: usize,
}

impl Walk<'_> {
    fn go(&mut self, colors: Vec<u32>) {
        let colors = refine(self.rows, colors);
        let n = self.rows.len();
        let mut sizes = vec![0usize; n];
        for &c in &colors {
            sizes[c as usize] += 1;
        }
        let Some(cell) = (0..n).filter(|&c| sizes[c] > 1).min_by_key(|&c| (sizes[c], c)) else {
            self.leaves += 1;
            let form = relabel(self.rows, &colors);
            if self.best.as_ref().is_none_or(|b| form < *b) {
                self.best = Some(form);
            }
            return;
        };
        for v in (0..n).filter(|&v| colors[v] as usize == cell) {
            if self.leaves >= LEAF_BUDGET && self.best.is_some() {
                return;
            }
            let keys: Vec<(u32, bool)> =
                colors.iter().enumerate().map(|(w, &c)| (c, w != v)).collect();
            self.go(rerank(&keys));
        }
    }
}

pub fn canonical_form(h: &SimpleGraph) -> CanonicalForm {
    canonical_form_rows(&bitmask_rows(h))
}

pub fn canonical_form_rows(rows: &[u64]) -> CanonicalForm {
    let mut walk = Walk { rows, best: None, leaves: 0 };
    walk.go(vec![0; rows.len()]);
    CanonicalForm(walk.best.unwrap_or_default())
}
