use std::collections::HashSet;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::MinorWitness;
use crate::canon::{bitmask_rows, canonical_form_rows, CanonicalForm};
use crate::error::{Error, Result};
use crate::multigraph::SimpleGraph;

fn drop_bit(row: u64, b: usize) -> u64 {
    let low = row & ((1u64 << b) - 1);
    let high = if b + 1 >= 64 { 0 } else { row >> (b + 1) };
    low | (high << b)
}

/// Contracts `b` into `a`, keeping index order with `b` removed.
fn contract(rows: &[u64], groups: &[u64], a: usize, b: usize) -> (Vec<u64>, Vec<u64>) {
    let merged = (rows[a] | rows[b]) & !(1 << a) & !(1 << b);
    let mut out_rows = Vec::with_capacity(rows.len() - 1);
    let mut out_groups = Vec::with_capacity(rows.len() - 1);
    for v in 0..rows.len() {
        if v == b {
            continue;
        }
        let mut row = if v == a { merged } else { rows[v] };
        if v != a && row >> b & 1 == 1 {
            row = (row & !(1 << b)) | 1 << a;
        }
        out_rows.push(drop_bit(row, b));
        out_groups.push(if v == a { groups[a] | groups[b] } else { groups[v] });
    }
    (out_rows, out_groups)
}

fn edge_count(rows: &[u64]) -> usize {
    rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
}

fn clique_ceiling(n: usize, m: usize) -> usize {
    (1..=n).take_while(|t| t * (t - 1) / 2 <= m).last().unwrap_or(0)
}

/// Whether the connected graph contracts onto `K_t`; returns the groups.
fn contracts_to(rows: &[u64], groups: &[u64], t: usize, failed: &mut HashSet<CanonicalForm>) -> Option<Vec<u64>> {
    let n = rows.len();
    if n < t || edge_count(rows) < t * (t - 1) / 2 {
        return None;
    }
    if n == t {
        let full = (0..n).all(|v| rows[v].count_ones() as usize == n - 1);
        return full.then(|| groups.to_vec());
    }
    let key = canonical_form_rows(rows);
    if failed.contains(&key) {
        return None;
    }
    let degree = |v: usize| rows[v].count_ones() as usize;
    let low = (0..n).filter(|&v| degree(v) + 1 < t).min_by_key(|&v| (degree(v), v));
    let mut moves: Vec<(usize, usize)> = match low {
        Some(v) => (0..n).filter(|&u| rows[v] >> u & 1 == 1).map(|u| (u.min(v), u.max(v))).collect(),
        None => (0..n)
            .flat_map(|u| (u + 1..n).filter(move |&v| rows[u] >> v & 1 == 1).map(move |v| (u, v)))
            .collect(),
    };
    moves.sort_by_key(|&(u, v)| ((rows[u] & rows[v]).count_ones(), u, v));
    for (u, v) in moves {
        let (r, g) = contract(rows, groups, u, v);
        if let Some(found) = contracts_to(&r, &g, t, failed) {
            return Some(found);
        }
    }
    failed.insert(key);
    None
}

fn mask_members(mask: u64, labels: &[usize]) -> Vec<usize> {
    (0..64).filter(|&b| mask >> b & 1 == 1).map(|b| labels[b]).collect()
}

/// Hadwiger number with a model of the largest complete minor, by
/// contraction search per component with memoised canonical forms of
/// failed states.
pub fn exact_hadwiger(h: &SimpleGraph, cap: usize) -> Result<(usize, MinorWitness)> {
    let cap = cap.min(64);
    if h.order() > cap {
        return Err(Error::OracleTooLarge { size: h.order(), cap });
    }
    let mut best: (usize, Vec<Vec<usize>>) = (0, Vec::new());
    for comp in h.components() {
        let sub = h.induced(&comp);
        let rows = bitmask_rows(&sub);
        let groups: Vec<u64> = (0..rows.len()).map(|v| 1u64 << v).collect();
        let top = clique_ceiling(rows.len(), edge_count(&rows));
        for t in (best.0 + 1..=top).rev() {
            let mut failed = HashSet::new();
            if let Some(found) = contracts_to(&rows, &groups, t, &mut failed) {
                best = (t, found.iter().map(|&m| mask_members(m, &comp)).collect());
                break;
            }
        }
    }
    let w = MinorWitness::from_adjacent_sets(h, best.1)
        .ok_or_else(|| Error::ConstructionFailed("oracle groups are not pairwise adjacent".into()))?;
    super::verify_minor(h, &w).map_err(|d| Error::ConstructionFailed(d.to_string()))?;
    Ok((best.0, w))
}

/// Largest complete minor found by repeated min-degree contraction, where a
/// minimum-degree vertex is merged into the neighbour sharing the fewest
/// neighbours with it. Ties are broken by a seeded generator; each trial
/// reseeds from `seed + trial`.
pub fn contraction_heuristic(h: &SimpleGraph, seed: u64, trials: usize) -> Option<MinorWitness> {
    let mut best: Option<Vec<Vec<usize>>> = None;
    for trial in 0..trials {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(trial as u64));
        for comp in h.components() {
            let sub = h.induced(&comp);
            let mut adj: Vec<HashSet<usize>> =
                (0..sub.order()).map(|v| sub.neighbors(v).iter().copied().collect()).collect();
            let mut groups: Vec<Vec<usize>> = (0..sub.order()).map(|v| vec![comp[v]]).collect();
            let mut alive: Vec<usize> = (0..sub.order()).collect();
            loop {
                let n = alive.len();
                let min_deg = alive.iter().map(|&v| adj[v].len()).min().unwrap_or(0);
                if min_deg + 1 >= n {
                    if best.as_ref().is_none_or(|b| b.len() < n) {
                        best = Some(alive.iter().map(|&v| groups[v].clone()).collect());
                    }
                    break;
                }
                let mut lows: Vec<usize> = alive.iter().copied().filter(|&v| adj[v].len() == min_deg).collect();
                lows.shuffle(&mut rng);
                let v = lows[0];
                let mut nbrs: Vec<usize> = adj[v].iter().copied().collect();
                nbrs.sort_unstable();
                let common = |u: &usize| adj[*u].intersection(&adj[v]).count();
                let fewest = nbrs.iter().map(common).min().unwrap();
                let picks: Vec<usize> = nbrs.iter().copied().filter(|u| common(u) == fewest).collect();
                let u = picks[rng.gen_range(0..picks.len())];
                let moved: Vec<usize> = adj[v].iter().copied().collect();
                for w in moved {
                    adj[w].remove(&v);
                    if w != u {
                        adj[w].insert(u);
                        adj[u].insert(w);
                    }
                }
                adj[v].clear();
                let taken = std::mem::take(&mut groups[v]);
                groups[u].extend(taken);
                alive.retain(|&x| x != v);
            }
        }
    }
    let mut sets = best?;
    for s in &mut sets {
        s.sort_unstable();
    }
    let w = MinorWitness::from_adjacent_sets(h, sets)?;
    super::verify_minor(h, &w).ok()?;
    Some(w)
}
