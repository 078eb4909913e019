use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Multigraph, MultigraphBuilder};
use crate::error::{Error, Result};

// Numbers are zero-padded so that lexicographic id order matches numeric order.
fn name(prefix: &str, i: usize, count: usize) -> String {
    let width = count.saturating_sub(1).max(1).to_string().len();
    format!("{prefix}{i:0width$}")
}

fn finish(b: &MultigraphBuilder) -> Multigraph {
    b.build().expect("generator ids are unique")
}

/// Two vertices joined by `t` parallel edges.
pub fn dipole(t: usize) -> Result<Multigraph> {
    if t < 1 {
        return Err(Error::InvalidParameter("dipole needs t >= 1".into()));
    }
    let mut b = MultigraphBuilder::new();
    for i in 0..t {
        b.edge(name("e", i, t), "a", "b")?;
    }
    Ok(finish(&b))
}

pub fn complete(n: usize) -> Result<Multigraph> {
    if n < 1 {
        return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
    }
    let m = n * (n - 1) / 2;
    let mut b = MultigraphBuilder::new();
    let mut k = 0;
    for i in 0..n {
        b.vertex(name("v", i, n));
        for j in i + 1..n {
            b.edge(name("e", k, m), name("v", i, n), name("v", j, n))?;
            k += 1;
        }
    }
    Ok(finish(&b))
}

/// K_{n,m} with sides `a*` and `b*`.
pub fn complete_bipartite(n: usize, m: usize) -> Result<Multigraph> {
    if n < 1 || m < 1 {
        return Err(Error::InvalidParameter("complete bipartite graph needs n, m >= 1".into()));
    }
    let mut b = MultigraphBuilder::new();
    let mut k = 0;
    for i in 0..n {
        for j in 0..m {
            b.edge(name("e", k, n * m), name("a", i, n), name("b", j, m))?;
            k += 1;
        }
    }
    Ok(finish(&b))
}

/// K_{1,n}.
pub fn star(n: usize) -> Result<Multigraph> {
    complete_bipartite(1, n)
}

/// The cycle of length `n`; `n = 2` gives two parallel edges.
pub fn cycle(n: usize) -> Result<Multigraph> {
    if n < 2 {
        return Err(Error::InvalidParameter("cycle needs n >= 2".into()));
    }
    let mut b = MultigraphBuilder::new();
    for i in 0..n {
        b.edge(name("e", i, n), name("v", i, n), name("v", (i + 1) % n, n))?;
    }
    Ok(finish(&b))
}

/// The path with `n` edges (and `n + 1` vertices).
pub fn path(n: usize) -> Result<Multigraph> {
    if n < 1 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    let mut b = MultigraphBuilder::new();
    for i in 0..n {
        b.edge(name("e", i, n), name("v", i, n + 1), name("v", i + 1, n + 1))?;
    }
    Ok(finish(&b))
}

pub fn petersen() -> Multigraph {
    let mut b = MultigraphBuilder::new();
    for i in 0..5 {
        let o = |j: usize| format!("o{}", j % 5);
        let n = |j: usize| format!("i{}", j % 5);
        b.edge(format!("c{i}"), o(i), o(i + 1)).unwrap();
        b.edge(format!("s{i}"), o(i), n(i)).unwrap();
        b.edge(format!("p{i}"), n(i), n(i + 2)).unwrap();
    }
    finish(&b)
}

/// Hub `h` joined to every vertex of an `n`-cycle.
pub fn wheel(n: usize) -> Result<Multigraph> {
    if n < 3 {
        return Err(Error::InvalidParameter("wheel needs n >= 3".into()));
    }
    let mut b = MultigraphBuilder::new();
    for i in 0..n {
        b.edge(name("s", i, n), "h", name("r", i, n))?;
        b.edge(name("c", i, n), name("r", i, n), name("r", (i + 1) % n, n))?;
    }
    Ok(finish(&b))
}

/// The four-vertex multigraph with a doubled middle edge:
/// `u0 -f0- v0 =e0,e1= v1 -f1- u1`.
pub fn fig2a() -> Multigraph {
    let mut b = MultigraphBuilder::new();
    b.edge("f0", "u0", "v0").unwrap();
    b.edge("e0", "v0", "v1").unwrap();
    b.edge("e1", "v0", "v1").unwrap();
    b.edge("f1", "v1", "u1").unwrap();
    finish(&b)
}

/// `m` edges between uniformly random distinct endpoints among `n` vertices.
/// Parallel edges occur naturally; every vertex is declared even if isolated.
pub fn random_multigraph(seed: u64, n: usize, m: usize) -> Result<Multigraph> {
    if n < 2 && m > 0 {
        return Err(Error::InvalidParameter("need two vertices to place an edge".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut b = MultigraphBuilder::new();
    for i in 0..n {
        b.vertex(name("v", i, n));
    }
    for k in 0..m {
        let u = rng.gen_range(0..n);
        let mut v = rng.gen_range(0..n - 1);
        if v >= u {
            v += 1;
        }
        b.edge(name("e", k, m), name("v", u, n), name("v", v, n))?;
    }
    Ok(finish(&b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let d = dipole(3).unwrap();
        assert_eq!((d.order(), d.size()), (2, 3));
        let k1 = complete(1).unwrap();
        assert_eq!((k1.order(), k1.size()), (1, 0));
        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!((k23.order(), k23.size()), (5, 6));
        let c2 = cycle(2).unwrap();
        assert_eq!((c2.order(), c2.size()), (2, 2));
        let p3 = path(3).unwrap();
        assert_eq!((p3.order(), p3.size()), (4, 3));
        let p = petersen();
        assert_eq!((p.order(), p.size(), p.regular_degree()), (10, 15, Some(3)));
        let w = wheel(5).unwrap();
        assert_eq!((w.order(), w.size(), w.max_degree()), (6, 10, 5));
    }

    #[test]
    fn invalid_sizes() {
        assert!(dipole(0).is_err());
        assert!(complete(0).is_err());
        assert!(cycle(1).is_err());
        assert!(path(0).is_err());
        assert!(complete_bipartite(0, 2).is_err());
    }

    #[test]
    fn padded_ids_sort_numerically() {
        let c = cycle(12).unwrap();
        assert_eq!(c.vertex_id(2).0, "v02");
        assert_eq!(c.vertex_id(10).0, "v10");
    }

    #[test]
    fn random_is_seeded() {
        let a = random_multigraph(7, 8, 14).unwrap();
        let b = random_multigraph(7, 8, 14).unwrap();
        assert_eq!(a, b);
        assert_eq!((a.order(), a.size()), (8, 14));
        assert!(a.check_invariants());
    }
}
