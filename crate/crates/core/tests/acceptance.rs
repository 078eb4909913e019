//! Acceptance criteria 1 to 11, one line each. Exits non-zero if any fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use linkgraph::coloring::{
    exact_chromatic, greedy_coloring, max_foreign_colors, recursive_chromatic_bound, reduce_coloring, Coloring,
};
use linkgraph::construction::{
    arc_digraph, iterated_line_digraph, link_graph, natural_partition, path_graph, LabeledGraph,
};
use linkgraph::harness::checks::{self, Outcome};
use linkgraph::harness::{default_corpus, verify_suite, Corpus, Report, DEFAULT_SEED};
use linkgraph::minors::{hadwiger_lower_bound, verify_minor};
use linkgraph::multigraph::{complete, complete_bipartite, cycle, dipole, fig2a, petersen, wheel, Multigraph, SimpleGraph};
use linkgraph::Limits;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Verdict = (bool, String);

/// Links of `g` with `k` edges, counted as non-backtracking walks and halved.
fn walk_oracle(g: &Multigraph, k: usize) -> usize {
    if k == 0 {
        return g.order();
    }
    // darts: (edge, direction), ways[d] = walks of the current length ending in dart d
    let mut ways = vec![1usize; 2 * g.size()];
    for _ in 1..k {
        let mut next = vec![0usize; 2 * g.size()];
        for e in 0..g.size() {
            for dir in 0..2 {
                let (a, b) = g.endpoints(e);
                let head = if dir == 0 { b } else { a };
                for &f in g.incident(head) {
                    if f == e {
                        continue;
                    }
                    let (fa, _) = g.endpoints(f);
                    let fdir = if fa == head { 0 } else { 1 };
                    next[2 * f + fdir] += ways[2 * e + dir];
                }
            }
        }
        ways = next;
    }
    ways.iter().sum::<usize>() / 2
}

/// Paths with `k` edges and distinct vertices, up to reversal.
fn path_oracle(g: &Multigraph, k: usize) -> usize {
    fn walk(g: &Multigraph, v: usize, left: usize, seen: &mut Vec<bool>) -> usize {
        if left == 0 {
            return 1;
        }
        let mut total = 0;
        for &e in g.incident(v) {
            let w = g.other_end(e, v);
            if !seen[w] {
                seen[w] = true;
                total += walk(g, w, left - 1, seen);
                seen[w] = false;
            }
        }
        total
    }
    let mut seen = vec![false; g.order()];
    let directed: usize = (0..g.order())
        .map(|v| {
            seen[v] = true;
            let n = walk(g, v, k, &mut seen);
            seen[v] = false;
            n
        })
        .sum();
    if k == 0 { directed } else { directed / 2 }
}

fn degrees(h: &LabeledGraph<'_>) -> Vec<usize> {
    let mut d = vec![0; h.order()];
    for e in &h.edges {
        d[e.ends.0] += 1;
        d[e.ends.1] += 1;
    }
    d
}

fn properly_colored(h: &SimpleGraph, c: &Coloring) -> bool {
    c.colors.len() == h.order() && c.colors.iter().all(|&k| k >= 1) && h.edges().all(|(u, v)| c.colors[u] != c.colors[v])
}

fn suite(corpus: &Corpus, claims: &[&str], limits: &Limits) -> Report {
    let filter: Vec<String> = claims.iter().map(|c| c.to_string()).collect();
    verify_suite(corpus, Some(&filter), limits)
}

fn summarize(report: &Report) -> Verdict {
    let t = report.tally();
    let mut detail = format!("{} pass, {} fail, {} skip", t.pass, t.fail, t.skip);
    if let Some(f) = report.failures().next() {
        detail += &format!("; first failure {} on {} at ell={:?}", f.claim, f.instance, f.ell);
    }
    (t.fail == 0 && t.pass > 0, detail)
}

fn criterion_1(limits: &Limits) -> Verdict {
    let start = Instant::now();
    let mut ok = true;
    let mut notes = Vec::new();
    for (name, g, r) in [("K4", complete(4).unwrap(), 3usize), ("petersen", petersen(), 3)] {
        let mut orders = Vec::new();
        for ell in 1..=5 {
            let h = link_graph(&g, ell, limits.links).unwrap();
            let next = link_graph(&g, ell + 1, limits.links).unwrap();
            let formula = g.order() * r * (r - 1).pow(ell as u32 - 1) / 2;
            ok &= h.order() == formula && h.order() == walk_oracle(&g, ell);
            ok &= h.size() == next.order();
            ok &= degrees(&h).iter().all(|&d| d == 2 * (r - 1));
            orders.push(h.order());
        }
        if name == "K4" {
            ok &= orders == [6, 12, 24, 48, 96];
        }
        notes.push(format!("{name} orders {orders:?}"));
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(5);
    (ok, format!("{}; {:.2}s", notes.join(", "), elapsed.as_secs_f64()))
}

fn criterion_2(limits: &Limits) -> Verdict {
    let g = complete_bipartite(2, 3).unwrap();
    let h1 = link_graph(&g, 1, limits.links).unwrap();
    let h2 = link_graph(&g, 2, limits.links).unwrap();
    let h3 = link_graph(&g, 3, limits.links).unwrap();
    let ell1 = h1.order() == 6 && degrees(&h1).iter().all(|&d| d == 3);
    // average degree 8/3 on 9 vertices means 12 edges
    let ell2 = h2.order() == 9 && 3 * 2 * h2.size() == 8 * h2.order();
    let ell3 = h3.order() == 36;
    let formula_ok = [&h1, &h2, &h3].iter().all(|h| checks::bipartite_counts(h, 2, 3).pass);
    (
        ell1 && ell2 && ell3,
        format!(
            "ell=1: {} vertices ({}); ell=2: {} vertices, {} edges ({}); ell=3: {} vertices, stated 36 ({}); \
             order formula nm[(n-1)(m-1)]^((ell-1)/2) holds at all three: {}",
            h1.order(),
            if ell1 { "ok" } else { "mismatch" },
            h2.order(),
            h2.size(),
            if ell2 { "ok" } else { "mismatch" },
            h3.order(),
            if ell3 { "ok" } else { "mismatch" },
            formula_ok
        ),
    )
}

fn criterion_5() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(DEFAULT_SEED);
    let mut failures = 0;
    let mut reduced = 0;
    for _ in 0..500 {
        let r = rng.gen_range(1..=4usize);
        let t = rng.gen_range(r + 2..=12usize);
        let n = rng.gen_range(t..=40usize);
        let mut class: Vec<usize> = (0..n).map(|v| if v < t { v } else { rng.gen_range(0..t) }).collect();
        class.shuffle(&mut rng);
        let allowed: Vec<BTreeSet<usize>> = class
            .iter()
            .map(|&own| {
                let others: Vec<usize> = (0..t).filter(|&k| k != own).collect();
                others.choose_multiple(&mut rng, r).copied().collect()
            })
            .collect();
        let p = rng.gen_range(0.2..0.9);
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if allowed[u].contains(&class[v]) && allowed[v].contains(&class[u]) && rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let h = SimpleGraph::from_edges(n, edges);
        let input = Coloring::new(class.iter().map(|&k| k as u32 + 1).collect());
        let bound = t * r / (r + 1) + 1;
        match reduce_coloring(&h, &input, r) {
            Ok(out) => {
                let used: BTreeSet<u32> = out.colors.iter().copied().collect();
                if !properly_colored(&h, &out) || used.len() > bound || out.t() as usize > bound {
                    failures += 1;
                }
                if used.len() < t {
                    reduced += 1;
                }
            }
            Err(_) => failures += 1,
        }
    }
    let mut identity_failures = 0;
    for r in 1..=5usize {
        for t in 1..=r + 1 {
            let h = complete(t).map(|g| g.underlying_simple()).unwrap_or_else(|_| SimpleGraph::new(t));
            let input = Coloring::new((1..=t as u32).collect());
            let bound = t * r / (r + 1) + 1;
            let ok = bound == t
                && reduce_coloring(&h, &input, r).is_ok_and(|out| properly_colored(&h, &out) && out.t() as usize <= t);
            if !ok {
                identity_failures += 1;
            }
        }
    }
    (
        failures == 0 && identity_failures == 0,
        format!(
            "500 random instances, {failures} violations, {reduced} needed fewer colours; \
             t <= r+1 cases: {identity_failures} violations"
        ),
    )
}

fn criterion_6(corpus: &Corpus, limits: &Limits) -> Verdict {
    let start = Instant::now();
    let (suite_ok, suite_detail) = summarize(&suite(corpus, &["Thm1", "Cor1.2", "Lem4.2", "Lem4.3", "Cor4.4"], limits));
    let mut dipoles = Vec::new();
    let mut dipole_ok = true;
    for t in 3..=5 {
        let g = dipole(t).unwrap();
        let mut row = Vec::new();
        for ell in 1..=4 {
            let h = link_graph(&g, ell, limits.links).unwrap().underlying_simple();
            let (chi, c) = exact_chromatic(&h, usize::MAX).unwrap();
            dipole_ok &= properly_colored(&h, &c) && chi == t;
            row.push(chi);
        }
        dipoles.push(format!("D_{t}: {row:?}"));
    }
    let k5 = complete(5).unwrap();
    let rec = recursive_chromatic_bound(&k5, 4, limits).unwrap();
    let k5_host = link_graph(&k5, 4, limits.links).unwrap().underlying_simple();
    let k5_ok = rec.colors_used <= 3 && properly_colored(&k5_host, &rec.coloring);
    let elapsed = start.elapsed();
    let ok = suite_ok && dipole_ok && k5_ok && elapsed < Duration::from_secs(60);
    (
        ok,
        format!(
            "suite {suite_detail}; chi_ell(D_t) = t for ell in 1..4 {} ({}); K5 ell=4 recursive uses {} colours; {:.1}s",
            if dipole_ok { "holds" } else { "does not hold" },
            dipoles.join(", "),
            rec.colors_used,
            elapsed.as_secs_f64()
        ),
    )
}

fn criterion_7(corpus: &Corpus, limits: &Limits) -> Verdict {
    let (suite_ok, suite_detail) = summarize(&suite(corpus, &["Thm2", "Lem5.1", "Lem5.2", "Cor5.3"], limits));
    let w5 = wheel(5).unwrap();
    let b = hadwiger_lower_bound(&w5, 1, limits).unwrap();
    let host = link_graph(&w5, 1, limits.links).unwrap().underlying_simple();
    let w5_ok = b.bound >= 5 && b.witness.clique_order() == Some(b.bound) && verify_minor(&host, &b.witness).is_ok();
    let p = petersen();
    let pb = hadwiger_lower_bound(&p, 2, limits).unwrap();
    let phost = link_graph(&p, 2, limits.links).unwrap().underlying_simple();
    let p_ok = pb.bound >= 6 && verify_minor(&phost, &pb.witness).is_ok();
    (
        suite_ok && w5_ok && p_ok,
        format!("suite {suite_detail}; W5 ell=1 gives K_{} verified; petersen ell=2 gives K_{} verified", b.bound, pb.bound),
    )
}

fn criterion_9(limits: &Limits) -> Verdict {
    let mut ok = true;
    let mut compared = 0;
    let cases: Vec<(Multigraph, std::ops::RangeInclusive<usize>)> =
        vec![(petersen(), 1..=4), (cycle(8).unwrap(), 1..=5)];
    for (g, ells) in &cases {
        for ell in ells.clone() {
            let p = path_graph(g, ell, limits.links).unwrap();
            let l = link_graph(g, ell, limits.links).unwrap();
            ok &= checks::same_labeled_graph(&p, &l).pass && p.order() == path_oracle(g, ell);
            compared += 1;
        }
    }
    let f = fig2a();
    let p2 = path_graph(&f, 2, limits.links).unwrap();
    let oracle = path_oracle(&f, 2);
    ok &= p2.order() == oracle;
    (ok, format!("{compared} path graphs equal their link graphs; P_2(fig2a) has {} vertices, enumeration gives {oracle}", p2.order()))
}

fn criterion_10(limits: &Limits) -> Verdict {
    let start = Instant::now();
    let mut ok = true;
    let mut n = 0;
    for g in [dipole(3).unwrap(), complete(4).unwrap(), petersen()] {
        for ell in 1..=3 {
            let direct = arc_digraph(&g, ell, limits.links).unwrap();
            let iterated = iterated_line_digraph(&g, ell, limits.links).unwrap();
            ok &= checks::digraph_iso(&direct, &iterated).pass && direct.order() == 2 * walk_oracle(&g, ell);
            n += 1;
        }
    }
    let elapsed = start.elapsed();
    ok &= elapsed < Duration::from_secs(10);
    (ok, format!("{n} natural isomorphisms checked in {:.2}s", elapsed.as_secs_f64()))
}

fn caught(clean: &Outcome, corrupted: &Outcome) -> bool {
    clean.pass && !corrupted.pass
}

fn criterion_11(limits: &Limits) -> Verdict {
    let mut results = Vec::new();
    let k4 = complete(4).unwrap();

    let h = link_graph(&k4, 2, limits.links).unwrap();
    let next = link_graph(&k4, 3, limits.links).unwrap().order();
    let mut dropped = h.clone();
    dropped.edges.pop();
    results.push((
        "dropped edge",
        caught(
            &checks::edge_vertex_identity(&h, next, Some((3, 6))),
            &checks::edge_vertex_identity(&dropped, next, Some((3, 6))),
        ),
    ));

    let lower = link_graph(&k4, 0, limits.links).unwrap();
    let p = natural_partition(&h).unwrap();
    let mut merged = p.clone();
    let (_, absorbed) = merged.vertex_parts.pop().unwrap();
    merged.vertex_parts[0].1.extend(absorbed);
    merged.vertex_parts[0].1.sort_unstable();
    results.push(("merged partition part", caught(&checks::partition(&h, &p, &lower), &checks::partition(&h, &merged, &lower))));

    let k5 = complete(5).unwrap();
    let rec = recursive_chromatic_bound(&k5, 4, limits).unwrap();
    let host = link_graph(&k5, 4, limits.links).unwrap().underlying_simple();
    let mut bad = rec.coloring.clone();
    let (u, v) = host.edges().next().unwrap();
    bad.colors[v] = bad.colors[u];
    results.push((
        "clashing colouring",
        caught(&checks::coloring_bound(&host, &rec.coloring, 3, None), &checks::coloring_bound(&host, &bad, 3, None)),
    ));

    let greedy_in = greedy_coloring(&host);
    let r = max_foreign_colors(&host, &greedy_in);
    let out = reduce_coloring(&host, &greedy_in, r).unwrap();
    let mut clash = out.clone();
    clash.colors[v] = clash.colors[u];
    results.push((
        "clashing recolouring",
        caught(&checks::reduction(&host, &greedy_in, &out, r), &checks::reduction(&host, &greedy_in, &clash, r)),
    ));

    let w5 = wheel(5).unwrap();
    let b = hadwiger_lower_bound(&w5, 1, limits).unwrap();
    let whost = link_graph(&w5, 1, limits.links).unwrap().underlying_simple();
    let mut broken = b.witness.clone();
    let key = *broken.connectors.keys().next().unwrap();
    broken.connectors.remove(&key);
    results.push((
        "missing connector",
        caught(&checks::witness_at_least(&whost, &b.witness, 5, None), &checks::witness_at_least(&whost, &broken, 5, None)),
    ));

    let direct = arc_digraph(&k4, 2, limits.links).unwrap();
    let iterated = iterated_line_digraph(&k4, 2, limits.links).unwrap();
    let mut lost = iterated.clone();
    lost.arcs.pop();
    results.push(("dropped arc", caught(&checks::digraph_iso(&direct, &iterated), &checks::digraph_iso(&direct, &lost))));

    let pet = petersen();
    let pg = path_graph(&pet, 3, limits.links).unwrap();
    let lg = link_graph(&pet, 3, limits.links).unwrap();
    let mut short = pg.clone();
    short.edges.pop();
    results.push(("dropped path edge", caught(&checks::same_labeled_graph(&pg, &lg), &checks::same_labeled_graph(&short, &lg))));

    let missed: Vec<&str> = results.iter().filter(|(_, c)| !c).map(|(n, _)| *n).collect();
    (
        missed.is_empty(),
        if missed.is_empty() {
            format!("{} corruptions all detected", results.len())
        } else {
            format!("not detected: {}", missed.join(", "))
        },
    )
}

fn main() -> ExitCode {
    let limits = Limits::default();
    let corpus = default_corpus(DEFAULT_SEED);
    let structural = Corpus { ells: 0..=5, ..corpus.clone() };
    let partition_corpus = Corpus { ells: 2..=5, ..corpus.clone() };

    let criteria: Vec<(&str, Box<dyn Fn() -> Verdict>)> = vec![
        ("regular link graph counts", Box::new(|| criterion_1(&limits))),
        ("K_{2,3} link graph counts", Box::new(|| criterion_2(&limits))),
        (
            "structural suite",
            Box::new(|| summarize(&suite(&structural, &["Obs3.1", "Obs3.2", "Obs3.3", "Obs3.4", "Cor3.8"], &limits))),
        ),
        ("almost standard partitions", Box::new(|| summarize(&suite(&partition_corpus, &["Lem4.1", "Hom2"], &limits)))),
        ("recolouring reduction", Box::new(criterion_5)),
        ("colouring bounds", Box::new(|| criterion_6(&corpus, &limits))),
        ("minor witnesses", Box::new(|| criterion_7(&corpus, &limits))),
        ("Hadwiger inequality cases", Box::new(|| summarize(&suite(&corpus, &["Thm3"], &limits)))),
        ("path graphs", Box::new(|| criterion_9(&limits))),
        ("arc digraph isomorphism", Box::new(|| criterion_10(&limits))),
        ("negative controls", Box::new(|| criterion_11(&limits))),
    ];

    let mut failed = Vec::new();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let (ok, detail) = run();
        println!("criterion {:>2} {}: {name}: {detail}", i + 1, if ok { "PASS" } else { "FAIL" });
        if !ok {
            failed.push(i + 1);
        }
    }
    if failed.is_empty() {
        println!("acceptance: all 11 criteria pass");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failing criteria {failed:?}");
        ExitCode::FAILURE
    }
}
