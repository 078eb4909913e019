use linkgraph::coloring::{greedy_coloring, is_proper, max_foreign_colors, reduce_coloring, reduction_bound};
use linkgraph::construction::{arc_digraph, iterated_line_digraph, link_graph, natural_iso, natural_partition, path_graph};
use linkgraph::harness::checks;
use linkgraph::links::count_links;
use linkgraph::minors::{hadwiger_lower_bound, verify_minor};
use linkgraph::multigraph::{parse_edge_list, random_multigraph, to_edge_list, Multigraph};
use linkgraph::Limits;
use proptest::prelude::*;

const LIMIT: usize = 200_000;

fn multigraphs() -> impl Strategy<Value = Multigraph> {
    (any::<u64>(), 2usize..8, 1usize..12).prop_map(|(seed, n, m)| random_multigraph(seed, n, m).unwrap())
}

fn walks(g: &Multigraph, k: usize) -> usize {
    if k == 0 {
        return g.order();
    }
    let mut ways = vec![1usize; 2 * g.size()];
    for _ in 1..k {
        let mut next = vec![0usize; 2 * g.size()];
        for e in 0..g.size() {
            let (a, b) = g.endpoints(e);
            for (dir, head) in [(0, b), (1, a)] {
                for &f in g.incident(head) {
                    if f != e {
                        let fdir = usize::from(g.endpoints(f).0 != head);
                        next[2 * f + fdir] += ways[2 * e + dir];
                    }
                }
            }
        }
        ways = next;
    }
    ways.iter().sum::<usize>() / 2
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn link_counts_match_walks(g in multigraphs(), ell in 0usize..5) {
        let h = link_graph(&g, ell, LIMIT).unwrap();
        prop_assert_eq!(h.order(), walks(&g, ell));
        prop_assert_eq!(count_links(&g, ell, LIMIT).unwrap(), h.order());
        prop_assert_eq!(h.size(), walks(&g, ell + 1));
    }

    #[test]
    fn link_graphs_are_loopless_with_multiplicity_at_most_two(g in multigraphs(), ell in 1usize..5) {
        let h = link_graph(&g, ell, LIMIT).unwrap();
        prop_assert!(h.check_invariants().is_ok());
        prop_assert!(checks::loopless(&h).pass);
        prop_assert!(h.size() == 0 || h.max_multiplicity() <= 2);
        prop_assert!(checks::multiplicity(&h, g.has_parallel_edges()).pass);
    }

    #[test]
    fn natural_partitions_are_almost_standard(g in multigraphs(), ell in 2usize..5) {
        let h = link_graph(&g, ell, LIMIT).unwrap();
        let lower = link_graph(&g, ell - 2, LIMIT).unwrap();
        let p = natural_partition(&h).unwrap();
        let outcome = checks::partition(&h, &p, &lower);
        prop_assert!(outcome.pass, "{:?}", outcome);
        prop_assert!(checks::middle_homomorphism(&h, &lower).pass);
    }

    #[test]
    fn recolouring_respects_bound(g in multigraphs(), ell in 1usize..4) {
        let h = link_graph(&g, ell, LIMIT).unwrap().underlying_simple();
        let c = greedy_coloring(&h);
        let r = max_foreign_colors(&h, &c);
        let out = reduce_coloring(&h, &c, r).unwrap();
        prop_assert!(is_proper(&h, &out).unwrap());
        prop_assert!(out.t() as usize <= reduction_bound(c.t() as usize, r));
        prop_assert!(out.t() <= c.t());
    }

    #[test]
    fn hadwiger_witnesses_verify(g in multigraphs(), ell in 1usize..4) {
        let h = link_graph(&g, ell, LIMIT).unwrap().underlying_simple();
        prop_assume!(h.size() > 0);
        let b = hadwiger_lower_bound(&g, ell, &Limits::default()).unwrap();
        prop_assert!(verify_minor(&h, &b.witness).is_ok());
        prop_assert_eq!(b.witness.clique_order(), Some(b.bound));
        prop_assert!(b.bound >= 2);
    }

    #[test]
    fn path_graph_is_link_graph_below_girth(g in multigraphs(), ell in 1usize..5) {
        let p = path_graph(&g, ell, LIMIT).unwrap();
        let l = link_graph(&g, ell, LIMIT).unwrap();
        prop_assert!(p.order() <= l.order());
        if g.girth().is_none_or(|girth| girth > ell.max(2)) {
            prop_assert!(checks::same_labeled_graph(&p, &l).pass);
        }
    }

    #[test]
    fn arc_digraph_is_iterated_line_digraph(g in multigraphs(), ell in 1usize..4) {
        let direct = arc_digraph(&g, ell, LIMIT).unwrap();
        let iterated = iterated_line_digraph(&g, ell, LIMIT).unwrap();
        prop_assert!(natural_iso(&direct, &iterated));
        prop_assert!(direct.check_invariants());
    }

    #[test]
    fn edge_lists_round_trip(g in multigraphs()) {
        let back = parse_edge_list(&to_edge_list(&g)).unwrap();
        prop_assert_eq!(back.order(), g.order());
        prop_assert_eq!(back.size(), g.size());
        prop_assert_eq!(to_edge_list(&back), to_edge_list(&g));
    }
}
