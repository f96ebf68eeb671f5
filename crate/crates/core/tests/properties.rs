mod common;

use common::*;
use phpairs::matching::{max_clique_co_bipartite, max_matching, BipartiteGraph};
use phpairs::oracles::Oracle;
use phpairs::reduce::{color_count, is_proper_coloring, is_stable_set, StepOutcome};
use phpairs::{
    eliminate_all, find_ph_embedding, find_ph_embedding_with_stats, is_homogeneous_pair, is_ph_pair, parse_dimacs,
    ph_reduce, trim_nth_to_ph, write_dimacs, CandidateSet, CliquePair, Eliminator, Graph, MaxClique, ReductionTrace,
    StableSet, Strategy as _, StrategyKind, VertexPair, VertexSet,
};
use proptest::prelude::*;
use proptest::sample::subsequence;

fn clique_and_vertex() -> impl Strategy<Value = (Graph, VertexSet, usize)> {
    graphs(2, 10)
        .prop_flat_map(|g| {
            let n = g.capacity();
            (Just(g), subsequence((0..n).collect::<Vec<_>>(), 0..=n), 0..n)
        })
        .prop_map(|(g, order, v)| {
            let avoid = set(g.capacity(), [v]);
            let k = greedy_clique(&g, &order, &avoid);
            (g, k, v)
        })
}

fn clique_pair() -> impl Strategy<Value = (Graph, VertexSet, VertexSet)> {
    graphs(2, 10)
        .prop_flat_map(|g| {
            let n = g.capacity();
            let ids: Vec<usize> = (0..n).collect();
            (Just(g), Just(ids.clone()).prop_shuffle(), Just(ids).prop_shuffle())
        })
        .prop_map(|(g, o1, o2)| {
            let none = VertexSet::new(g.capacity());
            let s1 = greedy_clique(&g, &o1, &none);
            let s2 = greedy_clique(&g, &o2, &s1);
            (g, s1, s2)
        })
}

/// A homogeneous pair of cliques with an induced C4 across, hidden in a
/// random graph.
fn nth_pair() -> impl Strategy<Value = (Graph, CliquePair)> {
    (2usize..=4, 2usize..=4, 0usize..=5, any::<u64>()).prop_filter_map("needs a C4 across", |(s1, s2, rest, seed)| {
        use rand::Rng;
        let mut r = phpairs::corpus::rng(seed);
        let n = s1 + s2 + rest;
        let mut g = Graph::new(n);
        let k1: Vec<usize> = (0..s1).collect();
        let k2: Vec<usize> = (s1..s1 + s2).collect();
        for side in [&k1, &k2] {
            for (i, &u) in side.iter().enumerate() {
                for &v in &side[i + 1..] {
                    g.add_edge(u, v);
                }
            }
        }
        for &u in &k1 {
            for &v in &k2 {
                if r.gen_bool(0.5) {
                    g.add_edge(u, v);
                }
            }
        }
        for x in s1 + s2..n {
            for side in [&k1, &k2] {
                if r.gen_bool(0.5) {
                    for &v in side.iter() {
                        g.add_edge(x, v);
                    }
                }
            }
            for y in x + 1..n {
                if r.gen_bool(0.5) {
                    g.add_edge(x, y);
                }
            }
        }
        let (a, b) = (set(n, k1.clone()), set(n, k2.clone()));
        has_c4_by_scan(&g, &a, &b).then(|| (g.clone(), CliquePair::from_ids(&g, &k1, &k2).unwrap()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2048))]

    #[test]
    fn proper_means_neither_complete_nor_anticomplete((g, k, v) in clique_and_vertex()) {
        let proper = g.is_proper_to(v, &k);
        prop_assert_eq!(proper, !g.is_complete_to(v, &k) && !g.is_anticomplete_to(v, &k));
        let neighbours = k.iter().filter(|&x| adj(&g, v, x)).count();
        prop_assert_eq!(proper, neighbours > 0 && neighbours < k.len());
    }

    #[test]
    fn proper_set_is_pointwise((g, k, _v) in clique_and_vertex()) {
        let p = g.proper_set(&k);
        for x in 0..g.capacity() {
            if !k.contains(x) {
                prop_assert_eq!(p.contains(x), g.is_proper_to(x, &k));
            } else {
                prop_assert!(!p.contains(x));
            }
        }
    }

    #[test]
    fn chain_criterion_matches_quadruple_scan((g, s1, s2) in clique_pair()) {
        prop_assert_eq!(g.pair_has_induced_c4(&s1, &s2), has_c4_by_scan(&g, &s1, &s2));
        prop_assert_eq!(g.pair_has_induced_c4(&s2, &s1), has_c4_by_scan(&g, &s2, &s1));
    }

    #[test]
    fn c4_free_iff_universality_is_total_on_either_side((g, s1, s2) in clique_pair()) {
        let within = s1.union(&s2);
        let total = |s: &VertexSet| {
            s.iter().all(|u| s.iter().all(|v| u == v
                || universal_within(&g, &within, u, v)
                || universal_within(&g, &within, v, u)))
        };
        let c4 = g.pair_has_induced_c4(&s1, &s2);
        prop_assert_eq!(!c4, total(&s1));
        prop_assert_eq!(total(&s1), total(&s2));
    }

    #[test]
    fn dimacs_round_trip(g in graphs(0, 12), seed in any::<u64>(), weighted_graph in any::<bool>()) {
        let g = if weighted_graph { weighted(g, seed) } else { g };
        let text = write_dimacs(&g);
        let back = parse_dimacs(&text).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(write_dimacs(&back), text);
    }

    #[test]
    fn search_ops_are_quadratic(g in graphs(2, 40)) {
        let n = g.capacity() as u64;
        for (u, v) in g.edges() {
            let (_, stats) = find_ph_embedding_with_stats(&g, u, v).unwrap();
            prop_assert!(stats.ops <= 3 * n * n, "ops {} for n {}", stats.ops, n);
        }
    }

    #[test]
    fn perfection_is_self_complementary(g in graphs(1, 9)) {
        let o = Oracle::default();
        prop_assert_eq!(o.is_perfect(&g).unwrap(), o.is_perfect(&g.complement()).unwrap());
    }

    #[test]
    fn matching_is_maximum(left in 1usize..=6, right in 1usize..=6, bits in proptest::collection::vec(any::<bool>(), 36)) {
        let edges: Vec<(usize, usize)> = (0..left)
            .flat_map(|l| (0..right).map(move |r| (l, r)))
            .filter(|&(l, r)| bits[l * 6 + r])
            .collect();
        let b = BipartiteGraph::new(left, right, &edges);
        let m = max_matching(&b);
        let mut ls: Vec<usize> = m.iter().map(|e| e.0).collect();
        let mut rs: Vec<usize> = m.iter().map(|e| e.1).collect();
        ls.sort_unstable();
        ls.dedup();
        rs.sort_unstable();
        rs.dedup();
        prop_assert_eq!(ls.len(), m.len());
        prop_assert_eq!(rs.len(), m.len());
        prop_assert!(m.iter().all(|e| edges.contains(e)));
        prop_assert_eq!(m.len(), brute_matching(left, &edges));
    }

    #[test]
    fn co_bipartite_clique_is_maximum((g, s1, s2) in clique_pair()) {
        prop_assume!(!s1.is_empty() && !s2.is_empty());
        let x = max_clique_co_bipartite(&g, &s1, &s2).unwrap();
        let union = s1.union(&s2);
        prop_assert!(x.is_subset(&union));
        prop_assert!(g.is_clique(&x));
        let omega = Oracle::default().clique(&induced(&g, &union)).unwrap();
        prop_assert_eq!(x.len(), omega);
    }

    #[test]
    fn trimming_an_nth_pair_gives_a_ph_pair((g, p) in nth_pair()) {
        prop_assert!(is_homogeneous_pair(&g, &p));
        let t = trim_nth_to_ph(&g, &p);
        prop_assert!(t.is_some());
        let t = t.unwrap();
        prop_assert!(is_ph_pair(&g, &t));
        prop_assert!(t.k1().is_subset(p.k1()) && t.k2().is_subset(p.k2()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1024))]

    #[test]
    fn detection_agrees_with_brute_force(g in graphs(2, 8)) {
        let o = Oracle::default();
        let seeds = o.ph_seed_pairs(&g).unwrap();
        let pairs = o.ph_pairs(&g).unwrap();
        for u in 0..g.capacity() {
            for v in u + 1..g.capacity() {
                let found = find_ph_embedding(&g, u, v).unwrap();
                prop_assert_eq!(found.is_some(), seeds.contains(&VertexPair::new(u, v)), "seed {} {}", u, v);
                if let Some(e) = found {
                    let p = &e.pair;
                    prop_assert!(is_ph_pair(&g, p));
                    prop_assert!(p.k1().contains(u) && p.k1().contains(v));
                    let canon = |q: &CliquePair| {
                        let (a, b) = (q.k1().to_vec(), q.k2().to_vec());
                        if a < b { (a, b) } else { (b, a) }
                    };
                    prop_assert!(pairs.iter().any(|q| canon(q) == canon(p)));
                }
            }
        }
    }

    #[test]
    fn ph_pairs_have_c4_and_non_universal_partners(g in graphs(4, 8)) {
        for p in Oracle::default().ph_pairs(&g).unwrap() {
            prop_assert!(has_c4_by_scan(&g, p.k1(), p.k2()));
            prop_assert!(g.pair_has_induced_c4(p.k1(), p.k2()));
            for k in [p.k1(), p.k2()] {
                for x in k.iter() {
                    prop_assert!(k.iter().any(|y| y != x && !g.is_universal(x, y)));
                    prop_assert!(k.iter().any(|y| y != x && !g.is_universal(y, x)));
                }
            }
        }
    }

    #[test]
    fn ph_and_c4_free_pairs_meet_on_matching_sides(g in graphs(4, 8)) {
        let o = Oracle::default();
        let ph = o.ph_pairs(&g).unwrap();
        let free = o.c4_free_homogeneous_pairs(&g).unwrap();
        for k in &ph {
            for a in &free {
                let straight = k.k1().is_disjoint(a.k2()) && k.k2().is_disjoint(a.k1());
                let crossed = k.k1().is_disjoint(a.k1()) && k.k2().is_disjoint(a.k2());
                prop_assert!(straight || crossed);
            }
        }
    }

    #[test]
    fn reduction_leaves_a_c4_free_homogeneous_gadget(g in graphs(4, 9), which in 0usize..3) {
        let strategy = StrategyKind::ALL[which];
        let Some(p) = Oracle::default().ph_pairs(&g).unwrap().into_iter().next() else {
            return Ok(());
        };
        let view = phpairs::reduce::PairView::new(&g, &p);
        let (gadget, _) = strategy.build(&view).unwrap();
        let (h, placement) = ph_reduce(&g, &p, &gadget).unwrap();
        prop_assert!(h.order() <= g.order());
        let a1 = set(h.capacity(), placement.a1.iter().copied());
        let a2 = set(h.capacity(), placement.a2.iter().copied());
        prop_assert!(h.is_clique(&a1) && h.is_clique(&a2));
        prop_assert!(!has_c4_by_scan(&h, &a1, &a2));
        let gp = CliquePair::new(&h, a1.clone(), a2.clone()).unwrap();
        prop_assert!(is_homogeneous_pair(&h, &gp));
        for a in [&a1, &a2] {
            for u in a.iter() {
                for v in a.iter() {
                    prop_assert!(u == v || h.is_universal(u, v) || h.is_universal(v, u));
                }
            }
        }
    }

    #[test]
    fn elimination_terminates_within_edge_budget(g in graphs(2, 12), which in 0usize..3) {
        let strategy = StrategyKind::ALL[which];
        let mut e = Eliminator::new(&g, &strategy);
        let mut last = e.candidates().len();
        let mut edges = g.edge_count();
        let mut restored = 0;
        loop {
            match e.step().unwrap() {
                StepOutcome::Finished => break,
                outcome => {
                    // Either S shrinks, or a reduction that put pairs back removed edges.
                    let shrank = e.candidates().len() < last;
                    let put_back = e.stats().restored > restored;
                    let cut = matches!(outcome, StepOutcome::Reduced(_)) && e.graph().edge_count() < edges;
                    prop_assert!(shrank || (put_back && cut));
                    prop_assert!(!put_back || strategy != StrategyKind::StableSet);
                    last = e.candidates().len();
                    edges = e.graph().edge_count();
                    restored = e.stats().restored;
                }
            }
        }
        prop_assert!(e.steps().len() <= g.edge_count());
        prop_assert!(phpairs::find_any_ph_pair(e.graph()).unwrap().is_none());
    }

    #[test]
    fn candidate_set_covers_ph_pairs_after_each_step(g in graphs(4, 8), which in 0usize..3) {
        let strategy = StrategyKind::ALL[which];
        let o = Oracle::default();
        let mut e = Eliminator::new(&g, &strategy);
        while let StepOutcome::Reduced(_) | StepOutcome::Discarded(_) = e.step().unwrap() {
            let s: &CandidateSet = e.candidates();
            for p in o.ph_seed_pairs(e.graph()).unwrap() {
                prop_assert!(s.contains(p), "{:?} missing", p);
            }
        }
    }

    #[test]
    fn max_clique_preserves_chi_and_omega_stepwise(g in graphs(4, 9)) {
        let o = Oracle::default();
        let (_, trace) = eliminate_all(&g, &MaxClique).unwrap();
        let gs = trace.graphs().unwrap();
        for w in gs.windows(2) {
            prop_assert_eq!(o.chromatic(&w[0]).unwrap(), o.chromatic(&w[1]).unwrap());
            prop_assert_eq!(o.clique(&w[0]).unwrap(), o.clique(&w[1]).unwrap());
            // identity labels: only edges are removed, so cliques of the next graph are cliques here
            prop_assert!(w[1].edges().all(|(u, v)| w[0].has_edge(u, v)));
        }
        let gq = trace.final_graph();
        let coloring = o.coloring(gq).unwrap();
        let lifted = phpairs::lift_coloring(&trace, &coloring).unwrap();
        prop_assert!(is_proper_coloring(&g, &lifted));
        prop_assert_eq!(color_count(&g, &lifted), color_count(gq, &coloring));
    }

    #[test]
    fn any_proper_coloring_lifts_with_the_same_palette(g in graphs(4, 10), seed in any::<u64>()) {
        use rand::seq::SliceRandom;
        let (gq, trace) = eliminate_all(&g, &MaxClique).unwrap();
        // greedy colouring in a random order
        let mut order = gq.vertices().collect::<Vec<_>>();
        order.shuffle(&mut phpairs::corpus::rng(seed));
        let mut c = vec![usize::MAX; g.capacity()];
        for &v in &order {
            let used: Vec<usize> = gq.neighborhood(v).iter().map(|u| c[u]).collect();
            c[v] = (0..).find(|k| !used.contains(k)).unwrap();
        }
        let c: Vec<usize> = c.into_iter().map(|x| if x == usize::MAX { 0 } else { x }).collect();
        let lifted = phpairs::lift_coloring(&trace, &c).unwrap();
        prop_assert!(is_proper_coloring(&g, &lifted));
        prop_assert_eq!(color_count(&g, &lifted), color_count(&gq, &c));
    }

    #[test]
    fn stable_set_strategy_preserves_weight_stepwise(g in graphs(4, 9), seed in any::<u64>()) {
        let g = weighted(g, seed);
        let o = Oracle::default();
        let (gq, trace) = eliminate_all(&g, &StableSet).unwrap();
        let gs = trace.graphs().unwrap();
        for w in gs.windows(2) {
            prop_assert_eq!(o.mwss(&w[0]).unwrap().1, o.mwss(&w[1]).unwrap().1);
        }
        let (set, weight) = o.mwss(&gq).unwrap();
        let lifted = phpairs::lift_stable_set(&trace, &set).unwrap();
        prop_assert!(is_stable_set(&g, &lifted));
        prop_assert_eq!(g.weight_of(&lifted), weight);
    }

    #[test]
    fn trace_json_round_trip(g in graphs(2, 10), seed in any::<u64>(), which in 0usize..3) {
        let g = weighted(g, seed);
        let (_, trace) = eliminate_all(&g, &StrategyKind::ALL[which]).unwrap();
        let text = trace.to_json();
        let back = ReductionTrace::from_json(&text).unwrap();
        prop_assert_eq!(&back, &trace);
        prop_assert_eq!(back.to_json(), text);
    }
}
