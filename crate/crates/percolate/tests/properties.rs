//! Property tests for the library invariants.

use proptest::prelude::*;

use percolate::analysis::{bipartiteness, connected_components, contains_odd_cycle};
use percolate::engine::{closure, closure_naive, propagates, trace};
use percolate::graph::Graph;
use percolate::io::{parse_edge_list, write_edge_list};
use percolate::product::{direct_product, pair_coords};
use percolate::solver::{forced_vertices, greedy_upper, min_percolating, SolveOutcome, SolverConfig};
use percolate::vertex_set::VertexSet;

fn decode_graph(n: usize, mask: &[bool], force_connected: bool) -> Graph {
    let mut edges = Vec::new();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask[i] {
                edges.push((u, v));
            }
            i += 1;
        }
    }
    if force_connected {
        for u in 1..n {
            if !edges.contains(&(u - 1, u)) {
                edges.push((u - 1, u));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("valid edges")
}

fn arb_graph(max_n: usize, force_connected: bool) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(move |n| {
        proptest::collection::vec(proptest::bool::weighted(0.35), n * (n - 1) / 2)
            .prop_map(move |mask| decode_graph(n, &mask, force_connected))
    })
}

fn arb_subset(g: &Graph) -> impl Strategy<Value = VertexSet> {
    let n = g.order();
    proptest::collection::vec(proptest::bool::weighted(0.3), n)
        .prop_map(move |bits| VertexSet::from_indices(n, (0..n).filter(|&i| bits[i])))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn closure_monotone_idempotent_and_engines_agree(
        (g, a, extra) in arb_graph(10, false).prop_flat_map(|g| {
            let a = arb_subset(&g);
            let b = arb_subset(&g);
            (Just(g), a, b)
        }),
        r in 1usize..=3,
    ) {
        let mut b = a.clone();
        b.union_with(&extra);
        let ca = closure(&g, r, &a).unwrap();
        let cb = closure(&g, r, &b).unwrap();
        prop_assert!(a.is_subset_of(&ca));
        prop_assert!(ca.is_subset_of(&cb));
        prop_assert_eq!(closure(&g, r, &ca).unwrap(), ca.clone());
        prop_assert_eq!(&ca, &closure_naive(&g, r, &a).unwrap());
    }

    #[test]
    fn trace_rounds_are_sound(
        (g, a) in arb_graph(9, false).prop_flat_map(|g| {
            let a = arb_subset(&g);
            (Just(g), a)
        }),
        r in 1usize..=3,
    ) {
        let tr = trace(&g, r, &a).unwrap();
        prop_assert_eq!(tr.fixpoint(), &closure(&g, r, &a).unwrap());
        prop_assert!(tr.t_max() <= g.order());
        for t in 1..=tr.t_max() {
            prop_assert!(tr.rounds[t - 1].len() < tr.rounds[t].len());
            for v in tr.newly_infected[t - 1].iter() {
                prop_assert!(g.neighbors(v).intersection_count(&tr.rounds[t - 1]) >= r);
            }
        }
    }

    #[test]
    fn product_identities(
        g in arb_graph(6, false),
        h in arb_graph(6, false),
    ) {
        let p = direct_product(&g, &h).unwrap();
        prop_assert_eq!(p.order(), g.order() * h.order());
        prop_assert_eq!(p.edge_count(), 2 * g.edge_count() * h.edge_count());
        for v in p.vertices() {
            let (gv, hv) = pair_coords(h.order(), v);
            prop_assert_eq!(p.degree(v), g.degree(gv) * h.degree(hv));
        }
    }

    #[test]
    fn product_connectivity_law(
        g in arb_graph(8, true),
        h in arb_graph(8, true),
    ) {
        prop_assume!(g.order() >= 2 && h.order() >= 2);
        let p = direct_product(&g, &h).unwrap();
        let connected = connected_components(&p).len() == 1;
        let both_bipartite =
            bipartiteness(&g).is_bipartite() && bipartiteness(&h).is_bipartite();
        prop_assert_eq!(connected, !both_bipartite);
    }

    #[test]
    fn odd_cycle_witness_is_valid(g in arb_graph(9, false)) {
        match contains_odd_cycle(&g) {
            None => prop_assert!(bipartiteness(&g).is_bipartite()),
            Some(cycle) => {
                prop_assert_eq!(cycle.len() % 2, 1);
                prop_assert!(cycle.len() >= 3);
                let mut sorted = cycle.clone();
                sorted.sort_unstable();
                sorted.dedup();
                prop_assert_eq!(sorted.len(), cycle.len());
                for i in 0..cycle.len() {
                    prop_assert!(g.has_edge(cycle[i], cycle[(i + 1) % cycle.len()]));
                }
            }
        }
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(12, false)) {
        let text = write_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(back.order(), g.order());
        for v in g.vertices() {
            prop_assert_eq!(back.neighbors(v), g.neighbors(v));
        }
    }
}

proptest! {
    // solver cases are heavier; keep the case count modest
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn solver_sandwich_and_witness(g in arb_graph(8, false), r in 1usize..=3) {
        let config = SolverConfig::default();
        let forced = forced_vertices(&g, r);
        let greedy = greedy_upper(&g, r).unwrap();
        prop_assert!(propagates(&g, r, &greedy).unwrap());
        match min_percolating(&g, r, &config).unwrap() {
            SolveOutcome::Exact(rep) => {
                prop_assert!(forced.len() <= rep.value);
                prop_assert!(rep.value <= greedy.len());
                prop_assert_eq!(rep.witness.len(), rep.value);
                prop_assert!(forced.is_subset_of(&rep.witness));
                prop_assert!(propagates(&g, r, &rep.witness).unwrap());
                prop_assert!(rep.value >= rep.lower_bound);
            }
            SolveOutcome::Inconclusive { .. } => prop_assert!(false, "budget too small"),
        }
    }

    #[test]
    fn component_additivity(
        g1 in arb_graph(6, false),
        g2 in arb_graph(6, false),
    ) {
        let config = SolverConfig::default();
        let (n1, n2) = (g1.order(), g2.order());
        let mut edges = g1.edges();
        edges.extend(g2.edges().into_iter().map(|(u, v)| (u + n1, v + n1)));
        let union = Graph::from_edges(n1 + n2, &edges).unwrap();
        let value = |g: &Graph| match min_percolating(g, 2, &config).unwrap() {
            SolveOutcome::Exact(rep) => rep.value,
            SolveOutcome::Inconclusive { .. } => unreachable!(),
        };
        prop_assert_eq!(value(&union), value(&g1) + value(&g2));
    }
}
