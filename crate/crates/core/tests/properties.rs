//! Randomized invariants over arbitrary small graphs.

use proptest::prelude::*;

use squarestable::classify::{classify, is_koenig_egervary, simplexes, simplicial_vertices};
use squarestable::generate::{canonical_form, corona};
use squarestable::matching::{
    berge_check, maximum_matching, pendant_perfect_matching, unique_perfect_matching,
};
use squarestable::solve::{invariant_chain, maximal_stable_sets, stability_number};
use squarestable::{Caps, Graph, Length};

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n)
        .prop_flat_map(|n| {
            let pairs = n * (n - 1) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), pairs))
        })
        .prop_map(|(n, bits)| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs
                .zip(bits)
                .filter(|&(_, b)| b)
                .map(|(e, _)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap()
        })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn encodings_round_trip(g in graph(20)) {
        prop_assert_eq!(Graph::parse_graph6(&g.to_graph6()).unwrap(), g.clone());
        prop_assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn complement_is_an_involution(g in graph(16)) {
        let c = g.complement();
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * (g.n() - 1) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn square_joins_vertices_at_distance_two(g in graph(14)) {
        let sq = g.square();
        let d = g.distance_matrix();
        for u in 0..g.n() {
            for v in 0..g.n() {
                let near = u != v && matches!(d.get(u, v), Length::Finite(k) if k <= 2);
                prop_assert_eq!(sq.has_edge(u, v), near);
            }
        }
    }

    #[test]
    fn invariant_chain_holds(g in graph(11)) {
        let r = invariant_chain(&g, &Caps::default()).unwrap();
        prop_assert!(r.chain_holds());
        prop_assert!(r.alpha + r.mu <= g.n());
        prop_assert!(2 * r.mu <= g.n());
    }

    #[test]
    fn invariants_ignore_labels((g, perm) in graph(10).prop_flat_map(|g| {
        let n = g.n();
        (Just(g), permutation(n))
    })) {
        let h = g.relabel(&perm);
        let caps = Caps::default();
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert_eq!(invariant_chain(&g, &caps).unwrap(), invariant_chain(&h, &caps).unwrap());
        let (a, b) = (classify(&g, &caps).unwrap(), classify(&h, &caps).unwrap());
        prop_assert_eq!(a.square_stable, b.square_stable);
        prop_assert_eq!(a.well_covered, b.well_covered);
        prop_assert_eq!(a.alpha_plus_class, b.alpha_plus_class);
    }

    #[test]
    fn berge_separates_maximum_from_maximal(g in graph(10)) {
        let caps = Caps::default();
        let alpha = stability_number(&g, &caps).unwrap().value;
        for s in maximal_stable_sets(&g, &caps).unwrap() {
            let outcome = berge_check(&g, s, &caps).unwrap();
            prop_assert_eq!(outcome.holds, s.len() == alpha);
            if let Some(a) = outcome.obstruction {
                prop_assert!(g.is_stable(a) && a.is_disjoint(s));
                prop_assert!(g.neighbors_of_set(a).intersection(s).len() < a.len());
            }
        }
    }

    #[test]
    fn pendant_perfect_matching_is_unique(g in graph(12)) {
        if let Some(m) = pendant_perfect_matching(&g) {
            prop_assert!(m.is_perfect_for(&g));
            prop_assert!(unique_perfect_matching(&g).is_unique());
        }
    }

    #[test]
    fn bipartite_graphs_are_koenig_egervary(g in graph(12)) {
        if g.is_bipartite() {
            prop_assert!(is_koenig_egervary(&g, &Caps::default()).unwrap());
        }
    }

    #[test]
    fn matching_size_bounded_by_vertex_cover(g in graph(14)) {
        let m = maximum_matching(&g);
        prop_assert!(m.is_valid_for(&g));
        let alpha = stability_number(&g, &Caps::default()).unwrap().value;
        prop_assert!(m.len() <= g.n() - alpha);
    }

    #[test]
    fn simplexes_are_closed_neighbourhoods(g in graph(12)) {
        let simplicial = simplicial_vertices(&g);
        let mut expect: Vec<_> = simplicial.iter().map(|v| g.closed_neighbors(v)).collect();
        expect.sort();
        expect.dedup();
        let got: Vec<_> = simplexes(&g).into_iter().map(|s| s.clique).collect();
        prop_assert_eq!(got, expect);
    }

    #[test]
    fn coronas_are_square_stable(g in graph(8)) {
        let h = corona(&g).unwrap();
        let caps = Caps::default();
        prop_assert!(pendant_perfect_matching(&h).is_some());
        let r = classify(&h, &caps).unwrap();
        prop_assert!(r.square_stable && r.well_covered && r.very_well_covered);
    }
}
