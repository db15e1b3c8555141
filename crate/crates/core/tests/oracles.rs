//! Library routines against the brute-force oracles.
#![allow(clippy::needless_range_loop)]

mod oracle;

use squarestable::classify::{
    is_koenig_egervary, is_square_stable, is_well_covered, property_p1, property_p2,
    simplex_partition_check, simplexes,
};
use squarestable::generate::{enumerate_corpus, enumerate_trees, sample_corpus, SampleSpec};
use squarestable::matching::{maximum_matching, pendant_perfect_matching, unique_perfect_matching};
use squarestable::solve::{
    clique_cover_number, domination_number, independent_domination_number, maximal_stable_sets,
    maximum_stable_sets, stability_number,
};
use squarestable::{Caps, Graph, Length, PerfectMatchingCount, VertexSet};

fn caps() -> Caps {
    Caps::default()
}

fn lists(sets: &[VertexSet]) -> Vec<Vec<usize>> {
    let mut v: Vec<_> = sets.iter().map(|s| s.to_vec()).collect();
    v.sort();
    v
}

fn small_corpus() -> Vec<Graph> {
    enumerate_corpus(6, false).unwrap()
}

fn sample(count: usize, max_n: usize, seed: u64) -> Vec<Graph> {
    sample_corpus(SampleSpec {
        count,
        min_n: 1,
        max_n,
        seed,
    })
    .unwrap()
}

#[test]
fn solvers_match_subset_scan() {
    let c = caps();
    for g in small_corpus().iter().chain(&sample(300, 10, 3)) {
        let a = stability_number(g, &c).unwrap();
        assert_eq!(a.value, oracle::alpha(g), "alpha {g:?}");
        assert!(g.is_stable(a.witness) && a.witness.len() == a.value);
        let gm = domination_number(g, &c).unwrap();
        assert_eq!(gm.value, oracle::gamma(g), "gamma {g:?}");
        assert!(g.is_dominating(gm.witness));
        let i = independent_domination_number(g, &c).unwrap();
        assert_eq!(i.value, oracle::idom(g), "idom {g:?}");
        assert!(g.is_dominating(i.witness) && g.is_stable(i.witness));
        let cover = clique_cover_number(g, &c).unwrap();
        assert_eq!(cover.len(), oracle::theta(g), "theta {g:?}");
        let m = maximum_matching(g);
        assert_eq!(m.len(), oracle::mu(g), "mu {g:?}");
        assert!(m.is_valid_for(g));
    }
}

#[test]
fn alpha_witness_is_lexicographically_smallest() {
    let c = caps();
    for g in small_corpus() {
        let w = stability_number(&g, &c).unwrap().witness.to_vec();
        assert_eq!(w, oracle::omega(&g)[0], "{g:?}");
    }
}

#[test]
fn stable_set_families_match() {
    let c = caps();
    for g in small_corpus().iter().chain(&sample(100, 10, 5)) {
        let om = maximum_stable_sets(g, &c).unwrap();
        assert_eq!(lists(&om.sets), oracle::omega(g), "{g:?}");
        let core = oracle::omega(g)
            .iter()
            .map(|s| oracle::mask(s))
            .fold(oracle::full(g.n()), |a, b| a & b);
        assert_eq!(om.core.bits(), if om.is_empty() { 0 } else { core });
        let maximal = maximal_stable_sets(g, &c).unwrap();
        assert_eq!(lists(&maximal), oracle::maximal_stable(g), "{g:?}");
    }
}

#[test]
fn perfect_matching_counts_match() {
    for g in small_corpus().iter().chain(&sample(200, 10, 9)) {
        let pms = oracle::perfect_matchings(g);
        match unique_perfect_matching(g) {
            PerfectMatchingCount::None => assert!(pms.is_empty(), "{g:?}"),
            PerfectMatchingCount::Unique(m) => {
                assert_eq!(pms.len(), 1, "{g:?}");
                assert!(m.is_perfect_for(g));
            }
            PerfectMatchingCount::Multiple => assert!(pms.len() >= 2, "{g:?}"),
        }
        assert_eq!(
            pendant_perfect_matching(g).is_some(),
            oracle::has_pendant_pm(g),
            "{g:?}"
        );
    }
}

#[test]
fn distances_square_girth_chordality_match() {
    for g in small_corpus().iter().chain(&sample(100, 9, 13)) {
        let d = oracle::distances(g);
        let dm = g.distance_matrix();
        for u in 0..g.n() {
            for v in 0..g.n() {
                let expect = if d[u][v] >= oracle::INF {
                    Length::Infinite
                } else {
                    Length::Finite(d[u][v])
                };
                assert_eq!(dm.get(u, v), expect);
            }
        }
        let sq: Vec<_> = g.square().edges().collect();
        assert_eq!(sq, oracle::square_edges(g), "{g:?}");
        let girth = match g.girth() {
            Length::Finite(k) => Some(k),
            Length::Infinite => None,
        };
        assert_eq!(girth, oracle::girth(g), "{g:?}");
        assert_eq!(g.is_chordal(), oracle::is_chordal(g), "{g:?}");
        assert_eq!(g.is_connected(), oracle::is_connected(g), "{g:?}");
    }
}

#[test]
fn class_predicates_match() {
    let c = caps();
    for g in small_corpus().iter().chain(&sample(100, 9, 17)) {
        assert_eq!(
            is_well_covered(g, &c).unwrap().holds,
            oracle::is_well_covered(g),
            "{g:?}"
        );
        assert_eq!(
            is_koenig_egervary(g, &c).unwrap(),
            oracle::alpha(g) + oracle::mu(g) == g.n()
        );
        assert_eq!(
            is_square_stable(g, &c).unwrap().holds,
            oracle::alpha(g) == oracle::alpha(&oracle::square(g))
        );
        let mut ours: Vec<u64> = simplexes(g).iter().map(|s| s.clique.bits()).collect();
        ours.sort();
        assert_eq!(ours, oracle::simplexes(g), "{g:?}");
        assert_eq!(
            simplex_partition_check(g),
            oracle::every_vertex_in_one_simplex(g)
        );
    }
}

#[test]
fn exchange_properties_match_definitions() {
    let c = caps();
    for g in enumerate_corpus(6, true).unwrap() {
        for s in oracle::omega(&g) {
            let set: VertexSet = s.iter().copied().collect();
            let m = oracle::mask(&s);
            assert_eq!(
                property_p1(&g, set, &c).unwrap(),
                oracle::p1(&g, m),
                "P1 {g:?} {s:?}"
            );
            assert_eq!(
                property_p2(&g, set, &c).unwrap(),
                oracle::p2(&g, m),
                "P2 {g:?} {s:?}"
            );
        }
    }
}

#[test]
fn theorem_statements_match_brute_force() {
    let c = caps();
    for g in enumerate_corpus(6, true).unwrap() {
        let report = squarestable::verify::verify_equivalences(&g, "g", &c).unwrap();
        let ours: Vec<bool> = report.statements.iter().map(|s| s.unwrap()).collect();
        assert_eq!(ours, oracle::theorem_statements(&g).to_vec(), "{g:?}");
    }
}

#[test]
fn enumeration_counts_match_naive_scan() {
    for n in 1..=5 {
        for connected in [false, true] {
            let ours = enumerate_corpus(n, connected)
                .unwrap()
                .iter()
                .filter(|g| g.n() == n)
                .count();
            assert_eq!(
                ours,
                oracle::count_graphs_naive(n, connected),
                "n={n} connected={connected}"
            );
        }
    }
}

#[test]
fn enumeration_counts_match_known_sequences() {
    let corpus = enumerate_corpus(8, true).unwrap();
    let counts: Vec<usize> = (1..=8)
        .map(|n| corpus.iter().filter(|g| g.n() == n).count())
        .collect();
    assert_eq!(counts, [1, 1, 2, 6, 21, 112, 853, 11117]);
    let all = enumerate_corpus(7, false).unwrap();
    let counts: Vec<usize> = (1..=7)
        .map(|n| all.iter().filter(|g| g.n() == n).count())
        .collect();
    assert_eq!(counts, [1, 2, 4, 11, 34, 156, 1044]);
    let trees = enumerate_trees(12).unwrap();
    let counts: Vec<usize> = (1..=12)
        .map(|n| trees.iter().filter(|g| g.n() == n).count())
        .collect();
    assert_eq!(counts, [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551]);
    assert!(trees.iter().all(|t| t.is_tree()));
}
