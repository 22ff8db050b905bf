mod common;

use cyclecreate::clique::{max_clique, max_independent_set, BitGraph};
use cyclecreate::search::{
    build_compatibility_graph, enumerate_ham_paths, enumerate_perfect_matchings, enumerate_permutations, exact_h,
    exact_m, exact_rp, is_reversing, perm_to_matching, theorem1_value, EnumLimits, Relation,
};
use cyclecreate::{is_creating, AsGraph, Permutation};
use num_bigint::BigUint;
use proptest::prelude::*;

fn bitgraph(n: usize, mask: &[bool]) -> BitGraph {
    let mut g = BitGraph::new(n);
    let mut it = mask.iter();
    for u in 0..n {
        for v in u + 1..n {
            if *it.next().unwrap() {
                g.add_edge(u, v);
            }
        }
    }
    g
}

fn bitgraph_strategy(max_n: usize) -> impl Strategy<Value = BitGraph> {
    (1..=max_n).prop_flat_map(|n| {
        (0.05f64..0.95).prop_flat_map(move |p| {
            proptest::collection::vec(proptest::bool::weighted(p), n * (n - 1) / 2).prop_map(move |m| bitgraph(n, &m))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn clique_matches_subset_oracle(g in bitgraph_strategy(16)) {
        let oracle = common::brute_force_clique(g.n(), &|a, b| g.adjacent(a, b));
        prop_assert_eq!(max_clique(&g), oracle);
    }

    #[test]
    fn independent_set_matches_subset_oracle(g in bitgraph_strategy(16)) {
        let oracle = common::brute_force_clique(g.n(), &|a, b| !g.adjacent(a, b));
        prop_assert_eq!(max_independent_set(&g), oracle);
    }
}

#[test]
fn clique_on_twenty_vertices() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(20);
    for p in [0.3, 0.5, 0.8] {
        let mask: Vec<bool> = (0..190).map(|_| rng.gen_bool(p)).collect();
        let g = bitgraph(20, &mask);
        let oracle = common::brute_force_clique(20, &|a, b| g.adjacent(a, b));
        assert_eq!(max_clique(&g), oracle);
    }
}

#[test]
fn enumerators_count_and_order() {
    assert_eq!(enumerate_ham_paths(6).unwrap().len(), 360);
    let ms = enumerate_perfect_matchings(8).unwrap();
    assert_eq!(ms, common::all_matchings(8));
    let ps = enumerate_permutations(4).unwrap();
    assert_eq!(ps.len(), 24);
    assert!(ps.windows(2).all(|w| w[0].images() < w[1].images()));
}

#[test]
fn theorem_values_small_n() {
    for (n, want) in [(4, 3u32), (5, 10), (6, 10)] {
        assert_eq!(theorem1_value(n).unwrap(), BigUint::from(want));
        let got = exact_h(n, 3, EnumLimits::default()).unwrap();
        assert_eq!(got.size, want as usize, "n={n}");
    }
}

#[test]
fn path_search_matches_oracle_n5() {
    let paths = enumerate_ham_paths(5).unwrap();
    for len in [3, 4, 5] {
        // 60 vertices is too many for subsets; the oracle checks the witness
        // and that no single path extends it
        let opt = exact_h(5, len, EnumLimits::default()).unwrap();
        let members: Vec<_> = opt.witness.iter().map(|&i| paths[i].clone()).collect();
        for (i, a) in members.iter().enumerate() {
            for b in &members[i + 1..] {
                let u = a.to_graph().union(&b.to_graph()).unwrap();
                assert!(common::naive_has_cycle(&u, len));
            }
        }
        let extendable = paths.iter().any(|p| {
            !members.contains(p)
                && members.iter().all(|m| common::naive_has_cycle(&m.to_graph().union(&p.to_graph()).unwrap(), len))
        });
        assert!(!extendable);
    }
}

#[test]
fn matching_search_matches_subset_oracle() {
    let all = common::all_matchings(6);
    let related = |a: usize, b: usize| {
        let u = all[a].to_graph().union(&all[b].to_graph()).unwrap();
        common::naive_has_cycle(&u, 4)
    };
    let (size, witness) = common::brute_force_clique(all.len(), &related);
    assert_eq!(size, 3);
    let got = exact_m(6, 2, EnumLimits::default()).unwrap();
    assert_eq!((got.size, got.witness), (size, witness));
    assert_eq!(exact_m(4, 2, EnumLimits::default()).unwrap().size, 3);
}

#[test]
fn vertex_transitive_product_bound() {
    for (n, len) in [(4, 4), (6, 4), (6, 6), (8, 4), (8, 6)] {
        let g = build_compatibility_graph(enumerate_perfect_matchings(n).unwrap(), Relation::Creating(len)).unwrap();
        let w = g.max_clique().unwrap().size;
        let a = g.max_independent_set().unwrap().size;
        assert!(a * w <= g.len(), "n={n} len={len}: {a}*{w} > {}", g.len());
    }
    let g = build_compatibility_graph(enumerate_perfect_matchings(6).unwrap(), Relation::Creating(4)).unwrap();
    let oracle = common::brute_force_clique(15, &|a, b| !g.adjacency.adjacent(a, b));
    assert_eq!(g.max_independent_set().unwrap().size, oracle.0);
    assert_eq!(oracle.0, 5);
}

#[test]
fn reversing_equals_creating_on_images() {
    for m in [2, 3, 4] {
        let perms = enumerate_permutations(m).unwrap();
        for a in &perms {
            for b in &perms {
                let direct = oracle_reversing(a, b);
                assert_eq!(is_reversing(a, b).unwrap(), direct);
                assert_eq!(is_creating(&perm_to_matching(a), &perm_to_matching(b), 4).unwrap(), direct);
            }
        }
    }
}

/// Some two positions carry the same unordered pair of values in opposite
/// orders, checked through the inverse maps.
fn oracle_reversing(a: &Permutation, b: &Permutation) -> bool {
    let m = a.m();
    let pos = |p: &Permutation, v: usize| (1..=m).find(|&i| p.image(i) == v).unwrap();
    (1..=m).any(|x| (x + 1..=m).any(|y| pos(a, x) == pos(b, y) && pos(a, y) == pos(b, x)))
}

#[test]
fn reversing_clique_matches_oracle() {
    for m in [2, 3] {
        let perms = enumerate_permutations(m).unwrap();
        let oracle = common::brute_force_clique(perms.len(), &|i, j| oracle_reversing(&perms[i], &perms[j]));
        let got = exact_rp(m, EnumLimits::default()).unwrap();
        assert_eq!((got.size, got.witness), oracle, "m={m}");
    }
    assert_eq!(exact_rp(3, EnumLimits::default()).unwrap().size, 2);
}

#[test]
fn limits_are_enforced() {
    let tight = EnumLimits { max_objects: 100 };
    assert!(exact_h(6, 3, tight).is_err());
    assert!(exact_h(5, 3, tight).is_ok());
    assert!(enumerate_ham_paths(9).is_err());
}
