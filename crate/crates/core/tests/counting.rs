mod common;

use cyclecreate::constructions::projective_plane_incidence;
use cyclecreate::counting::{
    build_noncreating_family, count_perfect_matchings, enumerate_bipartite_matchings, lemma6_check, pad_family,
    permanent_naive, permanent_ryser, vdw_bound,
};
use cyclecreate::search::{build_compatibility_graph, Relation};
use cyclecreate::{verify_pairwise_creating, BigExponent, FloatMatrix, IntMatrix, RationalMatrix};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn to_int(rows: &[Vec<i64>]) -> IntMatrix {
    IntMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()).unwrap()
}

fn matrix_strategy(max_m: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_m).prop_flat_map(|m| proptest::collection::vec(proptest::collection::vec(-3i64..=3, m), m))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn ryser_matches_permutation_sum(rows in matrix_strategy(7)) {
        let want = BigInt::from(common::permanent_oracle(&rows));
        let a = to_int(&rows);
        prop_assert_eq!(permanent_ryser(&a), want.clone());
        prop_assert_eq!(permanent_naive(&a).unwrap(), want);
    }

    #[test]
    fn permanent_invariant_under_transpose(rows in matrix_strategy(6)) {
        let m = rows.len();
        let t: Vec<Vec<i64>> = (0..m).map(|j| (0..m).map(|i| rows[i][j]).collect()).collect();
        prop_assert_eq!(permanent_ryser(&to_int(&rows)), permanent_ryser(&to_int(&t)));
    }

    #[test]
    fn machine_and_big_integers_agree(rows in matrix_strategy(6)) {
        let small = cyclecreate::counting::BiadjacencyMatrix::<i64>::from_rows(rows.clone()).unwrap();
        prop_assert_eq!(BigInt::from(permanent_ryser(&small)), permanent_ryser(&to_int(&rows)));
    }
}

#[test]
fn all_small_zero_one_matrices() {
    for m in 1..=4 {
        for mask in 0u32..(1 << (m * m)) {
            let rows: Vec<Vec<i64>> = (0..m).map(|i| (0..m).map(|j| i64::from(mask >> (i * m + j) & 1)).collect()).collect();
            let a = to_int(&rows);
            assert_eq!(permanent_ryser(&a), permanent_naive(&a).unwrap());
            assert_eq!(permanent_ryser(&a), BigInt::from(common::permanent_oracle(&rows)));
        }
    }
}

#[test]
fn uniform_matrix_meets_minimum() {
    for m in 1..=7 {
        let j = RationalMatrix::filled(m, BigRational::new(1.into(), BigInt::from(m)));
        assert!(j.is_doubly_stochastic());
        let per: BigExponent = permanent_ryser(&j);
        assert_eq!(per, vdw_bound(m), "m={m}");
        let f = FloatMatrix::filled(m, 1.0 / m as f64);
        let approx = permanent_ryser(&f);
        let exact = vdw_bound(m);
        let exact_f = exact.numer().to_string().parse::<f64>().unwrap() / exact.denom().to_string().parse::<f64>().unwrap();
        assert!((approx - exact_f).abs() < 1e-12);
    }
}

#[test]
fn matching_count_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for m in 1..=8 {
        for p in [0.3, 0.6, 0.9] {
            let g = common::random_bipartite(&mut rng, m, p);
            if g.bipartition().is_none() || !balanced(&g) {
                continue;
            }
            let want = common::count_matchings_oracle(&g);
            assert_eq!(count_perfect_matchings(&g).unwrap(), BigInt::from(want));
            assert_eq!(enumerate_bipartite_matchings(&g).unwrap().len() as u64, want);
        }
    }
}

fn balanced(g: &cyclecreate::LabeledGraph) -> bool {
    let c = g.bipartition().unwrap();
    c.iter().filter(|&&x| x == 0).count() * 2 == g.n()
}

#[test]
fn fano_incidence_matchings() {
    let p = projective_plane_incidence(2).unwrap();
    let count = count_perfect_matchings(&p.graph).unwrap();
    assert_eq!(count, BigInt::from(common::count_matchings_oracle(&p.graph)));
    assert_eq!(count, BigInt::from(24));
    let r = lemma6_check(&p.graph).unwrap();
    assert!(r.holds());
    assert_eq!(r.integer_bound(), BigInt::from(14));
    assert_eq!(r.scaled_permanent * BigRational::from_integer(BigInt::from(3i32.pow(7))), BigRational::from_integer(count));
}

#[test]
fn plane_counts_match_oracle() {
    let p = projective_plane_incidence(3).unwrap();
    let want = common::count_matchings_oracle(&p.graph);
    assert_eq!(count_perfect_matchings(&p.graph).unwrap(), BigInt::from(want));
    assert!(lemma6_check(&p.graph).unwrap().holds());
}

#[test]
fn noncreating_family_is_independent() {
    let p = projective_plane_incidence(2).unwrap();
    let fam = build_noncreating_family(&p.graph, 2).unwrap();
    assert_eq!(fam.len(), 24);
    let report = verify_pairwise_creating(&fam, 4).unwrap();
    assert!(report.none_creating());
    let g = build_compatibility_graph(fam.clone(), Relation::Creating(4)).unwrap();
    let all: Vec<usize> = (0..g.len()).collect();
    assert!(g.is_independent(&all));
    assert_eq!(g.edge_count(), 0);

    let padded = pad_family(&fam, 4).unwrap();
    assert!(verify_pairwise_creating(&padded, 4).unwrap().none_creating());
    assert!(padded.iter().all(|m| m.n() == 18 && m.partner(15) == 16));
}

#[test]
fn noncreating_family_needs_large_girth() {
    let p = projective_plane_incidence(2).unwrap();
    assert!(build_noncreating_family(&p.graph, 3).is_err());
}
