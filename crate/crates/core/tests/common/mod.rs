//! Brute-force reference implementations shared by the integration tests.
//! None of these call into the code paths they are used to check.

#![allow(dead_code)]

use std::collections::BTreeSet;

use cyclecreate::{HamPath, LabeledGraph, PerfectMatching};
use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;

/// Adjacency matrix from the edge list only.
pub fn adjacency(g: &LabeledGraph) -> Vec<Vec<bool>> {
    let mut a = vec![vec![false; g.n() + 1]; g.n() + 1];
    for (u, v) in g.edges() {
        a[u][v] = true;
        a[v][u] = true;
    }
    a
}

/// Tries every `len`-subset of vertices and every cyclic order of it.
pub fn naive_has_cycle(g: &LabeledGraph, len: usize) -> bool {
    if len < 3 || len > g.n() {
        return false;
    }
    let a = adjacency(g);
    (1..=g.n()).combinations(len).any(|set| {
        let first = set[0];
        set[1..].iter().copied().permutations(len - 1).any(|rest| {
            let mut cyc = vec![first];
            cyc.extend(rest);
            (0..len).all(|i| a[cyc[i]][cyc[(i + 1) % len]])
        })
    })
}

/// Shortest cycle by trying lengths 3, 4, ... with the naive check.
pub fn naive_girth(g: &LabeledGraph) -> Option<usize> {
    (3..=g.n()).find(|&l| naive_has_cycle(g, l))
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> LabeledGraph {
    let edges = (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect::<Vec<_>>();
    LabeledGraph::from_edges(n, edges).unwrap()
}

pub fn random_path<R: Rng>(rng: &mut R, n: usize) -> HamPath {
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    HamPath::new(order).unwrap()
}

pub fn random_matching<R: Rng>(rng: &mut R, n: usize) -> PerfectMatching {
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    PerfectMatching::new(n, order.chunks(2).map(|c| (c[0], c[1]))).unwrap()
}

/// All perfect matchings of `K_n` from set partitions, independent of the
/// library enumerator.
pub fn all_matchings(n: usize) -> Vec<PerfectMatching> {
    let mut out = BTreeSet::new();
    for perm in (1..=n).permutations(n) {
        if let Ok(m) = PerfectMatching::new(n, perm.chunks(2).map(|c| (c[0], c[1]))) {
            out.insert(m);
        }
    }
    out.into_iter().collect()
}

/// Largest clique of the relation by walking every subset (bitmask order).
/// Returns the size and the lexicographically least sorted optimum.
pub fn brute_force_clique(n: usize, related: &dyn Fn(usize, usize) -> bool) -> (usize, Vec<usize>) {
    assert!(n <= 22, "subset oracle is exponential");
    let mut best: (usize, Vec<usize>) = (0, Vec::new());
    for mask in 0u32..(1u32 << n) {
        let set: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
        if set.len() < best.0 {
            continue;
        }
        if !set.iter().tuple_combinations().all(|(&a, &b)| related(a, b)) {
            continue;
        }
        if set.len() > best.0 || set < best.1 {
            best = (set.len(), set);
        }
    }
    best
}

/// Greedy pairwise-creating family: shuffle the pool and keep every object
/// that is creating with all objects kept so far.
pub fn greedy_family<T: Clone, R: Rng>(
    rng: &mut R,
    pool: &[T],
    related: &dyn Fn(&T, &T) -> bool,
) -> Vec<T> {
    let mut pool = pool.to_vec();
    pool.shuffle(rng);
    let mut fam: Vec<T> = Vec::new();
    for x in pool {
        if fam.iter().all(|y| related(&x, y)) {
            fam.push(x);
        }
    }
    fam
}

/// Distinct triple structures reachable from every ordering of `1..=n`:
/// blocks of `k` consecutive entries, block `b` goes to class `b mod 3`,
/// each class is a set of directed blocks.
pub fn enumerate_triple_structures(n: usize, k: usize) -> usize {
    let mut seen: BTreeSet<[BTreeSet<Vec<usize>>; 3]> = BTreeSet::new();
    for perm in (1..=n).permutations(n) {
        let mut classes: [BTreeSet<Vec<usize>>; 3] = Default::default();
        for (b, block) in perm.chunks(k).enumerate() {
            classes[b % 3].insert(block.to_vec());
        }
        seen.insert(classes);
    }
    seen.len()
}

/// Block orders for twelve vertices whose paths all share one triple:
/// the three classes are {(1,2),(6,7)}, {(3,4),(8,9)} and {(5,11),(10,12)}
/// and each class may appear in either order.
pub fn shared_triple_paths() -> Vec<HamPath> {
    let blocks: [[usize; 2]; 6] = [[1, 2], [3, 4], [5, 11], [6, 7], [8, 9], [10, 12]];
    let mut out = Vec::new();
    for mask in 0..8u32 {
        let mut slots = [0usize, 1, 2, 3, 4, 5];
        for c in 0..3 {
            if mask >> c & 1 == 1 {
                slots.swap(c, c + 3);
            }
        }
        let order: Vec<usize> = slots.iter().flat_map(|&b| blocks[b]).collect();
        out.push(HamPath::new(order).unwrap());
    }
    out
}

/// A pairwise C4-creating family of Hamiltonian paths on twelve vertices
/// with at least `target` members: a pairwise creating subset of
/// [`shared_triple_paths`], extended greedily by seeded random paths.
pub fn creating_path_family<R: Rng>(rng: &mut R, target: usize) -> Vec<HamPath> {
    let creating = |a: &HamPath, b: &HamPath| naive_has_cycle(&path_union(a, b), 4);
    let mut fam: Vec<HamPath> = Vec::new();
    for h in shared_triple_paths() {
        if fam.iter().all(|g| creating(&h, g)) {
            fam.push(h);
        }
    }
    while fam.len() < target {
        let h = random_path(rng, 12);
        if !fam.contains(&h) && fam.iter().all(|g| creating(&h, g)) {
            fam.push(h);
        }
    }
    fam
}

fn path_union(a: &HamPath, b: &HamPath) -> LabeledGraph {
    let edges = a.edges().into_iter().chain(b.edges());
    let mut g = LabeledGraph::empty(a.n());
    for (u, v) in edges {
        g.add_edge(u, v).unwrap();
    }
    g
}

/// Permanent as the sum over all column permutations.
pub fn permanent_oracle(rows: &[Vec<i64>]) -> i64 {
    let m = rows.len();
    (0..m)
        .permutations(m)
        .map(|p| p.iter().enumerate().map(|(i, &j)| rows[i][j]).product::<i64>())
        .sum()
}

/// Perfect matchings of any graph: pair the smallest free vertex with each
/// free neighbour in turn. Knows nothing about bipartitions.
pub fn count_matchings_oracle(g: &LabeledGraph) -> u64 {
    fn rec(a: &[Vec<bool>], free: &mut Vec<bool>) -> u64 {
        let Some(u) = (1..free.len()).find(|&v| free[v]) else {
            return 1;
        };
        free[u] = false;
        let mut total = 0;
        for v in u + 1..free.len() {
            if free[v] && a[u][v] {
                free[v] = false;
                total += rec(a, free);
                free[v] = true;
            }
        }
        free[u] = true;
        total
    }
    let a = adjacency(g);
    let mut free = vec![true; g.n() + 1];
    free[0] = false;
    rec(&a, &mut free)
}

/// Random balanced bipartite graph: classes `1..=m` and `m+1..=2m`.
pub fn random_bipartite<R: Rng>(rng: &mut R, m: usize, p: f64) -> LabeledGraph {
    let mut g = LabeledGraph::empty(2 * m);
    for u in 1..=m {
        for v in m + 1..=2 * m {
            if rng.gen_bool(p) {
                g.add_edge(u, v).unwrap();
            }
        }
    }
    g
}
