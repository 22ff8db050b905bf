//! Compatibility graphs over all Hamiltonian paths, perfect matchings or
//! permutations of a small ground set, and the exact extremal values read
//! off them as clique numbers.

use itertools::Itertools;
use num_bigint::BigUint;
use rayon::prelude::*;

use crate::clique::{self, BitGraph, BitSet};
use crate::error::{Error, Result};
use crate::graph::{is_creating, matchings_create_cycle, HamPath, PerfectMatching, Permutation};

/// Largest `n` for which all Hamiltonian paths of `K_n` are enumerated.
pub const MAX_PATH_N: usize = 8;
/// Largest `n` for which all perfect matchings of `K_n` are enumerated.
pub const MAX_MATCHING_N: usize = 12;
/// Largest `m` for which all permutations of `[m]` are enumerated.
pub const MAX_PERMUTATION_M: usize = 8;

/// Environment variable capping the number of objects a compatibility
/// graph may be built over.
pub const MAX_ENUM_VAR: &str = "CYCLECREATE_MAX_ENUM";
pub const DEFAULT_MAX_ENUM: usize = 25_000;

/// Object-count cap for exact searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumLimits {
    pub max_objects: usize,
}

impl Default for EnumLimits {
    fn default() -> Self {
        EnumLimits { max_objects: DEFAULT_MAX_ENUM }
    }
}

impl EnumLimits {
    /// Reads `CYCLECREATE_MAX_ENUM`, falling back to the default when the
    /// variable is unset or unparsable.
    pub fn from_env() -> Self {
        std::env::var(MAX_ENUM_VAR)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .map(|max_objects| EnumLimits { max_objects })
            .unwrap_or_default()
    }

    fn check(&self, what: &str, count: usize) -> Result<()> {
        if count > self.max_objects {
            Err(Error::LimitExceeded(format!(
                "{count} {what} exceed the cap of {} (set {MAX_ENUM_VAR} to raise it)",
                self.max_objects
            )))
        } else {
            Ok(())
        }
    }
}

/// All `n!/2` Hamiltonian paths of `K_n` in canonical orientation, sorted.
pub fn enumerate_ham_paths(n: usize) -> Result<Vec<HamPath>> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("paths need n >= 2, got {n}")));
    }
    if n > MAX_PATH_N {
        return Err(Error::LimitExceeded(format!("path enumeration supports n <= {MAX_PATH_N}, got {n}")));
    }
    Ok((1..=n)
        .permutations(n)
        .filter(|p| p[0] < p[n - 1])
        .map(|p| HamPath::new(p).expect("permutation of 1..=n"))
        .collect())
}

/// All `(n-1)!!` perfect matchings of `K_n`, lexicographic in their sorted
/// pair lists.
pub fn enumerate_perfect_matchings(n: usize) -> Result<Vec<PerfectMatching>> {
    if !n.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("perfect matchings need even n, got {n}")));
    }
    if n > MAX_MATCHING_N {
        return Err(Error::LimitExceeded(format!(
            "matching enumeration supports n <= {MAX_MATCHING_N}, got {n}"
        )));
    }
    fn rec(free: &mut Vec<usize>, pairs: &mut Vec<(usize, usize)>, n: usize, out: &mut Vec<PerfectMatching>) {
        if free.is_empty() {
            out.push(PerfectMatching::new(n, pairs.iter().copied()).expect("complete matching"));
            return;
        }
        let a = free.remove(0);
        for i in 0..free.len() {
            let b = free.remove(i);
            pairs.push((a, b));
            rec(free, pairs, n, out);
            pairs.pop();
            free.insert(i, b);
        }
        free.insert(0, a);
    }
    let mut out = Vec::new();
    rec(&mut (1..=n).collect(), &mut Vec::new(), n, &mut out);
    Ok(out)
}

/// All `m!` permutations of `[m]`, lexicographic.
pub fn enumerate_permutations(m: usize) -> Result<Vec<Permutation>> {
    if m > MAX_PERMUTATION_M {
        return Err(Error::LimitExceeded(format!(
            "permutation enumeration supports m <= {MAX_PERMUTATION_M}, got {m}"
        )));
    }
    Ok((1..=m)
        .permutations(m)
        .map(|p| Permutation::new(p).expect("permutation of 1..=m"))
        .collect())
}

/// Whether some two coordinates `i < j` carry the same two values in
/// swapped order.
pub fn is_reversing(p1: &Permutation, p2: &Permutation) -> Result<bool> {
    if p1.m() != p2.m() {
        return Err(Error::GroundSetMismatch { left: p1.m(), right: p2.m() });
    }
    let (a, b) = (p1.images(), p2.images());
    Ok((0..a.len()).any(|i| (i + 1..a.len()).any(|j| a[i] == b[j] && a[j] == b[i])))
}

/// The matching `{(i, π(i) + m)}` on `[2m]`.
pub fn perm_to_matching(p: &Permutation) -> PerfectMatching {
    let m = p.m();
    PerfectMatching::new(2 * m, (1..=m).map(|i| (i, p.image(i) + m))).expect("bijection gives a perfect matching")
}

/// The pairwise relation a compatibility graph encodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    /// Union contains a cycle on exactly this many vertices.
    Creating(usize),
    Reversing,
}

impl std::fmt::Display for Relation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Relation::Creating(l) => write!(f, "C{l}-creating"),
            Relation::Reversing => write!(f, "reversing"),
        }
    }
}

/// Objects that a compatibility graph can be built over.
pub trait Relatable: Sync {
    fn relate(&self, other: &Self, relation: Relation) -> Result<bool>;
}

impl Relatable for HamPath {
    fn relate(&self, other: &Self, relation: Relation) -> Result<bool> {
        match relation {
            Relation::Creating(l) => is_creating(self, other, l),
            r => Err(Error::UnsupportedRelation(r.to_string())),
        }
    }
}

impl Relatable for PerfectMatching {
    fn relate(&self, other: &Self, relation: Relation) -> Result<bool> {
        match relation {
            Relation::Creating(l) if l >= 3 => matchings_create_cycle(self, other, l),
            Relation::Creating(l) => Err(Error::CycleLengthTooSmall(l)),
            r => Err(Error::UnsupportedRelation(r.to_string())),
        }
    }
}

impl Relatable for Permutation {
    fn relate(&self, other: &Self, relation: Relation) -> Result<bool> {
        match relation {
            Relation::Reversing => is_reversing(self, other),
            r => Err(Error::UnsupportedRelation(r.to_string())),
        }
    }
}

/// Objects as vertices, the relation as adjacency.
#[derive(Clone, Debug)]
pub struct CompatibilityGraph<T> {
    pub objects: Vec<T>,
    pub relation: Relation,
    pub adjacency: BitGraph,
}

/// A clique or independent set with its member indices (sorted).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Optimum {
    pub size: usize,
    pub witness: Vec<usize>,
}

pub fn build_compatibility_graph<T: Relatable>(objects: Vec<T>, relation: Relation) -> Result<CompatibilityGraph<T>> {
    let n = objects.len();
    let rows: Vec<Vec<usize>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut hits = Vec::new();
            for j in i + 1..n {
                if objects[i].relate(&objects[j], relation)? {
                    hits.push(j);
                }
            }
            Ok(hits)
        })
        .collect::<Result<_>>()?;
    let mut adjacency = BitGraph::new(n);
    for (i, row) in rows.iter().enumerate() {
        for &j in row {
            adjacency.add_edge(i, j);
        }
    }
    Ok(CompatibilityGraph { objects, relation, adjacency })
}

impl<T: Relatable> CompatibilityGraph<T> {
    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.edge_count()
    }

    /// Re-checks every witness pair against the relation itself rather
    /// than the stored adjacency.
    fn certify(&self, witness: &[usize], related: bool) -> Result<()> {
        for (a, &i) in witness.iter().enumerate() {
            for &j in &witness[a + 1..] {
                if self.objects[i].relate(&self.objects[j], self.relation)? != related {
                    return Err(Error::WitnessRejected);
                }
            }
        }
        Ok(())
    }

    pub fn max_clique(&self) -> Result<Optimum> {
        let (size, witness) = clique::max_clique(&self.adjacency);
        self.certify(&witness, true)?;
        Ok(Optimum { size, witness })
    }

    pub fn max_independent_set(&self) -> Result<Optimum> {
        let (size, witness) = clique::max_independent_set(&self.adjacency);
        self.certify(&witness, false)?;
        Ok(Optimum { size, witness })
    }

    /// Whether the given members are pairwise unrelated in this graph.
    pub fn is_independent(&self, members: &[usize]) -> bool {
        members
            .iter()
            .enumerate()
            .all(|(a, &i)| members[a + 1..].iter().all(|&j| !self.adjacency.adjacent(i, j)))
    }

    /// The subgraph induced on the given members, in the given order.
    pub fn restrict(&self, members: &[usize]) -> BitGraph {
        let rows = members
            .iter()
            .map(|&i| {
                let mut row = BitSet::new(members.len());
                for (b, &j) in members.iter().enumerate() {
                    if self.adjacency.adjacent(i, j) {
                        row.insert(b);
                    }
                }
                row
            })
            .collect();
        BitGraph::from_rows(rows)
    }
}

/// `H(n, len)`: the largest pairwise `C_len`-creating family of
/// Hamiltonian paths on `n` vertices.
pub fn exact_h(n: usize, len: usize, limits: EnumLimits) -> Result<Optimum> {
    if len < 3 {
        return Err(Error::CycleLengthTooSmall(len));
    }
    let count = (1..=n).product::<usize>() / 2;
    limits.check("paths", count)?;
    let g = build_compatibility_graph(enumerate_ham_paths(n)?, Relation::Creating(len))?;
    g.max_clique()
}

/// `M(n, 2k)`: the largest pairwise `C_2k`-creating family of perfect
/// matchings of `K_n`.
pub fn exact_m(n: usize, k: usize, limits: EnumLimits) -> Result<Optimum> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("k must be at least 2, got {k}")));
    }
    let count = (1..n).step_by(2).product::<usize>();
    limits.check("matchings", count)?;
    let g = build_compatibility_graph(enumerate_perfect_matchings(n)?, Relation::Creating(2 * k))?;
    g.max_clique()
}

/// `RP(m)`: the largest family of pairwise reversing permutations of `[m]`.
pub fn exact_rp(m: usize, limits: EnumLimits) -> Result<Optimum> {
    limits.check("permutations", (1..=m).product())?;
    let g = build_compatibility_graph(enumerate_permutations(m)?, Relation::Reversing)?;
    g.max_clique()
}

/// `binom(n, floor(n/2))`, halved when `n` is even.
pub fn theorem1_value(n: usize) -> Result<BigUint> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("n must be at least 3, got {n}")));
    }
    let half = n / 2;
    let binom = (0..half).fold(BigUint::from(1u32), |acc, i| acc * (n - i) / (i + 1));
    Ok(if n.is_multiple_of(2) { binom / 2u32 } else { binom })
}
