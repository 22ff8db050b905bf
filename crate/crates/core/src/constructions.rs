//! Explicit graph families: the fixed-vertex Hamiltonian path family that
//! is pairwise `C_2k`-creating, point/line incidence graphs of projective
//! planes over prime fields, and validation of externally supplied
//! `C_2k`-free bipartite regular graphs.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::graph::{HamPath, LabeledGraph};

/// Parameters of the fixed-path family on `n = m*k + 1` vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LowerBoundFamilySpec {
    pub n: usize,
    pub k: usize,
    /// Number of fixed paths, `(n - 1) / k`.
    pub m: usize,
}

impl LowerBoundFamilySpec {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidParameter(format!("k must be at least 2, got {k}")));
        }
        if n < 2 * k + 1 {
            return Err(Error::InvalidParameter(format!("n must be at least 2k+1 = {}, got {n}", 2 * k + 1)));
        }
        if !(n - 1).is_multiple_of(k) {
            return Err(Error::Congruence { n, k });
        }
        Ok(LowerBoundFamilySpec { n, k, m: (n - 1) / k })
    }

    /// The `t`-th fixed path (0-based), `tk+2, ..., (t+1)k`, increasing.
    pub fn fixed_path(&self, t: usize) -> Vec<usize> {
        (t * self.k + 2..=(t + 1) * self.k).collect()
    }

    /// Vertices pinned to their own position: `1, k+1, 2k+1, ..., n`.
    pub fn fixed_vertices(&self) -> Vec<usize> {
        (0..=self.m).map(|t| t * self.k + 1).collect()
    }

    /// The path that places fixed path `assignment[s]` into slot `s`.
    pub fn path_for(&self, assignment: &[usize]) -> HamPath {
        let mut order = Vec::with_capacity(self.n);
        order.push(1);
        for (slot, &t) in assignment.iter().enumerate() {
            order.extend(self.fixed_path(t));
            order.push((slot + 1) * self.k + 1);
        }
        HamPath::new(order).expect("slot assignment yields a Hamiltonian path")
    }
}

/// All `m!` Hamiltonian paths on `n` vertices obtained by permuting the
/// fixed paths among the slots between fixed vertices, in lexicographic
/// order of slot assignments. Any two of them are `C_2k`-creating.
pub fn lower_bound_family(n: usize, k: usize) -> Result<Vec<HamPath>> {
    let spec = LowerBoundFamilySpec::new(n, k)?;
    Ok((0..spec.m)
        .permutations(spec.m)
        .map(|assignment| spec.path_for(&assignment))
        .collect())
}

pub fn is_prime(q: usize) -> bool {
    if q < 2 {
        return false;
    }
    (2..).take_while(|d| d * d <= q).all(|d| !q.is_multiple_of(d))
}

/// Point/line incidence graph of the projective plane `PG(2, q)`.
#[derive(Clone, Debug)]
pub struct PlaneIncidenceGraph {
    pub q: usize,
    pub graph: LabeledGraph,
    /// Normalized coordinates of the points, vertex `i` is `points[i-1]`.
    pub points: Vec<[usize; 3]>,
    /// Normalized coordinates of the lines, vertex `N+j` is `lines[j-1]`.
    pub lines: Vec<[usize; 3]>,
}

impl PlaneIncidenceGraph {
    /// `q^2 + q + 1`, the size of each class.
    pub fn class_size(&self) -> usize {
        self.points.len()
    }

    pub fn point_vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.class_size()
    }

    pub fn line_vertices(&self) -> std::ops::RangeInclusive<usize> {
        self.class_size() + 1..=2 * self.class_size()
    }
}

/// Nonzero vectors of `Z_q^3` whose first nonzero coordinate is 1, in
/// lexicographic order. These represent the one-dimensional subspaces.
fn projective_points(q: usize) -> Vec<[usize; 3]> {
    let mut out = Vec::with_capacity(q * q + q + 1);
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let v = [a, b, c];
                if v.iter().find(|&&x| x != 0) == Some(&1) {
                    out.push(v);
                }
            }
        }
    }
    out
}

/// Builds the incidence graph of `PG(2, q)` for a prime `q`. Points are
/// vertices `1..=N` and lines `N+1..=2N` with `N = q^2+q+1`; a line is
/// given by its normal vector and contains the points orthogonal to it.
pub fn projective_plane_incidence(q: usize) -> Result<PlaneIncidenceGraph> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    let points = projective_points(q);
    let lines = points.clone();
    let big_n = points.len();
    let mut edges = Vec::with_capacity(big_n * (q + 1));
    for (i, p) in points.iter().enumerate() {
        for (j, l) in lines.iter().enumerate() {
            let dot: usize = p.iter().zip(l).map(|(a, b)| a * b).sum();
            if dot.is_multiple_of(q) {
                edges.push((i + 1, big_n + j + 1));
            }
        }
    }
    let graph = LabeledGraph::from_edges(2 * big_n, edges)?;
    Ok(PlaneIncidenceGraph { q, graph, points, lines })
}

/// Largest prime `q` whose plane graph fits in `n_target` vertices, and
/// that graph's vertex count `2(q^2+q+1)`.
pub fn choose_plane_order(n_target: usize) -> Result<(usize, usize)> {
    if n_target < 14 {
        return Err(Error::InvalidParameter(format!("target must be at least 14, got {n_target}")));
    }
    let size = |q: usize| 2 * (q * q + q + 1);
    let mut q = 2;
    while size(q + 1) <= n_target {
        q += 1;
    }
    while !is_prime(q) {
        q -= 1;
    }
    Ok((q, size(q)))
}

/// Result of checking that a graph is bipartite, regular and has girth
/// greater than `2k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C2kFreeReport {
    pub k: usize,
    pub n: usize,
    pub bipartite: bool,
    pub degree: Option<usize>,
    pub girth: Option<usize>,
}

impl C2kFreeReport {
    pub fn passed(&self) -> bool {
        self.bipartite && self.degree.is_some() && self.girth.is_none_or(|g| g > 2 * self.k)
    }
}

pub fn validate_c2kfree_bipartite_regular(g: &LabeledGraph, k: usize) -> C2kFreeReport {
    C2kFreeReport {
        k,
        n: g.n(),
        bipartite: g.is_bipartite(),
        degree: g.regular_degree(),
        girth: g.girth(),
    }
}
