//! Permanents and perfect-matching counts of bipartite graphs.
//!
//! Matrices are generic over the entry type: anything implementing
//! [`Scalar`] works, from machine integers through `BigInt` and
//! `BigRational` to `f64`. Everything decided in this crate uses the exact
//! types.

use std::fmt::Debug;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One};

use crate::constructions::validate_c2kfree_bipartite_regular;
use crate::error::{Error, Result};
use crate::graph::{LabeledGraph, PerfectMatching};

/// Entry type of a [`BiadjacencyMatrix`].
pub trait Scalar: Num + Clone + Debug {}

impl<T: Num + Clone + Debug> Scalar for T {}

/// Square matrix whose rows and columns are indexed by the two classes of a
/// bipartite graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiadjacencyMatrix<T> {
    m: usize,
    entries: Vec<T>,
    /// Graph vertex of each row (1-based), or `1..=m` for bare matrices.
    pub row_labels: Vec<usize>,
    /// Graph vertex of each column.
    pub col_labels: Vec<usize>,
}

impl<T: Scalar> BiadjacencyMatrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let m = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != m) {
            return Err(Error::InvalidParameter(format!(
                "matrix is not square: row of length {} in a {m}-row matrix",
                bad.len()
            )));
        }
        Ok(BiadjacencyMatrix {
            m,
            entries: rows.into_iter().flatten().collect(),
            row_labels: (1..=m).collect(),
            col_labels: (1..=m).collect(),
        })
    }

    /// `m x m` matrix with every entry equal to `value`.
    pub fn filled(m: usize, value: T) -> Self {
        BiadjacencyMatrix {
            m,
            entries: vec![value; m * m],
            row_labels: (1..=m).collect(),
            col_labels: (1..=m).collect(),
        }
    }

    pub fn identity(m: usize) -> Self {
        let mut out = Self::filled(m, T::zero());
        for i in 0..m {
            out.entries[i * m + i] = T::one();
        }
        out
    }

    /// Rows are the colour-0 class and columns the colour-1 class of the
    /// graph's bipartition, each in increasing label order.
    pub fn from_bipartite_graph(g: &LabeledGraph) -> Result<Self> {
        let colour = g.bipartition().ok_or(Error::NotBipartite)?;
        let rows: Vec<usize> = (1..=g.n()).filter(|&v| colour[v - 1] == 0).collect();
        let cols: Vec<usize> = (1..=g.n()).filter(|&v| colour[v - 1] == 1).collect();
        if rows.len() != cols.len() {
            return Err(Error::UnbalancedBipartition(rows.len(), cols.len()));
        }
        let m = rows.len();
        let mut entries = vec![T::zero(); m * m];
        for (i, &u) in rows.iter().enumerate() {
            for (j, &v) in cols.iter().enumerate() {
                if g.has_edge(u, v) {
                    entries[i * m + j] = T::one();
                }
            }
        }
        Ok(BiadjacencyMatrix { m, entries, row_labels: rows, col_labels: cols })
    }

    pub fn size(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.m + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.entries[i * self.m + j] = value;
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.entries.chunks(self.m.max(1)).take(self.m)
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> BiadjacencyMatrix<U> {
        BiadjacencyMatrix {
            m: self.m,
            entries: self.entries.iter().map(f).collect(),
            row_labels: self.row_labels.clone(),
            col_labels: self.col_labels.clone(),
        }
    }

    pub fn row_sums(&self) -> Vec<T> {
        self.rows()
            .map(|r| r.iter().cloned().fold(T::zero(), |a, b| a + b))
            .collect()
    }

    pub fn col_sums(&self) -> Vec<T> {
        (0..self.m)
            .map(|j| (0..self.m).fold(T::zero(), |a, i| a + self.get(i, j).clone()))
            .collect()
    }

    /// Row and column sums all exactly one. Entry signs are not checked.
    pub fn is_doubly_stochastic(&self) -> bool {
        self.row_sums().into_iter().chain(self.col_sums()).all(|s| s.is_one())
    }
}

/// Ryser's inclusion-exclusion formula with Gray-code column updates:
/// `per(A) = sum over column sets S of (-1)^(m-|S|) prod_i sum_{j in S} a_ij`.
///
/// Positive and negative terms are accumulated separately, so unsigned
/// entry types work as long as the matrix is nonnegative.
pub fn permanent_ryser<T: Scalar>(a: &BiadjacencyMatrix<T>) -> T {
    let m = a.size();
    if m == 0 {
        return T::one();
    }
    assert!(m < 63, "Ryser over {m} columns is out of reach");
    let mut row_sums = vec![T::zero(); m];
    let mut in_set = vec![false; m];
    let mut set_size = 0usize;
    let mut positive = T::zero();
    let mut negative = T::zero();
    for step in 1u64..(1u64 << m) {
        let col = step.trailing_zeros() as usize;
        in_set[col] = !in_set[col];
        if in_set[col] {
            set_size += 1;
            for (i, s) in row_sums.iter_mut().enumerate() {
                *s = s.clone() + a.get(i, col).clone();
            }
        } else {
            set_size -= 1;
            for (i, s) in row_sums.iter_mut().enumerate() {
                *s = s.clone() - a.get(i, col).clone();
            }
        }
        let prod = row_sums.iter().cloned().fold(T::one(), |p, s| p * s);
        if (m - set_size).is_multiple_of(2) {
            positive = positive + prod;
        } else {
            negative = negative + prod;
        }
    }
    positive - negative
}

/// Largest size accepted by [`permanent_naive`].
pub const NAIVE_PERMANENT_MAX: usize = 9;

/// Sum over all `m!` permutations. Reference implementation.
pub fn permanent_naive<T: Scalar>(a: &BiadjacencyMatrix<T>) -> Result<T> {
    let m = a.size();
    if m > NAIVE_PERMANENT_MAX {
        return Err(Error::LimitExceeded(format!(
            "naive permanent supports m <= {NAIVE_PERMANENT_MAX}, got {m}"
        )));
    }
    Ok((0..m).permutations(m).fold(T::zero(), |acc, sigma| {
        acc + sigma
            .iter()
            .enumerate()
            .fold(T::one(), |p, (i, &j)| p * a.get(i, j).clone())
    }))
}

/// Number of perfect matchings of a bipartite graph, as the permanent of
/// its biadjacency matrix.
pub fn count_perfect_matchings(g: &LabeledGraph) -> Result<BigInt> {
    let a = BiadjacencyMatrix::<BigInt>::from_bipartite_graph(g)?;
    Ok(permanent_ryser(&a))
}

/// Every perfect matching of a bipartite graph with balanced classes, by
/// backtracking over the row class in increasing order. Sorted.
pub fn enumerate_bipartite_matchings(g: &LabeledGraph) -> Result<Vec<PerfectMatching>> {
    let a = BiadjacencyMatrix::<u8>::from_bipartite_graph(g)?;
    let m = a.size();
    let mut out = Vec::new();
    let mut used = vec![false; m];
    let mut chosen = Vec::with_capacity(m);

    fn rec(
        a: &BiadjacencyMatrix<u8>,
        row: usize,
        used: &mut [bool],
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if row == a.size() {
            out.push(chosen.clone());
            return;
        }
        for col in 0..a.size() {
            if used[col] || *a.get(row, col) == 0 {
                continue;
            }
            used[col] = true;
            chosen.push(col);
            rec(a, row + 1, used, chosen, out);
            chosen.pop();
            used[col] = false;
        }
    }

    let mut raw = Vec::new();
    rec(&a, 0, &mut used, &mut chosen, &mut raw);
    for cols in raw {
        let pairs = cols
            .iter()
            .enumerate()
            .map(|(i, &j)| (a.row_labels[i], a.col_labels[j]));
        out.push(PerfectMatching::new(g.n(), pairs)?);
    }
    out.sort();
    Ok(out)
}

fn factorial(m: usize) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, i| acc * i)
}

/// `m! / m^m`, the minimum permanent of an `m x m` doubly stochastic matrix.
pub fn vdw_bound(m: usize) -> BigRational {
    if m == 0 {
        return BigRational::one();
    }
    BigRational::new(factorial(m), num_traits::pow(BigInt::from(m), m))
}

/// Exact comparison of a regular bipartite graph's matching count against
/// `r^m * m!/m^m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lemma6Report {
    /// Class size.
    pub m: usize,
    /// Common degree.
    pub r: usize,
    pub matchings: BigInt,
    /// `r^m * m! / m^m`.
    pub lower_bound: BigRational,
    /// Permanent of the biadjacency matrix scaled by `1/r`.
    pub scaled_permanent: BigRational,
    pub doubly_stochastic: bool,
}

impl Lemma6Report {
    pub fn holds(&self) -> bool {
        self.doubly_stochastic && BigRational::from_integer(self.matchings.clone()) >= self.lower_bound
    }

    /// Smallest integer the bound forces the matching count to reach.
    pub fn integer_bound(&self) -> BigInt {
        self.lower_bound.ceil().to_integer()
    }
}

pub fn lemma6_check(g: &LabeledGraph) -> Result<Lemma6Report> {
    let a = BiadjacencyMatrix::<BigInt>::from_bipartite_graph(g)?;
    let r = g.regular_degree().ok_or(Error::NotRegular)?;
    if r == 0 {
        return Err(Error::InvalidParameter("graph has no edges".into()));
    }
    let m = a.size();
    let matchings = permanent_ryser(&a);
    let r_big = BigInt::from(r);
    let scaled = a.map(|x| BigRational::new(x.clone(), r_big.clone()));
    let scaled_permanent = permanent_ryser(&scaled);
    let lower_bound = BigRational::from_integer(num_traits::pow(r_big, m)) * vdw_bound(m);
    Ok(Lemma6Report {
        m,
        r,
        matchings,
        lower_bound,
        scaled_permanent,
        doubly_stochastic: scaled.is_doubly_stochastic(),
    })
}

/// All perfect matchings of a bipartite, regular graph of girth above `2k`.
/// Unions of any two lie inside the graph, so no pair is `C_2k`-creating.
pub fn build_noncreating_family(g: &LabeledGraph, k: usize) -> Result<Vec<PerfectMatching>> {
    if !validate_c2kfree_bipartite_regular(g, k).passed() {
        return Err(Error::ValidationFailed(k));
    }
    enumerate_bipartite_matchings(g)
}

/// Extends every matching by `extra` new vertices joined by the same fixed
/// matching `(n+1, n+2), (n+3, n+4), ...`.
pub fn pad_family(family: &[PerfectMatching], extra: usize) -> Result<Vec<PerfectMatching>> {
    if !extra.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!("padding must add an even number of vertices, got {extra}")));
    }
    family
        .iter()
        .map(|m| {
            let n = m.n();
            let pad = (0..extra / 2).map(|i| (n + 2 * i + 1, n + 2 * i + 2));
            PerfectMatching::new(n + extra, m.pairs().iter().copied().chain(pad))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::projective_plane_incidence;
    use crate::graph::verify_pairwise_creating;

    fn int_matrix(rows: &[&[i64]]) -> BiadjacencyMatrix<BigInt> {
        BiadjacencyMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn basic_permanents() {
        let id = BiadjacencyMatrix::<BigInt>::identity(4);
        assert_eq!(permanent_ryser(&id), BigInt::one());
        let j3 = BiadjacencyMatrix::filled(3, BigInt::one());
        assert_eq!(permanent_ryser(&j3), BigInt::from(6));
        assert_eq!(permanent_naive(&j3).unwrap(), BigInt::from(6));
        let a = int_matrix(&[&[1, 2], &[3, 4]]);
        assert_eq!(permanent_ryser(&a), BigInt::from(10));
        assert!(permanent_naive(&BiadjacencyMatrix::filled(10, 1i64)).is_err());
    }

    #[test]
    fn generic_entry_types() {
        let j = BiadjacencyMatrix::filled(4, 1u64);
        assert_eq!(permanent_ryser(&j), 24);
        let j = BiadjacencyMatrix::filled(4, 0.25f64);
        assert!((permanent_ryser(&j) - 24.0 / 256.0).abs() < 1e-12);
        let j = BiadjacencyMatrix::filled(3, BigRational::new(1.into(), 3.into()));
        assert_eq!(permanent_ryser(&j), vdw_bound(3));
    }

    #[test]
    fn not_square() {
        assert!(BiadjacencyMatrix::from_rows(vec![vec![1i64, 2], vec![3]]).is_err());
    }

    #[test]
    fn matching_counts() {
        assert_eq!(count_perfect_matchings(&LabeledGraph::complete_bipartite(3, 3)).unwrap(), BigInt::from(6));
        assert_eq!(count_perfect_matchings(&LabeledGraph::cycle(6)).unwrap(), BigInt::from(2));
        assert_eq!(count_perfect_matchings(&LabeledGraph::cycle(5)), Err(Error::NotBipartite));
        assert_eq!(count_perfect_matchings(&LabeledGraph::path(3)), Err(Error::UnbalancedBipartition(2, 1)));
        assert_eq!(enumerate_bipartite_matchings(&LabeledGraph::cycle(6)).unwrap().len(), 2);
    }

    #[test]
    fn vdw_values() {
        assert_eq!(vdw_bound(1), BigRational::one());
        assert_eq!(vdw_bound(2), BigRational::new(1.into(), 2.into()));
        assert_eq!(vdw_bound(3), BigRational::new(2.into(), 9.into()));
    }

    #[test]
    fn lemma6_small() {
        let r = lemma6_check(&LabeledGraph::complete_bipartite(3, 3)).unwrap();
        assert_eq!(r.matchings, BigInt::from(6));
        assert_eq!(r.lower_bound, BigRational::from_integer(6.into()));
        assert!(r.holds());
        assert_eq!(r.scaled_permanent, BigRational::new(6.into(), 27.into()));

        let r = lemma6_check(&LabeledGraph::cycle(6)).unwrap();
        assert_eq!(r.lower_bound, BigRational::new(16.into(), 9.into()));
        assert!(r.holds());
        assert!(lemma6_check(&LabeledGraph::path(4)).is_err());
    }

    #[test]
    fn noncreating_on_c6() {
        let fam = build_noncreating_family(&LabeledGraph::cycle(6), 2).unwrap();
        assert_eq!(fam.len(), 2);
        assert!(verify_pairwise_creating(&fam, 4).unwrap().none_creating());
        let padded = pad_family(&fam, 4).unwrap();
        assert_eq!(padded[0].n(), 10);
        assert!(verify_pairwise_creating(&padded, 4).unwrap().none_creating());
        assert!(pad_family(&fam, 3).is_err());
        assert_eq!(build_noncreating_family(&LabeledGraph::cycle(6), 3), Err(Error::ValidationFailed(3)));
    }

    #[test]
    fn plane_family_is_rejected_at_its_girth() {
        let p = projective_plane_incidence(2).unwrap();
        assert!(build_noncreating_family(&p.graph, 3).is_err());
    }
}
