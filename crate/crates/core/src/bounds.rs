//! Exact exponents of the bounds on `H(n, 2k)` and `M(n, 2k)`.
//!
//! Every quantity is the exponent `e` in a bound of the form
//! `n^{e n - o(n)}`, computed as an exact rational over any integer type.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::FromPrimitive;

use crate::error::{Error, Result};

/// Which dense bipartite regular `C_2k`-free construction supplies the
/// degree exponent.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TableRow {
    /// Projective plane incidence graphs, `2k = 4`.
    Reiman,
    /// Generalized quadrangles, `2k = 6`.
    BensonQuadrangle,
    /// Generalized hexagons, `2k = 10`.
    BensonHexagon,
    /// Algebraic graphs `D(k, q)`, even `k`.
    LazebnikEven,
    /// Algebraic graphs `D(k, q)`, odd `k`.
    LazebnikOdd,
}

impl TableRow {
    pub fn for_k(k: usize) -> Result<Self> {
        match k {
            0 | 1 => Err(Error::InvalidParameter(format!("k must be at least 2, got {k}"))),
            2 => Ok(TableRow::Reiman),
            3 => Ok(TableRow::BensonQuadrangle),
            5 => Ok(TableRow::BensonHexagon),
            k if k % 2 == 0 => Ok(TableRow::LazebnikEven),
            _ => Ok(TableRow::LazebnikOdd),
        }
    }
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TableRow::Reiman => "reiman",
            TableRow::BensonQuadrangle => "benson-quadrangle",
            TableRow::BensonHexagon => "benson-hexagon",
            TableRow::LazebnikEven => "luw-even",
            TableRow::LazebnikOdd => "luw-odd",
        })
    }
}

fn int<I: FromPrimitive>(x: usize) -> I {
    I::from_usize(x).expect("value fits the integer type")
}

fn ratio<I: Integer + Clone + FromPrimitive>(num: usize, den: usize) -> Ratio<I> {
    Ratio::new(int(num), int(den))
}

/// Exponent `c(k)` of the degree `n^c` of the densest known bipartite
/// regular `C_2k`-free graphs: `1/k` for `k` in {2, 3, 5}, else `2/(3k-2)`
/// for even `k` and `2/(3k-3)` for odd `k`.
pub fn degree_exponent<I: Integer + Clone + FromPrimitive>(k: usize) -> Result<Ratio<I>> {
    Ok(match TableRow::for_k(k)? {
        TableRow::Reiman | TableRow::BensonQuadrangle | TableRow::BensonHexagon => ratio(1, k),
        TableRow::LazebnikEven => ratio(2, 3 * k - 2),
        TableRow::LazebnikOdd => ratio(2, 3 * k - 3),
    })
}

/// `1 - c(k)/k`.
pub fn path_upper_exponent<I: Integer + Clone + FromPrimitive>(k: usize) -> Result<Ratio<I>> {
    let c = degree_exponent::<I>(k)?;
    Ok(Ratio::from_integer(I::one()) - c / int::<I>(k))
}

/// `1/2 - c(k)/2`.
pub fn matching_upper_exponent<I: Integer + Clone + FromPrimitive>(k: usize) -> Result<Ratio<I>> {
    let c = degree_exponent::<I>(k)?;
    let half = ratio::<I>(1, 2);
    Ok(half.clone() - c * half)
}

/// `1/k`, from the fixed-path construction.
pub fn lower_bound_exponent<I: Integer + Clone + FromPrimitive>(k: usize) -> Result<Ratio<I>> {
    TableRow::for_k(k)?;
    Ok(ratio(1, k))
}

/// All exponents for one `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentReport<I: Integer + Clone> {
    pub k: usize,
    pub source: TableRow,
    pub degree: Ratio<I>,
    pub matching_upper: Ratio<I>,
    pub path_upper: Ratio<I>,
    pub path_lower: Ratio<I>,
}

impl<I: Integer + Clone + FromPrimitive> ExponentReport<I> {
    pub fn new(k: usize) -> Result<Self> {
        Ok(ExponentReport {
            k,
            source: TableRow::for_k(k)?,
            degree: degree_exponent(k)?,
            matching_upper: matching_upper_exponent(k)?,
            path_upper: path_upper_exponent(k)?,
            path_lower: lower_bound_exponent(k)?,
        })
    }

    /// `0 < c <= 1/2`, `lower < path_upper < 1`, `matching_upper < 1/2`.
    pub fn is_consistent(&self) -> bool {
        let zero = Ratio::from_integer(I::zero());
        let one = Ratio::from_integer(I::one());
        let half = ratio::<I>(1, 2);
        self.degree > zero
            && self.degree <= half
            && self.path_lower < self.path_upper
            && self.path_upper < one
            && self.matching_upper < half
    }
}

/// Reports for `k_min..=k_max`.
pub fn exponent_table<I: Integer + Clone + FromPrimitive>(k_min: usize, k_max: usize) -> Result<Vec<ExponentReport<I>>> {
    (k_min..=k_max).map(ExponentReport::new).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Exponent;

    fn r(a: i64, b: i64) -> Exponent {
        Exponent::new(a, b)
    }

    #[test]
    fn degree_rows() {
        assert_eq!(degree_exponent::<i64>(2).unwrap(), r(1, 2));
        assert_eq!(degree_exponent::<i64>(4).unwrap(), r(1, 5));
        assert_eq!(degree_exponent::<i64>(7).unwrap(), r(1, 9));
        assert_eq!(degree_exponent::<i64>(5).unwrap(), r(1, 5));
        assert!(degree_exponent::<i64>(1).is_err());
    }

    #[test]
    fn upper_exponents() {
        assert_eq!(path_upper_exponent::<i64>(2).unwrap(), r(3, 4));
        assert_eq!(path_upper_exponent::<i64>(4).unwrap(), r(19, 20));
        assert_eq!(path_upper_exponent::<i64>(7).unwrap(), r(62, 63));
        assert_eq!(matching_upper_exponent::<i64>(2).unwrap(), r(1, 4));
        assert_eq!(matching_upper_exponent::<i64>(4).unwrap(), r(2, 5));
        assert_eq!(matching_upper_exponent::<i64>(3).unwrap(), r(1, 3));
    }

    #[test]
    fn lower_exponents() {
        assert_eq!(lower_bound_exponent::<i64>(2).unwrap(), r(1, 2));
        assert_eq!(lower_bound_exponent::<i64>(3).unwrap(), r(1, 3));
        for k in 2..=100 {
            assert!(ExponentReport::<i64>::new(k).unwrap().is_consistent(), "k = {k}");
        }
    }

    #[test]
    fn big_integer_exponents_agree() {
        use num_bigint::BigInt;
        for k in 2..=40 {
            let small = path_upper_exponent::<i64>(k).unwrap();
            let big = path_upper_exponent::<BigInt>(k).unwrap();
            assert_eq!(big, Ratio::new(BigInt::from(*small.numer()), BigInt::from(*small.denom())));
        }
    }
}
