//! Families of Hamiltonian paths and perfect matchings whose pairwise
//! unions contain an even cycle of prescribed length.
//!
//! The crate covers the explicit constructions (fixed-path families,
//! projective-plane incidence graphs), the reduction from path families to
//! matching families, exact permanents and matching counts, exact clique
//! search for small extremal values, and the exponent arithmetic of the
//! resulting asymptotic bounds.
//!
//! Vertex labels are 1-based everywhere in the public API.
//!
//! ```
//! use cyclecreate::constructions::lower_bound_family;
//! use cyclecreate::verify_pairwise_creating;
//!
//! let fam = lower_bound_family(9, 2)?;
//! assert_eq!(fam.len(), 24);
//! assert!(verify_pairwise_creating(&fam, 4)?.passed());
//! # Ok::<(), cyclecreate::Error>(())
//! ```

pub mod bounds;
pub mod clique;
pub mod constructions;
pub mod counting;
pub mod error;
pub mod graph;
pub mod io;
pub mod reduction;
pub mod search;

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};

pub use error::{Error, Result};
pub use graph::{is_creating, verify_pairwise_creating, AsGraph, FamilyReport, HamPath, LabeledGraph, PerfectMatching, Permutation};

/// Permanent inputs with exact integer entries.
pub type IntMatrix = counting::BiadjacencyMatrix<BigInt>;
/// Permanent inputs with exact rational entries (doubly stochastic scalings).
pub type RationalMatrix = counting::BiadjacencyMatrix<BigRational>;
/// Floating-point matrices, for display and quick estimates only.
pub type FloatMatrix = counting::BiadjacencyMatrix<f64>;

/// Bound exponents over machine integers; exact for every `k` that fits.
pub type Exponent = Ratio<i64>;
/// Bound exponents over big integers.
pub type BigExponent = BigRational;
