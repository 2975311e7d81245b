//! Exact spectral toolkit for the cograph family `C(a_1, ..., a_2k)`.
//!
//! A C-graph is built from a sequence of positive integers by starting with
//! `a_1` isolated vertices and then, for each further part, adding a clique
//! of that size as a new component and complementing the whole graph. The
//! crate builds these graphs, computes their quotient matrices and
//! characteristic polynomials in closed form, recognizes them, and checks
//! every closed form against exact, formula-free oracles.
//!
//! All arithmetic is exact: integers are arbitrary precision and rationals
//! are kept in lowest terms.

pub mod charpoly;
pub mod composition;
pub mod construct;
mod error;
pub mod graph;
pub mod matrix;
pub mod poly;
pub mod quotient;
pub mod recognize;
pub mod spectra;

pub use composition::Composition;
pub use construct::{antiregular, build_cgraph, build_cgraph_direct, ClassPartition};
pub use error::{Error, Result};
pub use graph::Graph;
pub use matrix::IntMatrix;
pub use poly::IntPoly;

/// Exact rational number, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;
