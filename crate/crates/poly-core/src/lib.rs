//! Exact univariate polynomial and rational-function arithmetic over the
//! Gaussian rationals, plus expression parsing and numeric root extraction
//! with exact multiplicity recovery.
//!
//! The scalar type is a pair of arbitrary-precision rationals (real and
//! imaginary part). Everything downstream — gcd, squarefree decomposition,
//! resultants, discriminants — stays exact; floating point enters only in
//! [`roots::roots_numeric`], and even there multiplicities come from the
//! exact squarefree structure, never from clustering heuristics.

mod error;
mod gcd;
mod parse;
mod poly;
mod ratfun;
mod resultant;
mod roots;
mod scalar;
mod squarefree;

pub use error::PolyError;
pub use gcd::gcd_monic;
pub use parse::{parse_expression, parse_polynomial, parse_rational, Parsed};
pub use poly::{poly_from_ints, Polynomial};
pub use ratfun::{rf_derivative_in_z, rf_equal, RationalFunction};
pub use resultant::{discriminant, lagrange_interpolate, resultant};
pub use roots::{aberth_roots, roots_numeric, RootConfig, RootEntry, RootSet};
pub use scalar::{GaussianRational, Rat};
pub use squarefree::{squarefree_decomposition, squarefree_part};

/// Default residual tolerance for numeric root extraction.
pub const DEFAULT_ROOT_TOL: f64 = 1e-10;
/// Iteration budget per squarefree factor for the simultaneous root iteration.
pub const DEFAULT_ROOT_ITER_BUDGET: usize = 200;
