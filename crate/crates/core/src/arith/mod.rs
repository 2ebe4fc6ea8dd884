//! Exact arithmetic: rationals, the tower field and matrices over it.

mod matrix;
mod tower;

pub use matrix::Matrix;
pub use tower::{basis_exponents, TowerElement, TOWER_DEGREE};

/// Arbitrary-precision rational, always stored in lowest terms.
pub type Rational = num_rational::BigRational;
