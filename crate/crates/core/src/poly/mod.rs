//! Multivariate polynomials over the tower field and monomial orders.

mod monomial;
mod order;
mod polynomial;

pub use monomial::MultiIndex;
pub use order::MonomialOrder;
pub use polynomial::{Polynomial, Roster};
