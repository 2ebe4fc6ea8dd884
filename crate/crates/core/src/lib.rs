//! Exact computation of generic initial ideals and generic initial monomial
//! subspaces, used as biholomorphic invariants of rational maps between
//! balls and hyperquadrics.

pub mod arith;
mod error;
pub mod gin;
pub mod groebner;
pub mod hermitian;
pub mod maps;
pub mod parse;
pub mod poly;

pub use arith::{Matrix, Rational, TowerElement};
pub use error::{Error, Result};
pub use gin::{GinConfig, MonomialSubspace};
pub use groebner::{Ideal, MonomialIdeal};
pub use hermitian::{HermitianForm, Signature};
pub use maps::{HomogenizedMap, InvariantReport, RationalMap};
pub use poly::{MonomialOrder, MultiIndex, Polynomial, Roster};
