//! Hermitian forms of real bihomogeneous polynomials, division by the
//! hyperquadric form, holomorphic decomposition spans and their gins.

mod decomposition;
mod form;
mod unitary;

pub use decomposition::{
    holomorphic_decomposition_span, holomorphic_decomposition_span_with, quotient_gin, quotient_gin_of_form, real_form_gin,
    PivotStrategy,
};
pub use form::{divide_by_norm, multiply_by_norm, squared_norm_form, FormBasis, HermitianForm, Signature};
pub use unitary::{cayley, is_j_unitary, random_j_unitary};
