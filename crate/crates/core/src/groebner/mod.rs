//! Groebner bases, initial monomial ideals and Borel-fixedness.

mod buchberger;
mod ideal;
mod monomial_ideal;

pub use buchberger::{buchberger, initial_ideal, is_groebner_basis, normal_form};
pub use ideal::Ideal;
pub use monomial_ideal::MonomialIdeal;
