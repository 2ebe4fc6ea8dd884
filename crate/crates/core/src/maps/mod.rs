//! Rational maps between hyperquadrics, their homogenizations, the
//! invariant pipeline and the catalog of known maps.

mod catalog;
mod invariants;
mod model;

pub use catalog::{catalog, fhjz, lebl7, CatalogEntry, CATALOG};
pub use invariants::{compare, invariants, Comparison, InvariantDiff, InvariantReport, Timings, Verdict};
pub use model::{
    component_ideal, homogeneous_roster, homogenize_map, quotient, source_roster, target_form, verify_map,
    HomogenizedMap, RationalMap, Verification,
};
