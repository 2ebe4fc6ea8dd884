use crate::error::Result;
use crate::gin::{gin_ideal, gin_subspace, GinConfig, MonomialSubspace};
use crate::groebner::{Ideal, MonomialIdeal};
use crate::maps::{quotient, HomogenizedMap};
use crate::poly::{MonomialOrder, Polynomial};

use super::HermitianForm;

/// How a basis of the column space is extracted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PivotStrategy {
    /// The original pivot columns of the matrix.
    #[default]
    PivotColumns,
    /// The nonzero rows of the reduced echelon form of the transpose.
    ReducedRows,
}

/// A basis of the span `H(q)` of any holomorphic decomposition of `q`,
/// read off the column space of its coefficient matrix.
pub fn holomorphic_decomposition_span(q: &HermitianForm) -> Vec<Polynomial> {
    holomorphic_decomposition_span_with(q, PivotStrategy::PivotColumns)
}

pub fn holomorphic_decomposition_span_with(q: &HermitianForm, strategy: PivotStrategy) -> Vec<Polynomial> {
    let m = q.matrix();
    let vectors: Vec<Vec<_>> = match strategy {
        PivotStrategy::PivotColumns => m.clone().rref().into_iter().map(|c| m.column(c)).collect(),
        PivotStrategy::ReducedRows => {
            let mut t = m.transpose();
            let rank = t.rref().len();
            (0..rank).map(|r| t.row(r).to_vec()).collect()
        }
    };
    vectors
        .into_iter()
        .map(|v| {
            let terms = q.basis().iter().cloned().zip(v).filter(|(_, c)| !c.is_zero());
            Polynomial::from_terms(q.roster().clone(), terms).expect("basis matches roster")
        })
        .collect()
}

/// gin of the ideal generated by `H(q)`; the zero form gives the zero ideal.
pub fn quotient_gin_of_form(q: &HermitianForm, cfg: &GinConfig, ord: MonomialOrder) -> Result<MonomialIdeal> {
    let span = holomorphic_decomposition_span(q);
    if span.is_empty() {
        return Ok(MonomialIdeal::zero(q.roster().clone()));
    }
    gin_ideal(&Ideal::new(span)?, ord, cfg)
}

/// gin of the ideal generated by `H(q)` for the quotient `q` of `f`.
pub fn quotient_gin(f: &HomogenizedMap, cfg: &GinConfig, ord: MonomialOrder) -> Result<MonomialIdeal> {
    let (q, _) = quotient(f)?;
    quotient_gin_of_form(&q, cfg, ord)
}

/// gin of the affine span of `H(r)` for a form over all monomials of
/// degree at most `d`.
pub fn real_form_gin(r: &HermitianForm, cfg: &GinConfig, ord: MonomialOrder) -> Result<MonomialSubspace> {
    let mut xs = vec![Polynomial::one(r.roster().clone())];
    xs.extend(holomorphic_decomposition_span(r));
    gin_subspace(r.roster(), &xs, ord, cfg)
}
