use std::fmt;

use crate::arith::Matrix;
use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, MultiIndex, Polynomial, Roster};

/// A subspace spanned by finitely many monomials, identified with the set
/// of those monomials.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialSubspace {
    roster: Roster,
    monomials: Vec<MultiIndex>,
}

impl MonomialSubspace {
    pub fn new(roster: Roster, monomials: impl IntoIterator<Item = MultiIndex>) -> Result<Self> {
        let mut monomials: Vec<MultiIndex> = monomials.into_iter().collect();
        if let Some(bad) = monomials.iter().find(|m| m.len() != roster.len()) {
            return Err(Error::LengthMismatch(bad.len(), roster.len()));
        }
        MonomialOrder::GreenGrLex.sort_descending(&mut monomials);
        monomials.dedup();
        Ok(MonomialSubspace { roster, monomials })
    }

    pub fn roster(&self) -> &Roster {
        &self.roster
    }

    pub fn monomials(&self) -> &[MultiIndex] {
        &self.monomials
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn contains(&self, m: &MultiIndex) -> bool {
        self.monomials.contains(m)
    }

    /// Affine-Borel-fixedness: whenever `z_j` divides a member, both
    /// `z^a / z_j` and `z^a z_l / z_j` (for every `l < j`) are members.
    pub fn is_affine_borel_fixed(&self) -> bool {
        self.monomials.iter().all(|m| {
            (0..m.len()).all(|j| {
                let Some(lowered) = m.drop_var(j) else {
                    return true;
                };
                self.contains(&lowered) && (0..j).all(|l| self.contains(&m.exchange(j, l).expect("z_j divides")))
            })
        })
    }

    pub fn sorted_by(&self, ord: MonomialOrder) -> Vec<MultiIndex> {
        let mut v = self.monomials.clone();
        ord.sort_descending(&mut v);
        v
    }

    pub fn render(&self, ord: MonomialOrder) -> Vec<String> {
        self.sorted_by(ord).iter().map(|m| m.render(self.roster.names())).collect()
    }

    pub fn display_with(&self, ord: MonomialOrder) -> String {
        self.render(ord).join(", ")
    }
}

impl fmt::Display for MonomialSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span{{{}}}", self.display_with(MonomialOrder::GreenGrLex))
    }
}

impl fmt::Debug for MonomialSubspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialSubspace({self})")
    }
}

/// Coefficient matrix of `xs` (one row per polynomial) with columns sorted
/// in descending `ord`; returns the matrix and the column monomials.
pub fn coefficient_matrix(xs: &[Polynomial], ord: MonomialOrder) -> (Matrix, Vec<MultiIndex>) {
    let mut columns: Vec<MultiIndex> = xs.iter().flat_map(|p| p.terms().map(|(m, _)| m.clone())).collect();
    ord.sort_descending(&mut columns);
    columns.dedup();
    let m = Matrix::from_fn(xs.len(), columns.len(), |r, c| xs[r].coefficient(&columns[c]));
    (m, columns)
}

/// `in(X)`: the initial monomials of all elements of `span(xs)`.
///
/// Row reduction with columns in descending order puts the pivots exactly
/// at the initial monomials of a basis with distinct initial monomials.
pub fn initial_subspace(roster: &Roster, xs: &[Polynomial], ord: MonomialOrder) -> Result<MonomialSubspace> {
    if xs.iter().any(|p| p.roster() != roster) {
        return Err(Error::RosterMismatch);
    }
    let (mut m, columns) = coefficient_matrix(xs, ord);
    let pivots = m.rref();
    MonomialSubspace::new(roster.clone(), pivots.into_iter().map(|c| columns[c].clone()))
}
