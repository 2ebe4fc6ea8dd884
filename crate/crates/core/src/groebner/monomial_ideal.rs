use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, MultiIndex, Roster};

/// A monomial ideal given by its minimal generators.
///
/// Generators are stored in a canonical order (Green grevlex), so
/// structural equality is equality of ideals over the same roster.
#[derive(Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    roster: Roster,
    generators: Vec<MultiIndex>,
}

impl MonomialIdeal {
    /// Minimalizes the given monomials: drops duplicates and any monomial
    /// divisible by another.
    pub fn from_generators(roster: Roster, monomials: impl IntoIterator<Item = MultiIndex>) -> Result<Self> {
        let mut all: Vec<MultiIndex> = monomials.into_iter().collect();
        if let Some(bad) = all.iter().find(|m| m.len() != roster.len()) {
            return Err(Error::LengthMismatch(bad.len(), roster.len()));
        }
        all.sort_by_key(MultiIndex::degree);
        all.dedup();
        let mut kept: Vec<MultiIndex> = Vec::new();
        for m in all {
            if !kept.iter().any(|k| k.divides(&m)) {
                kept.push(m);
            }
        }
        MonomialOrder::GreenGrevLex.sort_descending(&mut kept);
        Ok(MonomialIdeal { roster, generators: kept })
    }

    /// The zero ideal (no generators).
    pub fn zero(roster: Roster) -> Self {
        MonomialIdeal { roster, generators: Vec::new() }
    }

    pub fn unit(roster: Roster) -> Self {
        let n = roster.len();
        MonomialIdeal { roster, generators: vec![MultiIndex::one(n)] }
    }

    pub fn roster(&self) -> &Roster {
        &self.roster
    }

    pub fn generators(&self) -> &[MultiIndex] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.iter().any(MultiIndex::is_one)
    }

    /// Membership: some generator divides `m`.
    pub fn contains(&self, m: &MultiIndex) -> Result<bool> {
        if m.len() != self.roster.len() {
            return Err(Error::LengthMismatch(m.len(), self.roster.len()));
        }
        Ok(self.generators.iter().any(|g| g.divides(m)))
    }

    /// Equality of minimal generating sets; rosters must agree.
    pub fn equals(&self, other: &MonomialIdeal) -> Result<bool> {
        if self.roster != other.roster {
            return Err(Error::RosterMismatch);
        }
        Ok(self.generators == other.generators)
    }

    /// Borel-fixedness: for every generator `Z^a` divisible by `Z_j` and every
    /// `l < j`, the exchange `(Z_l / Z_j) Z^a` is in the ideal.
    pub fn is_borel_fixed(&self) -> bool {
        self.generators.iter().all(|g| {
            (0..g.len()).all(|j| {
                (0..j).all(|l| match g.exchange(j, l) {
                    Some(moved) => self.generators.iter().any(|h| h.divides(&moved)),
                    None => true,
                })
            })
        })
    }

    /// Minimal generators of exactly degree `d`.
    pub fn generators_of_degree(&self, d: u32) -> Vec<MultiIndex> {
        self.generators.iter().filter(|g| g.degree() == d).cloned().collect()
    }

    pub fn sorted_by(&self, ord: MonomialOrder) -> Vec<MultiIndex> {
        let mut g = self.generators.clone();
        ord.sort_descending(&mut g);
        g
    }

    /// Generator strings, lowest degree first and descending `ord` within a
    /// degree.
    pub fn render(&self, ord: MonomialOrder) -> Vec<String> {
        self.sorted_by(ord.green()).iter().map(|m| m.render(self.roster.names())).collect()
    }

    pub fn display_with(&self, ord: MonomialOrder) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.render(ord).join(", ")
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.display_with(MonomialOrder::GrevLex))
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> MultiIndex {
        MultiIndex::new(e.to_vec())
    }

    fn ideal(gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_generators(Roster::numbered("Z", 0, 3), gens.iter().map(|g| m(g))).unwrap()
    }

    #[test]
    fn minimalization_drops_multiples() {
        let a = ideal(&[&[2, 0, 0], &[2, 1, 0], &[0, 1, 1], &[2, 0, 0]]);
        assert_eq!(a.generators(), &[m(&[2, 0, 0]), m(&[0, 1, 1])]);
        for w in a.generators().windows(2) {
            assert!(!w[0].divides(&w[1]) && !w[1].divides(&w[0]));
        }
    }

    #[test]
    fn membership_and_equality() {
        let a = ideal(&[&[2, 0, 0]]);
        assert!(a.contains(&m(&[2, 0, 5])).unwrap());
        assert!(!a.contains(&m(&[1, 3, 5])).unwrap());
        assert!(a.equals(&a).unwrap());
        let grevlex = ideal(&[&[2, 0, 0], &[1, 1, 0], &[0, 3, 0]]);
        let grlex = ideal(&[&[2, 0, 0], &[1, 1, 0], &[1, 0, 2], &[0, 4, 0]]);
        assert!(!grevlex.equals(&grlex).unwrap());
        let other = MonomialIdeal::unit(Roster::numbered("X", 0, 3));
        assert_eq!(a.equals(&other), Err(Error::RosterMismatch));
        assert_eq!(a.contains(&m(&[1])), Err(Error::LengthMismatch(1, 3)));
    }

    #[test]
    fn borel_fixed_examples() {
        assert!(ideal(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).is_borel_fixed());
        assert!(ideal(&[&[2, 0, 0], &[1, 1, 0], &[0, 3, 0]]).is_borel_fixed());
        assert!(!ideal(&[&[2, 0, 0], &[0, 1, 1]]).is_borel_fixed());
        assert!(!ideal(&[&[0, 1, 0]]).is_borel_fixed());
    }

    #[test]
    fn display_order() {
        let a = ideal(&[&[0, 3, 0], &[1, 1, 0], &[2, 0, 0]]);
        assert_eq!(a.display_with(MonomialOrder::GrevLex), "Z0^2, Z0*Z1, Z1^3");
    }
}
