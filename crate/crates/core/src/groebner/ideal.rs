use crate::arith::Matrix;
use crate::error::{Error, Result};
use crate::poly::{Polynomial, Roster};

/// A homogeneous ideal given by nonzero homogeneous generators over a
/// common roster.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    generators: Vec<Polynomial>,
}

impl Ideal {
    /// Zero generators are dropped; at least one nonzero generator must remain.
    pub fn new(generators: Vec<Polynomial>) -> Result<Self> {
        let generators: Vec<Polynomial> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        let first = generators.first().ok_or(Error::EmptyIdeal)?;
        if generators.iter().any(|g| g.roster() != first.roster()) {
            return Err(Error::RosterMismatch);
        }
        if generators.iter().any(|g| !g.is_homogeneous()) {
            return Err(Error::NotHomogeneous);
        }
        Ok(Ideal { generators })
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn roster(&self) -> &Roster {
        self.generators[0].roster()
    }

    pub fn nvars(&self) -> usize {
        self.roster().len()
    }

    /// `I o T`: every generator precomposed with the linear map `T`.
    pub fn transform(&self, t: &Matrix) -> Result<Ideal> {
        let generators = self.generators.iter().map(|g| g.substitute_linear(t)).collect::<Result<Vec<_>>>()?;
        Ideal::new(generators)
    }
}
