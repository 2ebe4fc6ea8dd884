use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{Matrix, TowerElement};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::hermitian::{divide_by_norm, squared_norm_form, HermitianForm, Signature};
use crate::poly::{MonomialOrder, Polynomial, Roster};

/// Affine coordinates `z1..zn`.
pub fn source_roster(n: usize) -> Roster {
    Roster::numbered("z", 1, n)
}

/// Homogeneous coordinates `Z0..Zn`.
pub fn homogeneous_roster(n: usize) -> Roster {
    Roster::numbered("Z", 0, n + 1)
}

/// `z -> (numerators) / denominator` from `Q(a, b)` to `Q(A, B)`, negative
/// target components first.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalMap {
    name: Option<String>,
    source: Signature,
    target: Signature,
    numerators: Vec<Polynomial>,
    denominator: Polynomial,
    params: BTreeMap<String, String>,
}

impl RationalMap {
    pub fn new(source: Signature, target: Signature, numerators: Vec<Polynomial>, denominator: Polynomial) -> Result<Self> {
        let roster = source_roster(source.affine_dim());
        if numerators.len() != target.affine_dim() {
            return Err(Error::InvalidMap(format!(
                "target {target} needs {} components, got {}",
                target.affine_dim(),
                numerators.len()
            )));
        }
        if denominator.is_zero() {
            return Err(Error::InvalidMap("denominator is identically zero".into()));
        }
        if numerators.iter().chain([&denominator]).any(|p| p.roster() != &roster) {
            return Err(Error::InvalidMap(format!("components must be polynomials in {}", roster.names().join(", "))));
        }
        Ok(RationalMap { name: None, source, target, numerators, denominator, params: BTreeMap::new() })
    }

    /// Polynomial map (denominator 1).
    pub fn polynomial(source: Signature, target: Signature, components: Vec<Polynomial>) -> Result<Self> {
        let one = Polynomial::one(source_roster(source.affine_dim()));
        Self::new(source, target, components, one)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn with_param(mut self, key: impl Into<String>, value: impl Into<String>) -> Self {
        self.params.insert(key.into(), value.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn label(&self) -> String {
        self.name.clone().unwrap_or_else(|| "custom".into())
    }

    pub fn source(&self) -> Signature {
        self.source
    }

    pub fn target(&self) -> Signature {
        self.target
    }

    pub fn numerators(&self) -> &[Polynomial] {
        &self.numerators
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn params(&self) -> &BTreeMap<String, String> {
        &self.params
    }

    pub fn roster(&self) -> &Roster {
        self.denominator.roster()
    }

    /// Maximal degree among the denominator and the numerators.
    pub fn degree(&self) -> u32 {
        self.numerators.iter().chain([&self.denominator]).filter_map(Polynomial::total_degree).max().unwrap_or(0)
    }

    /// The denominator followed by the numerators. Their span is the affine
    /// span of the map multiplied by the denominator.
    pub fn afspan(&self) -> Vec<Polynomial> {
        std::iter::once(&self.denominator).chain(&self.numerators).filter(|p| !p.is_zero()).cloned().collect()
    }
}

impl fmt::Display for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ord = MonomialOrder::GrLex;
        let nums: Vec<String> = self.numerators.iter().map(|p| p.display_with(ord)).collect();
        write!(f, "({})", nums.join(", "))?;
        if self.denominator != Polynomial::one(self.roster().clone()) {
            write!(f, " / ({})", self.denominator.display_with(ord))?;
        }
        write!(f, "  : Q{} -> Q{}", self.source, self.target)
    }
}

impl fmt::Debug for RationalMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalMap[{}]({self})", self.label())
    }
}

/// Homogeneous components `(F_0, ..., F_N)` of common degree, `F_0` the
/// homogenized denominator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomogenizedMap {
    source: Signature,
    target: Signature,
    degree: u32,
    components: Vec<Polynomial>,
}

impl HomogenizedMap {
    pub fn new(source: Signature, target: Signature, components: Vec<Polynomial>) -> Result<Self> {
        let roster = homogeneous_roster(source.affine_dim());
        if components.len() != target.projective_len() {
            return Err(Error::InvalidMap(format!(
                "target {target} needs {} homogeneous components, got {}",
                target.projective_len(),
                components.len()
            )));
        }
        if components.iter().any(|p| p.roster() != &roster) {
            return Err(Error::RosterMismatch);
        }
        if components[0].is_zero() {
            return Err(Error::InvalidMap("component 0 (the denominator) vanishes".into()));
        }
        if components.iter().any(|p| !p.is_homogeneous()) {
            return Err(Error::NotHomogeneous);
        }
        let degree = components[0].total_degree().expect("nonzero");
        if components.iter().filter_map(Polynomial::total_degree).any(|d| d != degree) {
            return Err(Error::DegreeMismatch);
        }
        Ok(HomogenizedMap { source, target, degree, components })
    }

    pub fn source(&self) -> Signature {
        self.source
    }

    pub fn target(&self) -> Signature {
        self.target
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn components(&self) -> &[Polynomial] {
        &self.components
    }

    pub fn roster(&self) -> &Roster {
        self.components[0].roster()
    }

    /// Sets `Z0 = 1`: component 0 becomes the denominator.
    pub fn dehomogenize(&self) -> Result<RationalMap> {
        let roster = source_roster(self.source.affine_dim());
        let mut parts = self
            .components
            .iter()
            .map(|p| p.dehomogenize("Z0").and_then(|q| q.with_roster(roster.clone())))
            .collect::<Result<Vec<_>>>()?;
        let denominator = parts.remove(0);
        RationalMap::new(self.source, self.target, parts, denominator)
    }

    /// `chi o F o tau`: components recombined by `chi` after substituting
    /// `Z -> tau Z`.
    pub fn compose(&self, chi: &Matrix, tau: &Matrix) -> Result<HomogenizedMap> {
        let moved = self.components.iter().map(|p| p.substitute_linear(tau)).collect::<Result<Vec<_>>>()?;
        let k = moved.len();
        if chi.rows() != k || chi.cols() != k {
            return Err(Error::DimensionMismatch { expected: k, found: chi.rows().max(chi.cols()) });
        }
        let roster = self.roster().clone();
        let components = (0..k)
            .map(|r| {
                moved.iter().enumerate().try_fold(Polynomial::zero(roster.clone()), |acc, (c, p)| {
                    let coeff: &TowerElement = &chi[(r, c)];
                    if coeff.is_zero() {
                        Ok(acc)
                    } else {
                        acc.try_add(&p.scale(coeff))
                    }
                })
            })
            .collect::<Result<Vec<_>>>()?;
        HomogenizedMap::new(self.source, self.target, components)
    }
}

/// Homogenizes every component to the common degree `d` with `Z0`,
/// without cancelling common factors.
pub fn homogenize_map(f: &RationalMap) -> HomogenizedMap {
    let d = f.degree();
    let roster = homogeneous_roster(f.source.affine_dim());
    let components = std::iter::once(&f.denominator)
        .chain(&f.numerators)
        .map(|p| p.homogenize(d, "Z0").and_then(|q| q.with_roster(roster.clone())).expect("d bounds every degree"))
        .collect();
    HomogenizedMap { source: f.source, target: f.target, degree: d, components }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verification {
    pub valid: bool,
    pub side: i8,
}

/// The form `||F||^2_{B+1}` of the homogenized map.
pub fn target_form(f: &HomogenizedMap) -> Result<HermitianForm> {
    squared_norm_form(&f.components, f.target.negatives())
}

/// The quotient `q` with `||F||^2_{B+1} = ||Z||^2_{b+1} q`, and its side.
pub fn quotient(f: &HomogenizedMap) -> Result<(HermitianForm, i8)> {
    divide_by_norm(&target_form(f)?, f.source)
}

/// Checks that `F` takes the source hyperquadric into the target one.
pub fn verify_map(f: &HomogenizedMap) -> Verification {
    match quotient(f) {
        Ok((_, side)) => Verification { valid: true, side },
        Err(_) => Verification { valid: false, side: 1 },
    }
}

/// The ideal generated by the nonzero components.
pub fn component_ideal(f: &HomogenizedMap) -> Result<Ideal> {
    let gens: Vec<Polynomial> = f.components.iter().filter(|p| !p.is_zero()).cloned().collect();
    if gens.is_empty() {
        return Err(Error::AllComponentsZero);
    }
    Ideal::new(gens)
}
