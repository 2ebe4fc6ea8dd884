use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use super::{MonomialOrder, MultiIndex};
use crate::arith::{Matrix, Rational, TowerElement};
use crate::error::{Error, Result};

/// Ordered list of variable names shared by polynomials.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Roster(Arc<[String]>);

impl Roster {
    pub fn new<S: AsRef<str>>(names: impl IntoIterator<Item = S>) -> Self {
        Roster(names.into_iter().map(|s| s.as_ref().to_string()).collect())
    }

    /// `prefix{start}, prefix{start+1}, ...` with `n` names.
    pub fn numbered(prefix: &str, start: usize, n: usize) -> Self {
        Roster((start..start + n).map(|k| format!("{prefix}{k}")).collect())
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }

    /// A roster with `name` inserted in front.
    pub fn prepend(&self, name: &str) -> Roster {
        Roster(std::iter::once(name.to_string()).chain(self.0.iter().cloned()).collect())
    }

    pub fn without_first(&self) -> Roster {
        Roster(self.0[1..].iter().cloned().collect())
    }
}

impl fmt::Debug for Roster {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &*self.0)
    }
}

/// Sparse multivariate polynomial over the tower field.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    roster: Roster,
    terms: BTreeMap<MultiIndex, TowerElement>,
}

impl Polynomial {
    pub fn zero(roster: Roster) -> Self {
        Polynomial { roster, terms: BTreeMap::new() }
    }

    pub fn constant(roster: Roster, c: TowerElement) -> Self {
        let n = roster.len();
        Self::monomial(roster, MultiIndex::one(n), c)
    }

    pub fn one(roster: Roster) -> Self {
        Self::constant(roster, TowerElement::one())
    }

    pub fn var(roster: Roster, j: usize) -> Self {
        let n = roster.len();
        Self::monomial(roster, MultiIndex::var(n, j), TowerElement::one())
    }

    pub fn monomial(roster: Roster, m: MultiIndex, c: TowerElement) -> Self {
        assert_eq!(m.len(), roster.len(), "monomial length must match roster");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { roster, terms }
    }

    /// Sums the given terms; repeated monomials are combined.
    pub fn from_terms(roster: Roster, terms: impl IntoIterator<Item = (MultiIndex, TowerElement)>) -> Result<Self> {
        let mut p = Polynomial::zero(roster);
        for (m, c) in terms {
            if m.len() != p.roster.len() {
                return Err(Error::LengthMismatch(m.len(), p.roster.len()));
            }
            p.add_term(m, &c);
        }
        Ok(p)
    }

    fn add_term(&mut self, m: MultiIndex, c: &TowerElement) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn roster(&self) -> &Roster {
        &self.roster
    }

    pub fn nvars(&self) -> usize {
        self.roster.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &TowerElement)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &MultiIndex) -> TowerElement {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> TowerElement {
        self.coefficient(&MultiIndex::one(self.nvars()))
    }

    /// Highest total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(MultiIndex::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(MultiIndex::degree);
        match degrees.next() {
            None => true,
            Some(d) => degrees.all(|e| e == d),
        }
    }

    fn check_roster(&self, other: &Polynomial) -> Result<()> {
        if self.roster != other.roster {
            return Err(Error::RosterMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_roster(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_roster(other)?;
        let mut out = Polynomial::zero(self.roster.clone());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial { roster: self.roster.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    pub fn scale(&self, c: &TowerElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.roster.clone());
        }
        Polynomial { roster: self.roster.clone(), terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn scale_rational(&self, q: &Rational) -> Polynomial {
        self.scale(&TowerElement::from_rational(q.clone()))
    }

    pub fn mul_monomial(&self, m: &MultiIndex) -> Polynomial {
        Polynomial { roster: self.roster.clone(), terms: self.terms.iter().map(|(a, c)| (a.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.roster.clone());
        for _ in 0..e {
            acc = acc.try_mul(self).expect("same roster");
        }
        acc
    }

    /// Conjugates every coefficient.
    pub fn conj(&self) -> Polynomial {
        Polynomial { roster: self.roster.clone(), terms: self.terms.iter().map(|(m, c)| (m.clone(), c.conj())).collect() }
    }

    /// Terms sorted from the greatest monomial to the least under `ord`.
    pub fn sorted_terms(&self, ord: MonomialOrder) -> Vec<(&MultiIndex, &TowerElement)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| ord.cmp(b.0, a.0));
        v
    }

    pub fn leading_term(&self, ord: MonomialOrder) -> Option<(&MultiIndex, &TowerElement)> {
        self.terms.iter().max_by(|a, b| ord.cmp(a.0, b.0))
    }

    /// The initial (greatest) monomial under `ord`.
    pub fn leading_monomial(&self, ord: MonomialOrder) -> Result<MultiIndex> {
        self.leading_term(ord).map(|(m, _)| m.clone()).ok_or(Error::ZeroPolynomial)
    }

    /// Replaces every variable `Z_j` by `images[j]`; all images share a roster.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial> {
        if images.len() != self.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), found: images.len() });
        }
        let target = match images.first() {
            Some(p) => p.roster.clone(),
            None => return Ok(Polynomial::constant(Roster::new(Vec::<String>::new()), self.constant_term())),
        };
        if images.iter().any(|p| p.roster != target) {
            return Err(Error::RosterMismatch);
        }
        let max_exp: Vec<u32> = (0..self.nvars())
            .map(|j| self.terms.keys().map(|m| m.exponents()[j]).max().unwrap_or(0))
            .collect();
        // powers[j][k] = images[j]^k
        let powers: Vec<Vec<Polynomial>> = images
            .iter()
            .zip(&max_exp)
            .map(|(img, &top)| {
                let mut v = vec![Polynomial::one(target.clone())];
                for k in 1..=top as usize {
                    let next = v[k - 1].try_mul(img).expect("same roster");
                    v.push(next);
                }
                v
            })
            .collect();
        let mut out = Polynomial::zero(target.clone());
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target.clone(), c.clone());
            for (j, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = term.try_mul(&powers[j][e as usize])?;
                }
            }
            for (tm, tc) in term.terms {
                out.add_term(tm, &tc);
            }
        }
        Ok(out)
    }

    /// `p(M Z)`: each `Z_j` becomes `sum_k M[j][k] Z_k`.
    pub fn substitute_linear(&self, m: &Matrix) -> Result<Polynomial> {
        let n = self.nvars();
        if m.rows() != n || m.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, found: m.rows().max(m.cols()) });
        }
        let zero = vec![TowerElement::zero(); n];
        self.substitute_affine(m, &zero)
    }

    /// `p(M z + c)`.
    pub fn substitute_affine(&self, m: &Matrix, shift: &[TowerElement]) -> Result<Polynomial> {
        let n = self.nvars();
        if m.rows() != n || m.cols() != n || shift.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: if shift.len() != n { shift.len() } else { m.rows().max(m.cols()) } });
        }
        let images: Vec<Polynomial> = (0..n)
            .map(|j| {
                let mut terms: Vec<(MultiIndex, TowerElement)> =
                    (0..n).map(|k| (MultiIndex::var(n, k), m[(j, k)].clone())).collect();
                terms.push((MultiIndex::one(n), shift[j].clone()));
                Polynomial::from_terms(self.roster.clone(), terms).expect("lengths agree")
            })
            .collect();
        if n == 0 {
            return Ok(self.clone());
        }
        self.substitute(&images)
    }

    /// Multiplies each term by `name^(d - |alpha|)`, with `name` prepended to
    /// the roster as the new first variable.
    pub fn homogenize(&self, d: u32, name: &str) -> Result<Polynomial> {
        let actual = self.total_degree().unwrap_or(0);
        if d < actual {
            return Err(Error::DegreeTooSmall { requested: d, actual });
        }
        Ok(Polynomial {
            roster: self.roster.prepend(name),
            terms: self.terms.iter().map(|(m, c)| (m.prepend(d - m.degree()), c.clone())).collect(),
        })
    }

    /// Sets the variable `name` to 1 and removes it from the roster.
    pub fn dehomogenize(&self, name: &str) -> Result<Polynomial> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        let j = self.roster.position(name).ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        let names: Vec<&String> = self.roster.names().iter().enumerate().filter(|(k, _)| *k != j).map(|(_, s)| s).collect();
        let roster = Roster::new(names);
        let mut out = Polynomial::zero(roster);
        for (m, c) in &self.terms {
            let e: Vec<u32> = m.exponents().iter().enumerate().filter(|(k, _)| *k != j).map(|(_, &x)| x).collect();
            out.add_term(MultiIndex::new(e), c);
        }
        Ok(out)
    }

    /// Same coefficients over a renamed roster of equal length.
    pub fn with_roster(&self, roster: Roster) -> Result<Polynomial> {
        if roster.len() != self.nvars() {
            return Err(Error::DimensionMismatch { expected: self.nvars(), found: roster.len() });
        }
        Ok(Polynomial { roster, terms: self.terms.clone() })
    }

    /// Renders with terms in descending order of `ord`.
    pub fn display_with(&self, ord: MonomialOrder) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (pos, (m, c)) in self.sorted_terms(ord).into_iter().enumerate() {
            let term = render_term(m, c, self.roster.names());
            if pos == 0 {
                out.push_str(&term);
            } else if let Some(rest) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&term);
            }
        }
        out
    }
}

fn render_term(m: &MultiIndex, c: &TowerElement, names: &[String]) -> String {
    let (coeff, compound) = c.render();
    if m.is_one() {
        return if compound { format!("({coeff})") } else { coeff };
    }
    let mono = m.render(names);
    if c.is_one() {
        mono
    } else if (-c).is_one() {
        format!("-{mono}")
    } else if compound {
        format!("({coeff})*{mono}")
    } else {
        format!("{coeff}*{mono}")
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(MonomialOrder::GrevLex))
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roster3() -> Roster {
        Roster::numbered("Z", 0, 3)
    }

    fn z(j: usize) -> Polynomial {
        Polynomial::var(roster3(), j)
    }

    fn add(a: &Polynomial, b: &Polynomial) -> Polynomial {
        a.try_add(b).unwrap()
    }

    fn mul(a: &Polynomial, b: &Polynomial) -> Polynomial {
        a.try_mul(b).unwrap()
    }

    #[test]
    fn leading_monomial_examples() {
        // Z1^2 - sqrt3 Z1Z2 + Z2^2 - Z1Z0: within degree 2, Z0Z1 is leading
        let s3 = TowerElement::sqrt3();
        let p = add(
            &add(&mul(&z(1), &z(1)), &mul(&z(1), &z(2)).scale(&-s3)),
            &add(&mul(&z(2), &z(2)), &mul(&z(1), &z(0)).neg()),
        );
        assert_eq!(p.leading_monomial(MonomialOrder::GrevLex).unwrap(), MultiIndex::new(vec![1, 1, 0]));

        let r2 = Roster::new(["z1", "z2"]);
        let p = add(&Polynomial::one(r2.clone()), &Polynomial::var(r2.clone(), 0));
        assert_eq!(p.leading_monomial(MonomialOrder::GreenGrLex).unwrap(), MultiIndex::one(2));

        let p = z(2).pow(3);
        assert_eq!(p.leading_monomial(MonomialOrder::GrevLex).unwrap(), MultiIndex::new(vec![0, 0, 3]));
        assert_eq!(Polynomial::zero(roster3()).leading_monomial(MonomialOrder::GrLex), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn substitute_linear_examples() {
        let r = Roster::numbered("Z", 0, 2);
        let z0 = Polynomial::var(r.clone(), 0);
        let z1 = Polynomial::var(r.clone(), 1);
        let p = mul(&z0, &z0);
        let m = Matrix::from_i64_rows(&[&[1, 1], &[0, 1]]).unwrap();
        let expected = add(&add(&mul(&z0, &z0), &mul(&z0, &z1).scale(&TowerElement::from_int(2))), &mul(&z1, &z1));
        assert_eq!(p.substitute_linear(&m).unwrap(), expected);

        let swap = Matrix::from_i64_rows(&[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(mul(&z0, &z1).substitute_linear(&swap).unwrap(), mul(&z0, &z1));
        assert_eq!(p.substitute_linear(&Matrix::identity(2)).unwrap(), p);
        assert!(matches!(p.substitute_linear(&Matrix::identity(3)), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn substitute_affine_examples() {
        let r = Roster::new(["z1", "z2"]);
        let z1 = Polynomial::var(r.clone(), 0);
        let p = mul(&z1, &z1);
        let shift = [TowerElement::one(), TowerElement::zero()];
        let got = p.substitute_affine(&Matrix::identity(2), &shift).unwrap();
        let expected = add(&add(&Polynomial::one(r.clone()), &z1.scale(&TowerElement::from_int(2))), &p);
        assert_eq!(got, expected);
    }

    #[test]
    fn homogenize_examples() {
        let r = Roster::new(["z1", "z2"]);
        let p = mul(&Polynomial::var(r.clone(), 0), &Polynomial::var(r.clone(), 1));
        assert_eq!(p.homogenize(2, "Z0").unwrap().display_with(MonomialOrder::GrevLex), "z1*z2");
        assert_eq!(p.homogenize(3, "Z0").unwrap().display_with(MonomialOrder::GrevLex), "Z0*z1*z2");
        let one = Polynomial::one(r.clone());
        assert_eq!(one.homogenize(3, "Z0").unwrap().display_with(MonomialOrder::GrevLex), "Z0^3");
        assert_eq!(p.homogenize(1, "Z0"), Err(Error::DegreeTooSmall { requested: 1, actual: 2 }));
        let h = add(&p, &one).homogenize(4, "Z0").unwrap();
        assert_eq!(h.dehomogenize("Z0").unwrap(), add(&p, &one));
    }

    #[test]
    fn display_ordering_and_coefficients() {
        let p = add(&add(&mul(&z(1), &z(2)), &mul(&z(0), &z(0)).scale(&TowerElement::from_ratio(-3, 2))), &z(2).pow(2).scale(&(TowerElement::one() + TowerElement::i())));
        assert_eq!(p.display_with(MonomialOrder::GrevLex), "-3/2*Z0^2 + Z1*Z2 + (1 + i)*Z2^2");
    }
}
