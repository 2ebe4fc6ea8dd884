use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{Matrix, TowerElement};
use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, MultiIndex, Polynomial, Roster};

/// Signature `(a, b)`: `a` positive and `b` negative squares in the affine
/// hyperquadric, so its homogenization carries `b + 1` negative squares.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "[usize; 2]", try_from = "[usize; 2]")]
pub struct Signature {
    a: usize,
    b: usize,
}

impl Signature {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a == 0 {
            return Err(Error::InvalidParam { name: "signature".into(), reason: "need at least one positive square".into() });
        }
        Ok(Signature { a, b })
    }

    /// Signature of the unit ball in `C^n`.
    pub fn ball(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    pub fn a(self) -> usize {
        self.a
    }

    pub fn b(self) -> usize {
        self.b
    }

    /// Number of affine coordinates, `a + b`.
    pub fn affine_dim(self) -> usize {
        self.a + self.b
    }

    /// Number of homogeneous coordinates, `a + b + 1`.
    pub fn projective_len(self) -> usize {
        self.a + self.b + 1
    }

    /// Number of negative squares of the homogeneous form.
    pub fn negatives(self) -> usize {
        self.b + 1
    }

    /// Diagonal entries of `J`: `-1` on the first `b + 1` slots, `+1` after.
    pub fn epsilon(self) -> Vec<i64> {
        (0..self.projective_len()).map(|j| if j < self.negatives() { -1 } else { 1 }).collect()
    }

    pub fn j_matrix(self) -> Matrix {
        let eps = self.epsilon();
        let n = eps.len();
        Matrix::from_fn(n, n, |r, c| if r == c { TowerElement::from_int(eps[r]) } else { TowerElement::zero() })
    }
}

impl From<Signature> for [usize; 2] {
    fn from(s: Signature) -> Self {
        [s.a, s.b]
    }
}

impl TryFrom<[usize; 2]> for Signature {
    type Error = Error;
    fn try_from([a, b]: [usize; 2]) -> Result<Self> {
        Signature::new(a, b)
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormBasis {
    /// All monomials of degree exactly `d`.
    Homogeneous(u32),
    /// All monomials of degree at most `d`.
    UpTo(u32),
}

impl FormBasis {
    pub fn degree(self) -> u32 {
        match self {
            FormBasis::Homogeneous(d) | FormBasis::UpTo(d) => d,
        }
    }

    fn monomials(self, n: usize) -> Vec<MultiIndex> {
        let mut v = match self {
            FormBasis::Homogeneous(d) => MultiIndex::all_of_degree(n, d),
            FormBasis::UpTo(d) => MultiIndex::all_up_to_degree(n, d),
        };
        MonomialOrder::GreenGrevLex.sort_descending(&mut v);
        v
    }
}

/// The real polynomial `sum M[a][b] Z^a conj(Z)^b` with `M` Hermitian.
#[derive(Clone, PartialEq, Eq)]
pub struct HermitianForm {
    roster: Roster,
    kind: FormBasis,
    basis: Vec<MultiIndex>,
    matrix: Matrix,
}

impl HermitianForm {
    pub fn zero(roster: Roster, kind: FormBasis) -> Self {
        let basis = kind.monomials(roster.len());
        let matrix = Matrix::zeros(basis.len(), basis.len());
        HermitianForm { roster, kind, basis, matrix }
    }

    /// Wraps `matrix`, indexed by [`HermitianForm::basis`] order.
    pub fn from_matrix(roster: Roster, kind: FormBasis, matrix: Matrix) -> Result<Self> {
        let basis = kind.monomials(roster.len());
        if matrix.rows() != basis.len() || matrix.cols() != basis.len() {
            return Err(Error::DimensionMismatch { expected: basis.len(), found: matrix.rows().max(matrix.cols()) });
        }
        let form = HermitianForm { roster, kind, basis, matrix };
        form.check_hermitian()?;
        Ok(form)
    }

    /// Builds the form from a polynomial in `2n` variables whose first `n`
    /// stand for `Z` and last `n` for `conj(Z)`.
    pub fn from_bipolynomial(roster: Roster, kind: FormBasis, p: &Polynomial) -> Result<Self> {
        let n = roster.len();
        if p.nvars() != 2 * n {
            return Err(Error::DimensionMismatch { expected: 2 * n, found: p.nvars() });
        }
        let mut form = Self::zero(roster, kind);
        let index = form.index();
        for (m, c) in p.terms() {
            let (hol, anti) = m.exponents().split_at(n);
            let (alpha, beta) = (MultiIndex::new(hol.to_vec()), MultiIndex::new(anti.to_vec()));
            let (Some(&r), Some(&s)) = (index.get(&alpha), index.get(&beta)) else {
                return Err(Error::NotHermitian(format!(
                    "term {} lies outside the monomial basis of degree {}",
                    m.render(p.roster().names()),
                    kind.degree()
                )));
            };
            form.matrix[(r, s)] = c.clone();
        }
        form.check_hermitian()?;
        Ok(form)
    }

    pub fn to_bipolynomial(&self, conj_names: &[String]) -> Result<Polynomial> {
        let n = self.roster.len();
        if conj_names.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: conj_names.len() });
        }
        let roster = Roster::new(self.roster.names().iter().chain(conj_names));
        let mut terms = Vec::new();
        for (r, alpha) in self.basis.iter().enumerate() {
            for (s, beta) in self.basis.iter().enumerate() {
                let c = &self.matrix[(r, s)];
                if !c.is_zero() {
                    let e: Vec<u32> = alpha.exponents().iter().chain(beta.exponents()).copied().collect();
                    terms.push((MultiIndex::new(e), c.clone()));
                }
            }
        }
        Polynomial::from_terms(roster, terms)
    }

    fn check_hermitian(&self) -> Result<()> {
        let k = self.basis.len();
        for r in 0..k {
            for s in r..k {
                if self.matrix[(s, r)] != self.matrix[(r, s)].conj() {
                    return Err(Error::NotHermitian(format!(
                        "coefficient of {} times conj({}) is not the conjugate of its mirror",
                        self.basis[r].render(self.roster.names()),
                        self.basis[s].render(self.roster.names())
                    )));
                }
            }
        }
        Ok(())
    }

    fn index(&self) -> HashMap<MultiIndex, usize> {
        self.basis.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect()
    }

    pub fn roster(&self) -> &Roster {
        &self.roster
    }

    pub fn kind(&self) -> FormBasis {
        self.kind
    }

    pub fn degree(&self) -> u32 {
        self.kind.degree()
    }

    pub fn basis(&self) -> &[MultiIndex] {
        &self.basis
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// Coefficient of `Z^alpha conj(Z)^beta`.
    pub fn entry(&self, alpha: &MultiIndex, beta: &MultiIndex) -> TowerElement {
        let pos = |m: &MultiIndex| self.basis.iter().position(|b| b == m);
        match (pos(alpha), pos(beta)) {
            (Some(r), Some(s)) => self.matrix[(r, s)].clone(),
            _ => TowerElement::zero(),
        }
    }

    pub fn neg(&self) -> HermitianForm {
        HermitianForm { matrix: self.matrix.scale(&TowerElement::from_int(-1)), ..self.clone() }
    }

    /// Rewrites the form in new coordinates `Z -> T Z`.
    pub fn transform(&self, t: &Matrix) -> Result<HermitianForm> {
        let conj_names: Vec<String> = self.roster.names().iter().map(|s| format!("conj({s})")).collect();
        let p = self.to_bipolynomial(&conj_names)?;
        let n = self.roster.len();
        let tc = Matrix::from_fn(n, n, |r, c| t[(r, c)].conj());
        let big = Matrix::from_fn(2 * n, 2 * n, |r, c| match (r < n, c < n) {
            (true, true) => t[(r, c)].clone(),
            (false, false) => tc[(r - n, c - n)].clone(),
            _ => TowerElement::zero(),
        });
        Self::from_bipolynomial(self.roster.clone(), self.kind, &p.substitute_linear(&big)?)
    }

    pub fn display_with(&self, ord: MonomialOrder) -> String {
        let conj_names: Vec<String> = self.roster.names().iter().map(|s| format!("conj({s})")).collect();
        self.to_bipolynomial(&conj_names).expect("names match roster").display_with(ord)
    }
}

impl fmt::Display for HermitianForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with(MonomialOrder::GrevLex))
    }
}

impl fmt::Debug for HermitianForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HermitianForm({self})")
    }
}

/// Form of `-sum_{j<neg} |F_j|^2 + sum_{j>=neg} |F_j|^2` for homogeneous
/// components of a common degree.
pub fn squared_norm_form(components: &[Polynomial], neg: usize) -> Result<HermitianForm> {
    if neg > components.len() {
        return Err(Error::TooManyNegatives { neg, count: components.len() });
    }
    let roster = components.first().ok_or(Error::AllComponentsZero)?.roster().clone();
    if components.iter().any(|p| p.roster() != &roster) {
        return Err(Error::RosterMismatch);
    }
    if components.iter().any(|p| !p.is_homogeneous()) {
        return Err(Error::NotHomogeneous);
    }
    let mut degrees = components.iter().filter_map(Polynomial::total_degree);
    let d = degrees.next().ok_or(Error::AllComponentsZero)?;
    if degrees.any(|e| e != d) {
        return Err(Error::DegreeMismatch);
    }
    let mut form = HermitianForm::zero(roster, FormBasis::Homogeneous(d));
    let index = form.index();
    for (j, f) in components.iter().enumerate() {
        let terms: Vec<(usize, &TowerElement)> = f.terms().map(|(m, c)| (index[m], c)).collect();
        for &(r, cr) in &terms {
            for &(s, cs) in &terms {
                let v = cr * &cs.conj();
                if j < neg {
                    form.matrix[(r, s)] -= &v;
                } else {
                    form.matrix[(r, s)] += &v;
                }
            }
        }
    }
    Ok(form)
}

/// Multiplies `q` by the homogeneous form of `sig`.
pub fn multiply_by_norm(q: &HermitianForm, sig: Signature) -> Result<HermitianForm> {
    let n = q.roster.len();
    if n != sig.projective_len() {
        return Err(Error::DimensionMismatch { expected: sig.projective_len(), found: n });
    }
    let FormBasis::Homogeneous(d) = q.kind else {
        return Err(Error::NotHomogeneous);
    };
    let eps = sig.epsilon();
    let mut out = HermitianForm::zero(q.roster.clone(), FormBasis::Homogeneous(d + 1));
    let index = out.index();
    for (r, gamma) in q.basis.iter().enumerate() {
        for (s, delta) in q.basis.iter().enumerate() {
            let c = &q.matrix[(r, s)];
            if c.is_zero() {
                continue;
            }
            for (j, &e) in eps.iter().enumerate() {
                let ej = MultiIndex::var(n, j);
                let (a, b) = (index[&gamma.mul(&ej)], index[&delta.mul(&ej)]);
                if e < 0 {
                    out.matrix[(a, b)] -= c;
                } else {
                    out.matrix[(a, b)] += c;
                }
            }
        }
    }
    Ok(out)
}

/// Solves `R = ||Z||^2_{b+1} * q` for `q`.
///
/// Returns `(q, side)`. Negating `R` negates `q` without changing
/// solvability, so a solvable system is always reported with `side = +1`.
pub fn divide_by_norm(r: &HermitianForm, sig: Signature) -> Result<(HermitianForm, i8)> {
    let n = r.roster.len();
    if n != sig.projective_len() {
        return Err(Error::DimensionMismatch { expected: sig.projective_len(), found: n });
    }
    let d = match r.kind {
        FormBasis::Homogeneous(d) if d >= 1 => d,
        FormBasis::Homogeneous(_) => return Err(Error::NotDivisible),
        FormBasis::UpTo(_) => return Err(Error::NotHomogeneous),
    };
    let eps = sig.epsilon();
    let mut q = HermitianForm::zero(r.roster.clone(), FormBasis::Homogeneous(d - 1));
    let q_index = q.index();

    // R_{ab} only involves q_{cd} with c - d = a - b, so the system splits
    // into independent blocks keyed by that difference.
    let mut blocks: BTreeMap<Vec<i64>, Vec<(usize, usize)>> = BTreeMap::new();
    for (ra, alpha) in r.basis.iter().enumerate() {
        for (rb, beta) in r.basis.iter().enumerate() {
            blocks.entry(difference(alpha, beta)).or_default().push((ra, rb));
        }
    }
    for (diff, equations) in blocks {
        let unknowns: Vec<(usize, usize)> = q
            .basis
            .iter()
            .enumerate()
            .filter_map(|(qa, gamma)| {
                let delta: Option<Vec<u32>> = gamma
                    .exponents()
                    .iter()
                    .zip(&diff)
                    .map(|(&g, &dv)| u32::try_from(i64::from(g) - dv).ok())
                    .collect();
                delta.map(|e| (qa, q_index[&MultiIndex::new(e)]))
            })
            .collect();
        let rhs: Vec<TowerElement> = equations.iter().map(|&(a, b)| r.matrix[(a, b)].clone()).collect();
        if unknowns.is_empty() {
            if rhs.iter().any(|x| !x.is_zero()) {
                return Err(Error::NotDivisible);
            }
            continue;
        }
        let unknown_col: HashMap<usize, usize> = unknowns.iter().enumerate().map(|(k, &(qa, _))| (qa, k)).collect();
        let mut system = Matrix::zeros(equations.len(), unknowns.len());
        for (row, &(a, _)) in equations.iter().enumerate() {
            let alpha = &r.basis[a];
            for (j, &e) in eps.iter().enumerate() {
                if let Some(gamma) = alpha.drop_var(j) {
                    if let Some(&col) = q_index.get(&gamma).and_then(|qa| unknown_col.get(qa)) {
                        system[(row, col)] += &TowerElement::from_int(e);
                    }
                }
            }
        }
        let solution = system.solve(&rhs)?.ok_or(Error::NotDivisible)?;
        for (&(qa, qb), x) in unknowns.iter().zip(solution) {
            q.matrix[(qa, qb)] = x;
        }
    }
    if multiply_by_norm(&q, sig)? != *r {
        return Err(Error::NotDivisible);
    }
    q.check_hermitian()?;
    Ok((q, 1))
}

fn difference(a: &MultiIndex, b: &MultiIndex) -> Vec<i64> {
    a.exponents().iter().zip(b.exponents()).map(|(&x, &y)| i64::from(x) - i64::from(y)).collect()
}
