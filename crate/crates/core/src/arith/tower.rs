//! The number field `Q(i, 2^(1/4), sqrt(3))`.
//!
//! Elements are stored sparsely over the 16 basis monomials
//! `i^e0 * t^e1 * s^e2` with `t = 2^(1/4)`, `s = sqrt(3)`, `e0 < 2`, `e1 < 4`
//! and `e2 < 2`. The basis index of a monomial is `e0 | e1 << 1 | e2 << 3`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Dimension of the field over the rationals.
pub const TOWER_DEGREE: usize = 16;

const fn basis_index(e0: usize, e1: usize, e2: usize) -> usize {
    e0 | (e1 << 1) | (e2 << 3)
}

/// Exponents `(e0, e1, e2)` of basis element `k`.
pub const fn basis_exponents(k: usize) -> (usize, usize, usize) {
    (k & 1, (k >> 1) & 3, (k >> 3) & 1)
}

/// `MUL_TABLE[a][b] = (f, c)` means `basis(a) * basis(b) = f * basis(c)`.
const MUL_TABLE: [[(i8, u8); TOWER_DEGREE]; TOWER_DEGREE] = {
    let mut table = [[(0i8, 0u8); TOWER_DEGREE]; TOWER_DEGREE];
    let mut a = 0;
    while a < TOWER_DEGREE {
        let mut b = 0;
        while b < TOWER_DEGREE {
            let (a0, a1, a2) = basis_exponents(a);
            let (b0, b1, b2) = basis_exponents(b);
            let mut factor: i8 = 1;
            let mut e0 = a0 + b0;
            if e0 == 2 {
                factor = -factor;
                e0 = 0;
            }
            let mut e1 = a1 + b1;
            if e1 >= 4 {
                factor *= 2;
                e1 -= 4;
            }
            let mut e2 = a2 + b2;
            if e2 == 2 {
                factor *= 3;
                e2 = 0;
            }
            table[a][b] = (factor, basis_index(e0, e1, e2) as u8);
            b += 1;
        }
        a += 1;
    }
    table
};

/// An exact element of `Q(i, 2^(1/4), sqrt(3))`.
///
/// Coordinates are integer numerators over one positive common denominator.
/// The representation is canonical: nonzero numerators only, sorted by
/// basis index, and the denominator is coprime to their content (and equal
/// to 1 for zero), so derived equality and hashing are field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TowerElement {
    terms: Vec<(u8, BigInt)>,
    den: BigInt,
}

impl Default for TowerElement {
    fn default() -> Self {
        Self::zero()
    }
}

impl TowerElement {
    pub fn zero() -> Self {
        TowerElement { terms: Vec::new(), den: BigInt::one() }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_rational(q: Rational) -> Self {
        Self::basis_scaled(0, q)
    }

    /// `q * i^e0 * t^e1 * s^e2`.
    pub fn monomial(q: Rational, e0: usize, e1: usize, e2: usize) -> Self {
        assert!(e0 < 2 && e1 < 4 && e2 < 2, "basis exponent out of range");
        Self::basis_scaled(basis_index(e0, e1, e2), q)
    }

    fn basis_scaled(k: usize, q: Rational) -> Self {
        if q.is_zero() {
            Self::zero()
        } else {
            let (n, d) = q.into_raw();
            TowerElement { terms: vec![(k as u8, n)], den: d }
        }
    }

    /// Cancels the common content of numerators and denominator.
    fn normalized(mut terms: Vec<(u8, BigInt)>, mut den: BigInt) -> Self {
        terms.retain(|(_, n)| !n.is_zero());
        if terms.is_empty() {
            return Self::zero();
        }
        if den.is_negative() {
            den = -den;
            for (_, n) in &mut terms {
                *n = -std::mem::take(n);
            }
        }
        if !den.is_one() {
            let mut g = den.clone();
            for (_, n) in &terms {
                g = g.gcd(n);
                if g.is_one() {
                    break;
                }
            }
            if !g.is_one() {
                den /= &g;
                for (_, n) in &mut terms {
                    *n /= &g;
                }
            }
        }
        TowerElement { terms, den }
    }

    pub fn i() -> Self {
        Self::monomial(Rational::one(), 1, 0, 0)
    }

    /// `2^(1/4)`.
    pub fn root4_2() -> Self {
        Self::monomial(Rational::one(), 0, 1, 0)
    }

    pub fn sqrt2() -> Self {
        Self::monomial(Rational::one(), 0, 2, 0)
    }

    pub fn sqrt3() -> Self {
        Self::monomial(Rational::one(), 0, 0, 1)
    }

    /// Builds an element from all 16 coordinates.
    pub fn from_coords(coords: [Rational; TOWER_DEGREE]) -> Self {
        let den = coords.iter().filter(|q| !q.is_zero()).fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let terms = coords
            .iter()
            .enumerate()
            .filter(|(_, q)| !q.is_zero())
            .map(|(k, q)| (k as u8, q.numer() * (&den / q.denom())))
            .collect();
        Self::normalized(terms, den)
    }

    pub fn coords(&self) -> [Rational; TOWER_DEGREE] {
        let mut out: [Rational; TOWER_DEGREE] = Default::default();
        for (k, n) in &self.terms {
            out[*k as usize] = Rational::new(n.clone(), self.den.clone());
        }
        out
    }

    /// Coordinate of the basis element `i^e0 * t^e1 * s^e2`.
    pub fn coord(&self, e0: usize, e1: usize, e2: usize) -> Rational {
        let k = basis_index(e0, e1, e2) as u8;
        self.terms
            .iter()
            .find(|(j, _)| *j == k)
            .map(|(_, n)| Rational::new(n.clone(), self.den.clone()))
            .unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one() && self.den.is_one()
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(0, n)] => Some(Rational::new(n.clone(), self.den.clone())),
            _ => None,
        }
    }

    /// Number of nonzero coordinates.
    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    fn map_signs(&self, negate: impl Fn(usize) -> bool) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(k, n)| if negate(*k as usize) { (*k, -n) } else { (*k, n.clone()) })
            .collect();
        TowerElement { terms, den: self.den.clone() }
    }

    /// Complex conjugation: `i -> -i`, fixing `2^(1/4)` and `sqrt(3)`.
    pub fn conj(&self) -> Self {
        self.map_signs(|k| basis_exponents(k).0 == 1)
    }

    /// Multiplicative inverse.
    ///
    /// Computed by successive relative norms down the tower
    /// `Q(i,t,s) / Q(t,s) / Q(t) / Q(sqrt 2) / Q`; each step multiplies by the
    /// conjugate under the automorphism fixing the smaller field.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // i -> -i
        let c1 = self.conj();
        let n1 = self * &c1;
        // s -> -s
        let c2 = n1.map_signs(|k| basis_exponents(k).2 == 1);
        let n2 = &n1 * &c2;
        // t -> -t
        let c3 = n2.map_signs(|k| basis_exponents(k).1 % 2 == 1);
        let n3 = &n2 * &c3;
        // sqrt(2) -> -sqrt(2)
        let c4 = n3.map_signs(|k| basis_exponents(k).1 == 2);
        let n4 = &n3 * &c4;
        let norm = n4
            .as_rational()
            .expect("norm down the tower must be rational");
        debug_assert!(!norm.is_zero());
        let numer = &(&(&c1 * &c2) * &c3) * &c4;
        Ok(numer.scale(&norm.recip()))
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() || self.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(k, n)| (*k, n * q.numer())).collect();
        Self::normalized(terms, &self.den * q.denom())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `sqrt(q)` when it lies in the field, i.e. when the squarefree part of
    /// `q` (up to sign) is one of `1, 2, 3, 6`.
    pub fn sqrt_rational(q: &Rational) -> Option<Self> {
        if q.is_zero() {
            return Some(Self::zero());
        }
        // sqrt(n/d) = sqrt(n*d)/d
        let denom = q.denom().clone();
        let radicand = (q.numer() * &denom).abs();
        let (root, free) = split_square(&radicand);
        let coeff = Rational::new(root, denom);
        let mut out = match free.to_string().as_str() {
            "1" => Self::from_rational(coeff),
            "2" => Self::monomial(coeff, 0, 2, 0),
            "3" => Self::monomial(coeff, 0, 0, 1),
            "6" => Self::monomial(coeff, 0, 2, 1),
            _ => return None,
        };
        if q.is_negative() {
            out = &out * &Self::i();
        }
        Some(out)
    }
}

/// Writes `n = root^2 * free` with `free` squarefree over small primes.
/// Large prime factors are left in `free`, which is then rejected anyway.
fn split_square(n: &BigInt) -> (BigInt, BigInt) {
    let mut root = BigInt::one();
    let mut free = BigInt::one();
    let mut rest = n.clone();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(100_000);
    while &p * &p <= rest && p < limit {
        let mut count = 0u32;
        while (&rest % &p).is_zero() {
            rest /= &p;
            count += 1;
        }
        root *= p.pow(count / 2);
        if count % 2 == 1 {
            free *= &p;
        }
        p += 1;
    }
    let r = rest.sqrt();
    if &r * &r == rest {
        root *= r;
    } else {
        free *= rest;
    }
    (root, free)
}

impl From<Rational> for TowerElement {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl From<i64> for TowerElement {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

fn merge(lhs: &TowerElement, rhs: &TowerElement, negate_rhs: bool) -> TowerElement {
    if rhs.is_zero() {
        return lhs.clone();
    }
    if lhs.is_zero() {
        return if negate_rhs { -rhs } else { rhs.clone() };
    }
    // lhs/d1 + rhs/d2 = (lhs*m1 + rhs*m2) / (d1*m1)
    let (m1, m2, den) = if lhs.den == rhs.den {
        (None, None, lhs.den.clone())
    } else {
        let g = lhs.den.gcd(&rhs.den);
        let m1 = &rhs.den / &g;
        let m2 = &lhs.den / &g;
        let den = &lhs.den * &m1;
        (Some(m1), Some(m2), den)
    };
    let lift = |n: &BigInt, m: &Option<BigInt>| match m {
        Some(m) => n * m,
        None => n.clone(),
    };
    let (l, r) = (&lhs.terms, &rhs.terms);
    let mut terms = Vec::with_capacity(l.len() + r.len());
    let (mut a, mut b) = (0, 0);
    while a < l.len() || b < r.len() {
        let ka = l.get(a).map(|t| t.0).unwrap_or(u8::MAX);
        let kb = r.get(b).map(|t| t.0).unwrap_or(u8::MAX);
        if ka < kb {
            terms.push((ka, lift(&l[a].1, &m1)));
            a += 1;
        } else if kb < ka {
            let n = lift(&r[b].1, &m2);
            terms.push((kb, if negate_rhs { -n } else { n }));
            b += 1;
        } else {
            let (x, y) = (lift(&l[a].1, &m1), lift(&r[b].1, &m2));
            terms.push((ka, if negate_rhs { x - y } else { x + y }));
            a += 1;
            b += 1;
        }
    }
    TowerElement::normalized(terms, den)
}

impl<'a> Add<&'a TowerElement> for &'a TowerElement {
    type Output = TowerElement;
    fn add(self, rhs: &TowerElement) -> TowerElement {
        merge(self, rhs, false)
    }
}

impl<'a> Sub<&'a TowerElement> for &'a TowerElement {
    type Output = TowerElement;
    fn sub(self, rhs: &TowerElement) -> TowerElement {
        merge(self, rhs, true)
    }
}

impl<'a> Mul<&'a TowerElement> for &'a TowerElement {
    type Output = TowerElement;
    fn mul(self, rhs: &TowerElement) -> TowerElement {
        if self.is_zero() || rhs.is_zero() {
            return TowerElement::zero();
        }
        let den = &self.den * &rhs.den;
        if self.terms.len() == 1 && rhs.terms.len() == 1 {
            let (ka, na) = &self.terms[0];
            let (kb, nb) = &rhs.terms[0];
            let (f, k) = MUL_TABLE[*ka as usize][*kb as usize];
            return TowerElement::normalized(vec![(k, na * nb * f)], den);
        }
        let mut acc: [BigInt; TOWER_DEGREE] = Default::default();
        for (ka, na) in &self.terms {
            for (kb, nb) in &rhs.terms {
                let (f, k) = MUL_TABLE[*ka as usize][*kb as usize];
                let prod = na * nb;
                let slot = &mut acc[k as usize];
                match f {
                    1 => *slot += prod,
                    -1 => *slot -= prod,
                    _ => *slot += prod * f,
                }
            }
        }
        let terms = acc.into_iter().enumerate().map(|(k, n)| (k as u8, n)).collect();
        TowerElement::normalized(terms, den)
    }
}

impl<'a> Div<&'a TowerElement> for &'a TowerElement {
    type Output = TowerElement;
    /// Panics on division by zero; use [`TowerElement::inv`] for a checked inverse.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &TowerElement) -> TowerElement {
        self * &rhs.inv().expect("division by zero in tower field")
    }
}

impl Neg for &TowerElement {
    type Output = TowerElement;
    fn neg(self) -> TowerElement {
        TowerElement { terms: self.terms.iter().map(|(k, n)| (*k, -n)).collect(), den: self.den.clone() }
    }
}

impl Neg for TowerElement {
    type Output = TowerElement;
    fn neg(mut self) -> TowerElement {
        for (_, n) in &mut self.terms {
            *n = -std::mem::take(n);
        }
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<TowerElement> for TowerElement {
            type Output = TowerElement;
            fn $method(self, rhs: TowerElement) -> TowerElement {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a TowerElement> for TowerElement {
            type Output = TowerElement;
            fn $method(self, rhs: &TowerElement) -> TowerElement {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl AddAssign<&TowerElement> for TowerElement {
    fn add_assign(&mut self, rhs: &TowerElement) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&TowerElement> for TowerElement {
    fn sub_assign(&mut self, rhs: &TowerElement) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&TowerElement> for TowerElement {
    fn mul_assign(&mut self, rhs: &TowerElement) {
        *self = &*self * rhs;
    }
}

fn basis_name(k: usize) -> String {
    let (e0, e1, e2) = basis_exponents(k);
    let mut parts = Vec::new();
    if e0 == 1 {
        parts.push("i");
    }
    match e1 {
        1 => parts.push("root4(2)"),
        2 => parts.push("sqrt(2)"),
        3 => {
            parts.push("sqrt(2)");
            parts.push("root4(2)");
        }
        _ => {}
    }
    if e2 == 1 {
        parts.push("sqrt(3)");
    }
    parts.join("*")
}

fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl TowerElement {
    /// Formats the element in the coefficient-literal syntax accepted by the
    /// parser. `needs_parens` is set when the result is a sum of several
    /// basis terms.
    pub(crate) fn render(&self) -> (String, bool) {
        if self.is_zero() {
            return ("0".into(), false);
        }
        let mut out = String::new();
        for (pos, (k, n)) in self.terms.iter().enumerate() {
            let q = Rational::new(n.clone(), self.den.clone());
            let name = basis_name(*k as usize);
            let neg = q.is_negative();
            let mag = q.abs();
            if pos == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            if name.is_empty() {
                out.push_str(&fmt_rational(&mag));
            } else if mag.is_one() {
                out.push_str(&name);
            } else {
                out.push_str(&fmt_rational(&mag));
                out.push('*');
                out.push_str(&name);
            }
        }
        (out, self.terms.len() > 1)
    }
}

impl fmt::Display for TowerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render().0)
    }
}

impl fmt::Debug for TowerElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TowerElement({self})")
    }
}
