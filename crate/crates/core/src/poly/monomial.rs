use std::fmt;

use crate::error::{Error, Result};

/// Exponent vector of a monomial `Z^alpha`, with its total degree cached.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiIndex {
    degree: u32,
    exponents: Vec<u32>,
}

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        let degree = exponents.iter().sum();
        MultiIndex { degree, exponents }
    }

    /// The constant monomial `1` in `n` variables.
    pub fn one(n: usize) -> Self {
        MultiIndex { degree: 0, exponents: vec![0; n] }
    }

    /// The variable `Z_j` in `n` variables.
    pub fn var(n: usize, j: usize) -> Self {
        let mut e = vec![0; n];
        e[j] = 1;
        MultiIndex { degree: 1, exponents: e }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn check_len(&self, other: &MultiIndex) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        Ok(())
    }

    pub fn mul(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.len(), other.len());
        MultiIndex {
            degree: self.degree + other.degree,
            exponents: self.exponents.iter().zip(&other.exponents).map(|(a, b)| a + b).collect(),
        }
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &MultiIndex) -> bool {
        self.degree <= other.degree && self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }

    /// `other / self` if `self` divides `other`.
    pub fn divide_into(&self, other: &MultiIndex) -> Option<MultiIndex> {
        if !self.divides(other) {
            return None;
        }
        Some(MultiIndex {
            degree: other.degree - self.degree,
            exponents: other.exponents.iter().zip(&self.exponents).map(|(b, a)| b - a).collect(),
        })
    }

    pub fn lcm(&self, other: &MultiIndex) -> MultiIndex {
        MultiIndex::new(self.exponents.iter().zip(&other.exponents).map(|(a, b)| *a.max(b)).collect())
    }

    /// No variable appears in both monomials.
    pub fn is_coprime(&self, other: &MultiIndex) -> bool {
        self.exponents.iter().zip(&other.exponents).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Multiplies by `Z_to / Z_from`, if `Z_from` divides the monomial.
    pub fn exchange(&self, from: usize, to: usize) -> Option<MultiIndex> {
        if self.exponents[from] == 0 {
            return None;
        }
        let mut e = self.exponents.clone();
        e[from] -= 1;
        e[to] += 1;
        Some(MultiIndex { degree: self.degree, exponents: e })
    }

    /// Divides by `Z_j`, if possible.
    pub fn drop_var(&self, j: usize) -> Option<MultiIndex> {
        if self.exponents[j] == 0 {
            return None;
        }
        let mut e = self.exponents.clone();
        e[j] -= 1;
        Some(MultiIndex { degree: self.degree - 1, exponents: e })
    }

    /// Prepends a leading exponent (the homogenizing variable).
    pub fn prepend(&self, e0: u32) -> MultiIndex {
        let mut e = Vec::with_capacity(self.len() + 1);
        e.push(e0);
        e.extend_from_slice(&self.exponents);
        MultiIndex { degree: self.degree + e0, exponents: e }
    }

    /// Removes the leading exponent.
    pub fn strip_first(&self) -> MultiIndex {
        MultiIndex::new(self.exponents[1..].to_vec())
    }

    /// Renders as `Z0^2*Z1` with the given variable names; `1` for the constant.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for (name, &e) in names.iter().zip(&self.exponents) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }

    /// All monomials of exactly degree `d` in `n` variables.
    pub fn all_of_degree(n: usize, d: u32) -> Vec<MultiIndex> {
        let mut out = Vec::new();
        let mut current = vec![0u32; n];
        fn rec(pos: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
            let n = current.len();
            if pos + 1 == n {
                current[pos] = left;
                out.push(MultiIndex::new(current.clone()));
                return;
            }
            for e in (0..=left).rev() {
                current[pos] = e;
                rec(pos + 1, left - e, current, out);
            }
        }
        if n == 0 {
            if d == 0 {
                out.push(MultiIndex::new(Vec::new()));
            }
            return out;
        }
        rec(0, d, &mut current, &mut out);
        out
    }

    /// All monomials of degree at most `d` in `n` variables.
    pub fn all_up_to_degree(n: usize, d: u32) -> Vec<MultiIndex> {
        (0..=d).flat_map(|k| MultiIndex::all_of_degree(n, k)).collect()
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exponents)
    }
}
