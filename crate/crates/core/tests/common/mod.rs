//! Helpers and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use ginvar::arith::{basis_exponents, TOWER_DEGREE};
use ginvar::hermitian::{HermitianForm, Signature};
use ginvar::maps::{catalog, HomogenizedMap, RationalMap, CATALOG};
use ginvar::{MultiIndex, Polynomial, Rational, Roster, TowerElement};
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const LEBL7_G: &str = "z1*z2 - 2*z2^2 + z1";

/// Every catalog entry, with `a = 0` and `a = 1/2` for the FHJZ family.
pub fn catalog_maps() -> Vec<RationalMap> {
    let mut out = Vec::new();
    for entry in CATALOG {
        match entry.name {
            "fhjz" => {
                for a in ["0", "1/2"] {
                    out.push(catalog("fhjz", &BTreeMap::from([("a".to_string(), a.to_string())])).unwrap());
                }
            }
            "lebl-7" => out.push(catalog("lebl-7", &BTreeMap::from([("g".to_string(), LEBL7_G.to_string())])).unwrap()),
            name => out.push(catalog(name, &BTreeMap::new()).unwrap()),
        }
    }
    out
}

/// Name plus parameters, e.g. `fhjz(a=1/2)`.
pub fn key(f: &RationalMap) -> String {
    if f.params().is_empty() {
        return f.label();
    }
    let params: Vec<String> = f.params().iter().map(|(k, v)| format!("{k}={v}")).collect();
    format!("{}({})", f.label(), params.join(", "))
}

pub fn map(name: &str) -> RationalMap {
    catalog_maps().into_iter().find(|m| m.name() == Some(name)).unwrap()
}

pub fn fhjz(a: &str) -> RationalMap {
    catalog("fhjz", &BTreeMap::from([("a".to_string(), a.to_string())])).unwrap()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational(r: &mut ChaCha8Rng, bound: i64) -> Rational {
    Rational::new(r.random_range(-bound..=bound).into(), r.random_range(1..=bound).into())
}

/// A random element with roughly half of its coordinates nonzero.
pub fn tower_element(r: &mut ChaCha8Rng) -> TowerElement {
    let coords = std::array::from_fn(|_| if r.random_bool(0.5) { rational(r, 9) } else { Rational::zero() });
    TowerElement::from_coords(coords)
}

pub fn nonzero_tower_element(r: &mut ChaCha8Rng) -> TowerElement {
    loop {
        let x = tower_element(r);
        if !x.is_zero() {
            return x;
        }
    }
}

pub fn basis_element(k: usize) -> TowerElement {
    let (e0, e1, e2) = basis_exponents(k);
    TowerElement::monomial(Rational::one(), e0, e1, e2)
}

/// Solves `A y = b` over the rationals by plain Gauss-Jordan elimination.
#[allow(clippy::needless_range_loop)]
pub fn rational_solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let inv = Rational::one() / &a[col][col];
        for c in col..n {
            a[col][c] = &a[col][c] * &inv;
        }
        b[col] = &b[col] * &inv;
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for c in col..n {
                    let sub = &f * &a[col][c];
                    a[r][c] -= sub;
                }
                let sub = &f * &b[col];
                b[r] -= sub;
            }
        }
    }
    Some(b)
}

/// Inverse through the 16x16 rational system "multiplication by x = 1".
pub fn inverse_by_linear_solve(x: &TowerElement) -> Option<TowerElement> {
    // Column k holds the coordinates of x * basis_k.
    let columns: Vec<[Rational; TOWER_DEGREE]> = (0..TOWER_DEGREE).map(|k| (x * &basis_element(k)).coords()).collect();
    let a: Vec<Vec<Rational>> = (0..TOWER_DEGREE).map(|r| (0..TOWER_DEGREE).map(|k| columns[k][r].clone()).collect()).collect();
    let mut e = vec![Rational::zero(); TOWER_DEGREE];
    e[0] = Rational::one();
    let y = rational_solve(a, e)?;
    Some(TowerElement::from_coords(y.try_into().expect("16 coordinates")))
}

/// `||Z||^2_{b+1}` as a polynomial in `Z` and separate conjugate variables.
pub fn norm_bipolynomial(sig: Signature) -> Polynomial {
    let n = sig.projective_len();
    let roster = Roster::numbered("V", 0, 2 * n);
    let terms = sig.epsilon().into_iter().enumerate().map(|(j, e)| {
        let mut exps = vec![0; 2 * n];
        exps[j] = 1;
        exps[n + j] = 1;
        (MultiIndex::new(exps), TowerElement::from_int(e))
    });
    Polynomial::from_terms(roster, terms).unwrap()
}

/// `sum eps_j F_j(Z) conj(F_j)(W)` built by polynomial multiplication.
pub fn target_bipolynomial(f: &HomogenizedMap) -> Polynomial {
    let n = f.roster().len();
    let roster = Roster::numbered("V", 0, 2 * n);
    let lift = |p: &Polynomial, conj: bool| {
        let terms = p.terms().map(|(m, c)| {
            let mut e = vec![0; 2 * n];
            let off = if conj { n } else { 0 };
            e[off..off + n].copy_from_slice(m.exponents());
            (MultiIndex::new(e), if conj { c.conj() } else { c.clone() })
        });
        Polynomial::from_terms(roster.clone(), terms).unwrap()
    };
    let negatives = f.target().negatives();
    let mut total = Polynomial::zero(roster.clone());
    for (j, c) in f.components().iter().enumerate() {
        let sq = lift(c, false).try_mul(&lift(c, true)).unwrap();
        total = if j < negatives { total.try_sub(&sq).unwrap() } else { total.try_add(&sq).unwrap() };
    }
    total
}

pub fn form_bipolynomial(q: &HermitianForm) -> Polynomial {
    let n = q.roster().len();
    let names: Vec<String> = (0..n).map(|k| format!("V{}", n + k)).collect();
    q.to_bipolynomial(&names).unwrap().with_roster(Roster::numbered("V", 0, 2 * n)).unwrap()
}

/// Random polynomial in `roster` with terms of degree at most `d`.
pub fn random_polynomial(r: &mut ChaCha8Rng, roster: &Roster, d: u32, terms: usize) -> Polynomial {
    let all = MultiIndex::all_up_to_degree(roster.len(), d);
    let chosen = (0..terms).map(|_| (all[r.random_range(0..all.len())].clone(), TowerElement::from_rational(rational(r, 5))));
    let mut p = Polynomial::zero(roster.clone());
    for (m, c) in chosen {
        p = p.try_add(&Polynomial::monomial(roster.clone(), m, c)).unwrap();
    }
    p
}

pub fn eval(p: &Polynomial, point: &[TowerElement]) -> TowerElement {
    let images: Vec<Polynomial> = point.iter().map(|c| Polynomial::constant(p.roster().clone(), c.clone())).collect();
    p.substitute(&images).unwrap().constant_term()
}

/// Points of the unit sphere in C^2 with Gaussian-rational coordinates.
pub fn sphere_points() -> Vec<[TowerElement; 2]> {
    let g = |a: i64, b: i64, n: i64| TowerElement::from_ratio(a, n) + TowerElement::from_ratio(b, n) * TowerElement::i();
    vec![
        [g(1, 0, 1), g(0, 0, 1)],
        [g(0, 0, 1), g(0, 1, 1)],
        [g(1, 2, 3), g(2, 0, 3)],
        [g(2, 0, 3), g(-1, 2, 3)],
        [g(2, 3, 7), g(6, 0, 7)],
        [g(1, 4, 9), g(0, -8, 9)],
        [g(1, 2, 5), g(2, 4, 5)],
        [g(6, 9, 11), g(-2, 0, 11)],
    ]
}

/// `sum eps_j |F_j(1, z)|^2` at an affine point `z`.
pub fn target_value(f: &HomogenizedMap, z: &[TowerElement]) -> TowerElement {
    let point: Vec<TowerElement> = std::iter::once(TowerElement::one()).chain(z.iter().cloned()).collect();
    let negatives = f.target().negatives();
    f.components().iter().enumerate().fold(TowerElement::zero(), |acc, (j, c)| {
        let v = eval(c, &point);
        let sq = &v * &v.conj();
        if j < negatives {
            acc - sq
        } else {
            acc + sq
        }
    })
}
