//! Buchberger's algorithm over the tower field.
//!
//! Only the classical (degree-increasing) orders are accepted. Every ideal
//! this crate feeds in is homogeneous, and on homogeneous polynomials the
//! Green variants pick the same leading terms, so nothing is lost.

use std::cmp::Ordering;

use super::{Ideal, MonomialIdeal};
use crate::arith::TowerElement;
use crate::error::{Error, Result};
use crate::poly::{MonomialOrder, MultiIndex, Polynomial, Roster};

/// Terms sorted from greatest to least monomial under a fixed order.
#[derive(Clone, Debug)]
struct SortedPoly {
    terms: Vec<(MultiIndex, TowerElement)>,
}

impl SortedPoly {
    fn from_poly(p: &Polynomial, ord: MonomialOrder) -> Self {
        SortedPoly { terms: p.sorted_terms(ord).into_iter().map(|(m, c)| (m.clone(), c.clone())).collect() }
    }

    fn to_poly(&self, roster: &Roster) -> Polynomial {
        Polynomial::from_terms(roster.clone(), self.terms.iter().cloned()).expect("lengths agree")
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn lead(&self) -> &MultiIndex {
        &self.terms[0].0
    }

    fn make_monic(&mut self) {
        let inv = self.terms[0].1.inv().expect("leading coefficient is nonzero");
        if inv.is_one() {
            return;
        }
        for (_, c) in &mut self.terms {
            *c = &*c * &inv;
        }
    }

    /// `self - coeff * shift * g`, merging the two sorted term lists.
    fn sub_scaled(&self, coeff: &TowerElement, shift: &MultiIndex, g: &SortedPoly, ord: MonomialOrder) -> SortedPoly {
        let mut out = Vec::with_capacity(self.terms.len() + g.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = g.terms.iter().map(|(m, c)| (m.mul(shift), c * coeff)).peekable();
        loop {
            let ord_ab = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => ord.cmp(&x.0, &y.0),
            };
            match ord_ab {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => {
                    let (m, c) = b.next().unwrap();
                    out.push((m, -c));
                }
                Ordering::Equal => {
                    let (m, ca) = a.next().unwrap();
                    let (_, cb) = b.next().unwrap();
                    let c = ca - &cb;
                    if !c.is_zero() {
                        out.push((m.clone(), c));
                    }
                }
            }
        }
        SortedPoly { terms: out }
    }

    fn s_poly(&self, other: &SortedPoly, ord: MonomialOrder) -> SortedPoly {
        let lcm = self.lead().lcm(other.lead());
        let ua = self.lead().divide_into(&lcm).unwrap();
        let ub = other.lead().divide_into(&lcm).unwrap();
        // both inputs are monic
        let lifted = SortedPoly { terms: self.terms.iter().map(|(m, c)| (m.mul(&ua), c.clone())).collect() };
        lifted.sub_scaled(&TowerElement::one(), &ub, other, ord)
    }
}

/// Full reduction: repeatedly cancels the largest reducible term using the
/// first basis element (in list order) whose leading monomial divides it.
fn reduce(f: SortedPoly, basis: &[SortedPoly], ord: MonomialOrder) -> SortedPoly {
    let mut remainder = Vec::new();
    let mut p = f;
    while !p.is_zero() {
        let (m, c) = &p.terms[0];
        match basis.iter().find(|g| g.lead().divides(m)) {
            Some(g) => {
                let shift = g.lead().divide_into(m).unwrap();
                let coeff = c * &g.terms[0].1.inv().expect("nonzero leading coefficient");
                p = p.sub_scaled(&coeff, &shift, g, ord);
            }
            None => {
                // the leading term is irreducible; everything smaller is still pending
                let lead = p.terms.remove(0);
                remainder.push(lead);
            }
        }
    }
    SortedPoly { terms: remainder }
}

fn require_classical(ord: MonomialOrder) -> Result<()> {
    if ord.is_green() {
        return Err(Error::OrderKind(ord.to_string(), "division needs a degree-increasing order"));
    }
    Ok(())
}

/// Remainder of `f` on division by `divisors`; no term of the result is
/// divisible by a leading monomial of a divisor.
pub fn normal_form(f: &Polynomial, divisors: &[Polynomial], ord: MonomialOrder) -> Result<Polynomial> {
    require_classical(ord)?;
    if divisors.iter().any(|g| g.roster() != f.roster()) {
        return Err(Error::RosterMismatch);
    }
    if divisors.iter().any(Polynomial::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    let basis: Vec<SortedPoly> = divisors.iter().map(|g| SortedPoly::from_poly(g, ord)).collect();
    Ok(reduce(SortedPoly::from_poly(f, ord), &basis, ord).to_poly(f.roster()))
}

struct Pair {
    i: usize,
    j: usize,
    lcm: MultiIndex,
}

/// Reduced Groebner basis of the ideal, monic, sorted by descending leading
/// monomial.
///
/// Pairs are selected by the normal strategy (smallest lcm under `ord`,
/// then by basis position); pairs with coprime leading monomials are
/// skipped.
pub fn buchberger(ideal: &Ideal, ord: MonomialOrder) -> Result<Vec<Polynomial>> {
    require_classical(ord)?;
    let roster = ideal.roster().clone();
    let mut basis: Vec<SortedPoly> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let add = |basis: &mut Vec<SortedPoly>, pairs: &mut Vec<Pair>, mut g: SortedPoly| {
        g.make_monic();
        let j = basis.len();
        for (i, h) in basis.iter().enumerate() {
            if !h.lead().is_coprime(g.lead()) {
                pairs.push(Pair { i, j, lcm: h.lead().lcm(g.lead()) });
            }
        }
        basis.push(g);
    };

    for gen in ideal.generators() {
        let r = reduce(SortedPoly::from_poly(gen, ord), &basis, ord);
        if !r.is_zero() {
            add(&mut basis, &mut pairs, r);
        }
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&x, &y| {
                let (p, q) = (&pairs[x], &pairs[y]);
                ord.cmp(&p.lcm, &q.lcm).then((p.j, p.i).cmp(&(q.j, q.i)))
            })
            .unwrap();
        let pair = pairs.swap_remove(best);
        let s = basis[pair.i].s_poly(&basis[pair.j], ord);
        let r = reduce(s, &basis, ord);
        if !r.is_zero() {
            add(&mut basis, &mut pairs, r);
        }
    }

    // minimalize: drop elements whose leading monomial is a multiple of another's
    let mut minimal: Vec<SortedPoly> = Vec::new();
    for (k, g) in basis.iter().enumerate() {
        let redundant = basis.iter().enumerate().any(|(l, h)| {
            l != k && h.lead().divides(g.lead()) && (h.lead() != g.lead() || l < k)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }

    // tail-reduce each element against the others
    for k in 0..minimal.len() {
        let g = minimal[k].clone();
        let others: Vec<SortedPoly> =
            minimal.iter().enumerate().filter(|(l, _)| *l != k).map(|(_, h)| h.clone()).collect();
        let head = SortedPoly { terms: vec![g.terms[0].clone()] };
        let tail = reduce(SortedPoly { terms: g.terms[1..].to_vec() }, &others, ord);
        let mut terms = head.terms;
        terms.extend(tail.terms);
        let mut reduced = SortedPoly { terms };
        reduced.make_monic();
        minimal[k] = reduced;
    }

    minimal.sort_by(|a, b| ord.cmp(b.lead(), a.lead()));
    Ok(minimal.iter().map(|g| g.to_poly(&roster)).collect())
}

/// Checks the Buchberger criterion: every S-polynomial of `basis` reduces
/// to zero modulo `basis`.
pub fn is_groebner_basis(basis: &[Polynomial], ord: MonomialOrder) -> Result<bool> {
    require_classical(ord)?;
    let mut sorted: Vec<SortedPoly> = basis.iter().map(|g| SortedPoly::from_poly(g, ord)).collect();
    if sorted.iter().any(SortedPoly::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    for g in &mut sorted {
        g.make_monic();
    }
    for i in 0..sorted.len() {
        for j in i + 1..sorted.len() {
            let s = sorted[i].s_poly(&sorted[j], ord);
            if !reduce(s, &sorted, ord).is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The initial monomial ideal `in(I)` under `ord`.
pub fn initial_ideal(ideal: &Ideal, ord: MonomialOrder) -> Result<MonomialIdeal> {
    let gb = buchberger(ideal, ord)?;
    let leads = gb.iter().map(|g| g.leading_monomial(ord)).collect::<Result<Vec<_>>>()?;
    MonomialIdeal::from_generators(ideal.roster().clone(), leads)
}
