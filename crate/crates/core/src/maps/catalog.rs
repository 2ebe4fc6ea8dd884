use std::collections::BTreeMap;

use crate::arith::{Rational, TowerElement};
use crate::error::{Error, Result};
use crate::hermitian::Signature;
use crate::parse::{parse_constant, parse_polynomial, parse_polynomial_list};
use crate::poly::Polynomial;

use super::model::{source_roster, RationalMap};

pub struct CatalogEntry {
    pub name: &'static str,
    pub summary: &'static str,
    pub params: &'static [&'static str],
}

pub const CATALOG: &[CatalogEntry] = &[
    CatalogEntry { name: "faran-1", summary: "(z1, z2, 0), ball B2 -> B3", params: &[] },
    CatalogEntry { name: "faran-2", summary: "(z1, z1*z2, z2^2), ball B2 -> B3", params: &[] },
    CatalogEntry { name: "faran-3", summary: "(z1^2, sqrt(2)*z1*z2, z2^2), ball B2 -> B3", params: &[] },
    CatalogEntry { name: "faran-4", summary: "(z1^3, sqrt(3)*z1*z2, z2^3), ball B2 -> B3", params: &[] },
    CatalogEntry {
        name: "fhjz",
        summary: "(z1^2, sqrt(2)*z1*z2, z2^2*(z1 - a)/(1 - conj(a)*z1), sqrt(1 - |a|^2)*z2^3/(1 - conj(a)*z1)), B2 -> B4",
        params: &["a"],
    },
    CatalogEntry { name: "lebl-1", summary: "(0, z1, z2), Q(2,0) -> Q(2,1)", params: &[] },
    CatalogEntry { name: "lebl-2", summary: "(z2^2, z1^2, sqrt(2)*z2), Q(2,0) -> Q(2,1)", params: &[] },
    CatalogEntry { name: "lebl-3", summary: "(z2/z1^2, 1/z1, z2^2/z1^2), Q(2,0) -> Q(2,1)", params: &[] },
    CatalogEntry { name: "lebl-4", summary: "quadratic class with sqrt(3) coefficients, Q(2,0) -> Q(2,1)", params: &[] },
    CatalogEntry { name: "lebl-5", summary: "quadratic class with root4(2) and i coefficients, Q(2,0) -> Q(2,1)", params: &[] },
    CatalogEntry { name: "lebl-6", summary: "cubic class over 3*z1^2 + 1, Q(2,0) -> Q(2,1)", params: &[] },
    CatalogEntry {
        name: "lebl-7",
        summary: "(g, g, 1) for a polynomial g; not transversal, Q(2,0) -> Q(2,1)",
        params: &["g"],
    },
];

struct Spec {
    source: (usize, usize),
    target: (usize, usize),
    numerators: &'static str,
    denominator: &'static str,
}

fn fixed(name: &str) -> Option<Spec> {
    let ball = |numerators, target| Spec { source: (2, 0), target, numerators, denominator: "1" };
    let lebl = |numerators, denominator| Spec { source: (2, 0), target: (2, 1), numerators, denominator };
    Some(match name {
        "faran-1" => ball("z1; z2; 0", (3, 0)),
        "faran-2" => ball("z1; z1*z2; z2^2", (3, 0)),
        "faran-3" => ball("z1^2; sqrt(2)*z1*z2; z2^2", (3, 0)),
        "faran-4" => ball("z1^3; sqrt(3)*z1*z2; z2^3", (3, 0)),
        "lebl-1" => lebl("0; z1; z2", "1"),
        "lebl-2" => lebl("z2^2; z1^2; sqrt(2)*z2", "1"),
        "lebl-3" => lebl("z2; z1; z2^2", "z1^2"),
        "lebl-4" => lebl(
            "z1^2 - sqrt(3)*z1*z2 + z2^2 - z1; z1^2 + sqrt(3)*z1*z2 + z2^2 - z1; z2^2 + z1 - sqrt(3)*z2 - 1",
            "z2^2 + z1 + sqrt(3)*z2 - 1",
        ),
        "lebl-5" => lebl(
            "root4(2)*(z1*z2 + i*z1); root4(2)*(z1*z2 - i*z1); z2^2 - sqrt(2)*i*z2 + 1",
            "z2^2 + sqrt(2)*i*z2 + 1",
        ),
        "lebl-6" => lebl("sqrt(3)*(z2*z1^2 - z2); 2*z2^3; z1^3 + 3*z1", "3*z1^2 + 1"),
        _ => return None,
    })
}

fn param<'a>(params: &'a BTreeMap<String, String>, key: &str) -> Result<&'a str> {
    params.get(key).map(String::as_str).ok_or_else(|| Error::MissingParam(key.into()))
}

/// A named map from the built-in catalog.
pub fn catalog(name: &str, params: &BTreeMap<String, String>) -> Result<RationalMap> {
    let map = if let Some(spec) = fixed(name) {
        let source = Signature::new(spec.source.0, spec.source.1)?;
        let target = Signature::new(spec.target.0, spec.target.1)?;
        let roster = source_roster(source.affine_dim());
        let numerators = parse_polynomial_list(spec.numerators, &roster)?;
        RationalMap::new(source, target, numerators, parse_polynomial(spec.denominator, &roster)?)?
    } else {
        match name {
            "fhjz" => {
                let text = param(params, "a")?;
                fhjz(&parse_constant(text)?)?.with_param("a", text)
            }
            "lebl-7" => {
                let text = param(params, "g")?;
                lebl7(text)?.with_param("g", text)
            }
            _ => return Err(Error::UnknownName(name.into())),
        }
    };
    Ok(map.with_name(name))
}

/// The FHJZ family; `|a|^2` must be a rational below 1.
pub fn fhjz(a: &TowerElement) -> Result<RationalMap> {
    let invalid = |reason: &str| Error::InvalidParam { name: "a".into(), reason: reason.into() };
    let norm = (a * &a.conj()).as_rational().ok_or_else(|| invalid("|a|^2 must be rational"))?;
    let one = Rational::from_integer(1.into());
    if norm >= one {
        return Err(invalid("need |a| < 1"));
    }
    let root = TowerElement::sqrt_rational(&(one - norm)).ok_or_else(|| invalid("sqrt(1 - |a|^2) is not in the coefficient field"))?;
    let roster = source_roster(2);
    let c = |x: TowerElement| Polynomial::constant(roster.clone(), x);
    let z1 = Polynomial::var(roster.clone(), 0);
    let z2 = Polynomial::var(roster.clone(), 1);
    let den = c(TowerElement::one()).try_sub(&z1.scale(&a.conj()))?;
    let z2sq = z2.pow(2);
    let numerators = vec![
        z1.pow(2).try_mul(&den)?,
        z1.try_mul(&z2)?.scale(&TowerElement::sqrt2()).try_mul(&den)?,
        z2sq.try_mul(&z1.try_sub(&c(a.clone()))?)?,
        z2.pow(3).scale(&root),
    ];
    RationalMap::new(Signature::ball(2)?, Signature::ball(4)?, numerators, den)
}

/// `(g, g, 1)` into `Q(2, 1)`.
pub fn lebl7(g: &str) -> Result<RationalMap> {
    let roster = source_roster(2);
    let g = parse_polynomial(g, &roster)?;
    let one = Polynomial::one(roster);
    RationalMap::polynomial(Signature::ball(2)?, Signature::new(2, 1)?, vec![g.clone(), g, one])
}
