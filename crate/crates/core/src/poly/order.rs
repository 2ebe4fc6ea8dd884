use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::MultiIndex;
use crate::error::{Error, Result};

/// Multiplicative monomial orders with `Z0 > Z1 > ... > Zn`.
///
/// The classical kinds rank higher total degree as greater. The `Green*`
/// kinds reverse the degree comparison so that lower degree is greater
/// (`1` is the largest monomial), which is the convention for initial
/// monomials of Taylor series. Within a degree both use the same tie-break.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MonomialOrder {
    GrevLex,
    GrLex,
    GreenGrevLex,
    GreenGrLex,
}

impl MonomialOrder {
    pub const ALL: [MonomialOrder; 4] =
        [MonomialOrder::GrevLex, MonomialOrder::GrLex, MonomialOrder::GreenGrevLex, MonomialOrder::GreenGrLex];

    pub fn is_green(self) -> bool {
        matches!(self, MonomialOrder::GreenGrevLex | MonomialOrder::GreenGrLex)
    }

    /// The order with the same tie-break and the other degree convention.
    pub fn flip_degree(self) -> MonomialOrder {
        match self {
            MonomialOrder::GrevLex => MonomialOrder::GreenGrevLex,
            MonomialOrder::GrLex => MonomialOrder::GreenGrLex,
            MonomialOrder::GreenGrevLex => MonomialOrder::GrevLex,
            MonomialOrder::GreenGrLex => MonomialOrder::GrLex,
        }
    }

    /// The degree-ascending variant with the same tie-break.
    pub fn green(self) -> MonomialOrder {
        if self.is_green() {
            self
        } else {
            self.flip_degree()
        }
    }

    fn reverse_lex_tie(self) -> bool {
        matches!(self, MonomialOrder::GrevLex | MonomialOrder::GreenGrevLex)
    }

    pub fn compare(self, a: &MultiIndex, b: &MultiIndex) -> Result<Ordering> {
        a.check_len(b)?;
        Ok(self.cmp(a, b))
    }

    /// Like [`compare`](Self::compare) for indices known to have equal length.
    pub fn cmp(self, a: &MultiIndex, b: &MultiIndex) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        let by_degree = a.degree().cmp(&b.degree());
        let by_degree = if self.is_green() { by_degree.reverse() } else { by_degree };
        if by_degree != Ordering::Equal {
            return by_degree;
        }
        let (ea, eb) = (a.exponents(), b.exponents());
        if self.reverse_lex_tie() {
            for k in (0..ea.len()).rev() {
                if ea[k] != eb[k] {
                    // smaller power of the last differing variable wins
                    return eb[k].cmp(&ea[k]);
                }
            }
        } else {
            for k in 0..ea.len() {
                if ea[k] != eb[k] {
                    return ea[k].cmp(&eb[k]);
                }
            }
        }
        Ordering::Equal
    }

    /// Sorts monomials from greatest to least.
    pub fn sort_descending(self, monomials: &mut [MultiIndex]) {
        monomials.sort_by(|a, b| self.cmp(b, a));
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::GrevLex => "grevlex",
            MonomialOrder::GrLex => "grlex",
            MonomialOrder::GreenGrevLex => "green-grevlex",
            MonomialOrder::GreenGrLex => "green-grlex",
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonomialOrder {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        MonomialOrder::ALL
            .into_iter()
            .find(|o| o.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| Error::InvalidConfig(format!("unknown monomial order `{s}`")))
    }
}
