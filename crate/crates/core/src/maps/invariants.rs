use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gin::{afspan_gin, afspan_gin_via_homogenization, gin_ideal, GinConfig, MonomialSubspace};
use crate::groebner::MonomialIdeal;
use crate::hermitian::{quotient_gin_of_form, Signature};
use crate::poly::MonomialOrder;

use super::model::{component_ideal, homogenize_map, quotient, RationalMap};

#[derive(Clone, Debug, Default)]
pub struct Timings {
    pub verify: Duration,
    pub components: Duration,
    pub quotient: Duration,
    pub afspan: Duration,
}

/// The three gins of one map.
#[derive(Clone, Debug)]
pub struct InvariantReport {
    pub map: String,
    pub degree: u32,
    pub source: Signature,
    pub target: Signature,
    pub orders: Vec<MonomialOrder>,
    pub seed: u64,
    pub side: i8,
    /// One entry per requested order, in the same order as `orders`.
    pub gin_components: Vec<MonomialIdeal>,
    /// Computed under the first requested order.
    pub gin_quotient: MonomialIdeal,
    pub gin_afspan: MonomialSubspace,
    pub afspan_crosscheck: bool,
    pub timings: Timings,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    map: &'a str,
    degree: u32,
    source: Signature,
    target: Signature,
    orders: Vec<&'static str>,
    seed: u64,
    side: i8,
    gin_components: Vec<String>,
    gin_quotient: Vec<String>,
    gin_afspan: Vec<String>,
    afspan_crosscheck: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    gin_components_by_order: Option<BTreeMap<&'static str, Vec<String>>>,
}

impl InvariantReport {
    pub fn primary_order(&self) -> MonomialOrder {
        self.orders[0]
    }

    /// Stable JSON rendering; timings are left out so output is reproducible.
    pub fn to_json(&self) -> serde_json::Value {
        let ord = self.primary_order();
        let by_order = (self.orders.len() > 1).then(|| {
            self.orders.iter().zip(&self.gin_components).map(|(o, g)| (o.name(), g.render(*o))).collect()
        });
        let json = ReportJson {
            map: &self.map,
            degree: self.degree,
            source: self.source,
            target: self.target,
            orders: self.orders.iter().map(|o| o.name()).collect(),
            seed: self.seed,
            side: self.side,
            gin_components: self.gin_components[0].render(ord),
            gin_quotient: self.gin_quotient.render(ord),
            gin_afspan: self.gin_afspan.render(MonomialOrder::GreenGrLex),
            afspan_crosscheck: self.afspan_crosscheck,
            gin_components_by_order: by_order,
        };
        serde_json::to_value(json).expect("plain data serializes")
    }
}

/// Computes all invariants of `f`. `orders` must be nonempty and classical.
pub fn invariants(f: &RationalMap, cfg: &GinConfig, orders: &[MonomialOrder]) -> Result<InvariantReport> {
    let Some(&primary) = orders.first() else {
        return Err(Error::InvalidConfig("at least one monomial order is required".into()));
    };
    cfg.validate()?;
    let mut timings = Timings::default();
    let h = homogenize_map(f);

    let start = Instant::now();
    let (q, side) = quotient(&h)?;
    timings.verify = start.elapsed();

    let start = Instant::now();
    let ideal = component_ideal(&h)?;
    let gin_components = orders.iter().map(|&o| gin_ideal(&ideal, o, cfg)).collect::<Result<Vec<_>>>()?;
    timings.components = start.elapsed();

    let start = Instant::now();
    let gin_quotient = quotient_gin_of_form(&q, cfg, primary)?;
    timings.quotient = start.elapsed();

    let start = Instant::now();
    let gin_afspan = afspan_gin(f, cfg)?;
    let afspan_crosscheck = afspan_gin_via_homogenization(f, cfg)? == gin_afspan;
    timings.afspan = start.elapsed();

    Ok(InvariantReport {
        map: f.label(),
        degree: h.degree(),
        source: f.source(),
        target: f.target(),
        orders: orders.to_vec(),
        seed: cfg.seed,
        side,
        gin_components,
        gin_quotient,
        gin_afspan,
        afspan_crosscheck,
        timings,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "provably inequivalent")]
    ProvablyInequivalent,
    #[serde(rename = "indistinguishable by these invariants")]
    Indistinguishable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::ProvablyInequivalent => "provably inequivalent",
            Verdict::Indistinguishable => "indistinguishable by these invariants",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantDiff {
    pub invariant: String,
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Comparison {
    pub map_a: String,
    pub map_b: String,
    pub invariants: Vec<InvariantDiff>,
    pub verdict: Verdict,
}

/// Compares two reports. Differing invariants certify inequivalence; equal
/// ones never certify equivalence.
pub fn compare(a: &InvariantReport, b: &InvariantReport) -> Result<Comparison> {
    if a.source != b.source || a.target != b.target {
        return Err(Error::SignatureMismatch);
    }
    if a.orders != b.orders {
        return Err(Error::InvalidConfig("reports were computed under different monomial orders".into()));
    }
    let mut diffs: Vec<InvariantDiff> = a
        .orders
        .iter()
        .zip(a.gin_components.iter().zip(&b.gin_components))
        .map(|(o, (x, y))| InvariantDiff { invariant: format!("gin_components[{o}]"), equal: x == y })
        .collect();
    diffs.push(InvariantDiff { invariant: "gin_quotient".into(), equal: a.gin_quotient == b.gin_quotient });
    diffs.push(InvariantDiff { invariant: "gin_afspan".into(), equal: a.gin_afspan == b.gin_afspan });
    let verdict =
        if diffs.iter().all(|d| d.equal) { Verdict::Indistinguishable } else { Verdict::ProvablyInequivalent };
    Ok(Comparison { map_a: a.map.clone(), map_b: b.map.clone(), invariants: diffs, verdict })
}
