//! Benchmark inputs shared by the criterion targets.

use std::collections::BTreeMap;

use ginvar::maps::{catalog, component_ideal, homogenize_map, HomogenizedMap, RationalMap};
use ginvar::{Ideal, TowerElement};

pub fn catalog_map(name: &str) -> RationalMap {
    let mut params = BTreeMap::new();
    if name == "fhjz" {
        params.insert("a".to_string(), "1/2".to_string());
    }
    catalog(name, &params).expect("catalog entry")
}

pub fn homogenized(name: &str) -> HomogenizedMap {
    homogenize_map(&catalog_map(name))
}

pub fn components(name: &str) -> Ideal {
    component_ideal(&homogenized(name)).expect("nonzero components")
}

/// A dense tower element touching every basis coordinate.
pub fn dense_element(shift: i64) -> TowerElement {
    let coords = std::array::from_fn(|k| {
        let k = k as i64;
        ginvar::Rational::new((k * 7 + shift).into(), (k + 2).into())
    });
    TowerElement::from_coords(coords)
}
