use crate::error::Result;
use crate::maps::{component_ideal, homogenize_map, source_roster, RationalMap};
use crate::poly::MonomialOrder;

use super::{gin_ideal, gin_subspace, GinConfig, MonomialSubspace};

/// gin of the affine span computed directly, as the generic initial
/// subspace of `span(denominator, numerators)` under green grlex.
pub fn afspan_gin(f: &RationalMap, cfg: &GinConfig) -> Result<MonomialSubspace> {
    gin_subspace(f.roster(), &f.afspan(), MonomialOrder::GreenGrLex, cfg)
}

/// gin of the affine span read off the degree-`d` generators of the grlex
/// gin of the homogenized components, with `Z0` set to 1.
///
/// Within one degree, grlex with `Z0` largest becomes green grlex on `z`
/// after dehomogenizing; grevlex has no such property.
pub fn afspan_gin_via_homogenization(f: &RationalMap, cfg: &GinConfig) -> Result<MonomialSubspace> {
    let h = homogenize_map(f);
    let gin = gin_ideal(&component_ideal(&h)?, MonomialOrder::GrLex, cfg)?;
    let n = f.source().affine_dim();
    MonomialSubspace::new(source_roster(n), gin.generators_of_degree(h.degree()).into_iter().map(|m| m.strip_first()))
}
