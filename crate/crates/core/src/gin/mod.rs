//! Genericization: seeded random coordinate changes and the gins of
//! homogeneous ideals and finite-dimensional polynomial subspaces.

mod afspan;
mod subspace;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{Matrix, TowerElement};
use crate::error::{Error, Result};
use crate::groebner::{initial_ideal, Ideal, MonomialIdeal};
use crate::poly::{MonomialOrder, Polynomial, Roster};

pub use afspan::{afspan_gin, afspan_gin_via_homogenization};
pub use subspace::{coefficient_matrix, initial_subspace, MonomialSubspace};

pub const DEFAULT_SEED: u64 = 20240901;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GinConfig {
    pub seed: u64,
    pub coeff_bound: u64,
    pub max_retries: u32,
    pub verify_samples: usize,
}

impl Default for GinConfig {
    fn default() -> Self {
        GinConfig { seed: DEFAULT_SEED, coeff_bound: 997, max_retries: 3, verify_samples: 2 }
    }
}

impl GinConfig {
    pub fn with_seed(seed: u64) -> Self {
        GinConfig { seed, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.coeff_bound < 2 {
            return Err(Error::InvalidConfig(format!("coeff_bound must be at least 2, got {}", self.coeff_bound)));
        }
        if self.verify_samples < 2 {
            return Err(Error::InvalidConfig(format!("verify_samples must be at least 2, got {}", self.verify_samples)));
        }
        Ok(())
    }

    /// Coefficient bound used on the given retry attempt.
    fn bound_for(&self, attempt: u32) -> i64 {
        let b = self.coeff_bound.saturating_mul(10u64.saturating_pow(attempt));
        i64::try_from(b).unwrap_or(i64::MAX / 2)
    }
}

// Re-keying a colliding draw jumps to a stream range no ordinary index uses.
const REKEY_STRIDE: u64 = 1 << 40;

fn stream(seed: u64, sample_index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(sample_index);
    rng
}

fn draw(rng: &mut ChaCha8Rng, bound: i64) -> TowerElement {
    TowerElement::from_int(rng.random_range(-bound..=bound))
}

fn draw_invertible(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Matrix {
    loop {
        let m = Matrix::from_fn(n, n, |_, _| draw(rng, bound));
        if !m.determinant().expect("square").is_zero() {
            return m;
        }
    }
}

fn draw_shift(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Vec<TowerElement> {
    loop {
        let c: Vec<TowerElement> = (0..n).map(|_| draw(rng, bound)).collect();
        if c.iter().any(|x| !x.is_zero()) {
            return c;
        }
    }
}

/// Invertible `n x n` integer matrix with entries in `[-coeff_bound, coeff_bound]`,
/// determined by `(cfg.seed, sample_index)`.
pub fn random_linear_change(n: usize, cfg: &GinConfig, sample_index: u64) -> Matrix {
    draw_invertible(&mut stream(cfg.seed, sample_index), n, cfg.bound_for(0))
}

/// Invertible affine map `z -> M z + c` with `c != 0`.
pub fn random_affine_change(n: usize, cfg: &GinConfig, sample_index: u64) -> (Matrix, Vec<TowerElement>) {
    affine_with_bound(n, cfg.seed, sample_index, cfg.bound_for(0))
}

fn affine_with_bound(n: usize, seed: u64, index: u64, bound: i64) -> (Matrix, Vec<TowerElement>) {
    let mut rng = stream(seed, index);
    let m = draw_invertible(&mut rng, n, bound);
    let c = draw_shift(&mut rng, n, bound);
    (m, c)
}

/// Draws `count` pairwise distinct samples for one attempt.
fn distinct_samples<T: PartialEq>(cfg: &GinConfig, attempt: u32, mut draw_at: impl FnMut(u64, i64) -> T) -> Vec<T> {
    let bound = cfg.bound_for(attempt);
    let base = u64::from(attempt) * cfg.verify_samples as u64;
    let mut out: Vec<T> = Vec::with_capacity(cfg.verify_samples);
    for k in 0..cfg.verify_samples as u64 {
        let mut index = base + k;
        loop {
            let sample = draw_at(index, bound);
            if !out.contains(&sample) {
                out.push(sample);
                break;
            }
            index += REKEY_STRIDE;
        }
    }
    out
}

fn all_agree<T: PartialEq>(results: &[T]) -> bool {
    results.windows(2).all(|w| w[0] == w[1])
}

fn require_classical(ord: MonomialOrder) -> Result<()> {
    if ord.is_green() {
        return Err(Error::OrderKind(ord.to_string(), "ideal gins need a degree-increasing order"));
    }
    Ok(())
}

fn require_green(ord: MonomialOrder) -> Result<()> {
    if !ord.is_green() {
        return Err(Error::OrderKind(ord.to_string(), "subspace gins need a degree-decreasing order"));
    }
    Ok(())
}

/// `gin(I) = in(I o T)` for generic linear `T`.
pub fn gin_ideal(ideal: &Ideal, ord: MonomialOrder, cfg: &GinConfig) -> Result<MonomialIdeal> {
    cfg.validate()?;
    require_classical(ord)?;
    let n = ideal.nvars();
    for attempt in 0..=cfg.max_retries {
        let changes = distinct_samples(cfg, attempt, |index, bound| draw_invertible(&mut stream(cfg.seed, index), n, bound));
        let results: Vec<MonomialIdeal> =
            changes.par_iter().map(|t| initial_ideal(&ideal.transform(t)?, ord)).collect::<Result<_>>()?;
        if all_agree(&results) && results[0].is_borel_fixed() {
            return Ok(results.into_iter().next().expect("at least two samples"));
        }
    }
    Err(Error::GenericityFailure { retries: cfg.max_retries })
}

/// `gin(X) = in(X o tau)` for generic affine `tau`, `X = span(xs)`.
pub fn gin_subspace(roster: &Roster, xs: &[Polynomial], ord: MonomialOrder, cfg: &GinConfig) -> Result<MonomialSubspace> {
    cfg.validate()?;
    require_green(ord)?;
    if xs.iter().any(|p| p.roster() != roster) {
        return Err(Error::RosterMismatch);
    }
    let n = roster.len();
    for attempt in 0..=cfg.max_retries {
        let changes = distinct_samples(cfg, attempt, |index, bound| affine_with_bound(n, cfg.seed, index, bound));
        let results: Vec<MonomialSubspace> = changes
            .par_iter()
            .map(|(m, c)| {
                let moved: Vec<Polynomial> = xs.iter().map(|p| p.substitute_affine(m, c)).collect::<Result<_>>()?;
                initial_subspace(roster, &moved, ord)
            })
            .collect::<Result<_>>()?;
        if all_agree(&results) && results[0].is_affine_borel_fixed() {
            return Ok(results.into_iter().next().expect("at least two samples"));
        }
    }
    Err(Error::GenericityFailure { retries: cfg.max_retries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MultiIndex;

    fn roster3() -> Roster {
        Roster::numbered("Z", 0, 3)
    }

    fn mono(r: &Roster, e: &[u32]) -> Polynomial {
        Polynomial::monomial(r.clone(), MultiIndex::new(e.to_vec()), TowerElement::one())
    }

    fn ideal(r: &Roster, gens: &[&[u32]]) -> Ideal {
        Ideal::new(gens.iter().map(|e| mono(r, e)).collect()).unwrap()
    }

    fn monomial_ideal(r: &Roster, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::from_generators(r.clone(), gens.iter().map(|e| MultiIndex::new(e.to_vec()))).unwrap()
    }

    #[test]
    fn linear_change_is_deterministic_and_invertible() {
        let cfg = GinConfig::with_seed(42);
        let a = random_linear_change(3, &cfg, 0);
        assert_eq!(a, random_linear_change(3, &cfg, 0));
        assert!(!a.determinant().unwrap().is_zero());
        assert_ne!(a, random_linear_change(3, &cfg, 1));
    }

    #[test]
    fn affine_shift_nonzero() {
        let cfg = GinConfig::default();
        for k in 0..20 {
            let (_, c) = random_affine_change(1, &cfg, k);
            assert!(!c[0].is_zero());
        }
    }

    #[test]
    fn config_validation() {
        assert!(GinConfig { coeff_bound: 1, ..GinConfig::default() }.validate().is_err());
        assert!(GinConfig { verify_samples: 1, ..GinConfig::default() }.validate().is_err());
        assert!(GinConfig::default().validate().is_ok());
    }

    #[test]
    fn order_sensitivity() {
        let r = roster3();
        let cfg = GinConfig::default();
        let i = ideal(&r, &[&[2, 0, 0], &[0, 1, 1]]);
        let grevlex = gin_ideal(&i, MonomialOrder::GrevLex, &cfg).unwrap();
        assert_eq!(grevlex, monomial_ideal(&r, &[&[2, 0, 0], &[1, 1, 0], &[0, 3, 0]]));
        let grlex = gin_ideal(&i, MonomialOrder::GrLex, &cfg).unwrap();
        assert_eq!(grlex, monomial_ideal(&r, &[&[2, 0, 0], &[1, 1, 0], &[1, 0, 2], &[0, 4, 0]]));

        let j = ideal(&r, &[&[2, 0, 0], &[0, 2, 0]]);
        let expected = monomial_ideal(&r, &[&[2, 0, 0], &[1, 1, 0], &[0, 3, 0]]);
        assert_eq!(gin_ideal(&j, MonomialOrder::GrevLex, &cfg).unwrap(), expected);
        assert_eq!(gin_ideal(&j, MonomialOrder::GrLex, &cfg).unwrap(), expected);
    }

    #[test]
    fn gin_rejects_green_order() {
        let r = roster3();
        let i = ideal(&r, &[&[1, 0, 0]]);
        assert!(matches!(gin_ideal(&i, MonomialOrder::GreenGrevLex, &GinConfig::default()), Err(Error::OrderKind(..))));
    }

    #[test]
    fn subspace_toy_example() {
        let r = Roster::new(["z1", "z2"]);
        let xs = [Polynomial::one(r.clone()), Polynomial::var(r.clone(), 1)];
        let got = gin_subspace(&r, &xs, MonomialOrder::GreenGrLex, &GinConfig::default()).unwrap();
        let expected = MonomialSubspace::new(r.clone(), [MultiIndex::new(vec![0, 0]), MultiIndex::new(vec![1, 0])]).unwrap();
        assert_eq!(got, expected);

        let constant = gin_subspace(&r, &xs[..1], MonomialOrder::GreenGrLex, &GinConfig::default()).unwrap();
        assert_eq!(constant.render(MonomialOrder::GreenGrLex), ["1"]);
        assert!(matches!(gin_subspace(&r, &xs, MonomialOrder::GrLex, &GinConfig::default()), Err(Error::OrderKind(..))));
    }
}
