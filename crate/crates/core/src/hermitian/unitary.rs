use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{Matrix, TowerElement};
use crate::error::Result;

use super::Signature;

/// Cayley transform `(I - S)(I + S)^{-1}` of `S = J K` for anti-Hermitian
/// `K`; the result satisfies `T* J T = J`.
pub fn cayley(j: &Matrix, k: &Matrix) -> Result<Matrix> {
    let n = j.rows();
    let s = j.try_mul(k)?;
    let id = Matrix::identity(n);
    id.sub(&s)?.try_mul(&id.add(&s)?.inverse()?)
}

/// Exact `J`-unitary matrix for the homogeneous form of `sig`, with
/// Gaussian-rational entries, determined by `(seed, index)`.
pub fn random_j_unitary(sig: Signature, seed: u64, index: u64) -> Matrix {
    const BOUND: i64 = 4;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    let j = sig.j_matrix();
    let n = j.rows();
    loop {
        let mut k = Matrix::zeros(n, n);
        for r in 0..n {
            k[(r, r)] = TowerElement::from_int(rng.random_range(-BOUND..=BOUND)) * TowerElement::i();
            for c in r + 1..n {
                let x = TowerElement::from_int(rng.random_range(-BOUND..=BOUND));
                let y = TowerElement::from_int(rng.random_range(-BOUND..=BOUND));
                let v = x + y * TowerElement::i();
                k[(c, r)] = -v.conj();
                k[(r, c)] = v;
            }
        }
        if let Ok(t) = cayley(&j, &k) {
            return t;
        }
    }
}

pub fn is_j_unitary(t: &Matrix, j: &Matrix) -> bool {
    t.adjoint().try_mul(j).and_then(|a| a.try_mul(t)).is_ok_and(|p| p == *j)
}
