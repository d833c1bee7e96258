use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use super::linalg::C64;
use super::state::{PureState, MAX_QUBITS};
use crate::error::{Error, Result};

/// Haar-random pure state: i.i.d. standard complex Gaussian amplitudes,
/// normalized. Deterministic in `seed`.
pub fn haar_random_pure(n: usize, seed: u64) -> Result<PureState> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    haar_random_pure_with(n, &mut rng)
}

/// Same as [`haar_random_pure`] but drawing from a caller-owned generator.
pub fn haar_random_pure_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<PureState> {
    if !(1..=MAX_QUBITS).contains(&n) {
        return Err(Error::OutOfRange {
            what: "qubit count",
            detail: format!("{n} not in 1..={MAX_QUBITS}"),
        });
    }
    let amps: Vec<C64> = (0..1usize << n)
        .map(|_| C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
        .collect();
    PureState::from_unnormalized(amps)
}

/// Random single-qubit unitary (Haar, via QR of a Ginibre 2×2).
pub fn random_unitary_2x2<R: Rng + ?Sized>(rng: &mut R) -> [[C64; 2]; 2] {
    let mut g = || C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal));
    let (a, b, c, d) = (g(), g(), g(), g());
    // Gram-Schmidt on the columns (a, b) and (c, d).
    let n1 = (a.norm_sqr() + b.norm_sqr()).sqrt();
    let (u00, u10) = (a / n1, b / n1);
    let proj = u00.conj() * c + u10.conj() * d;
    let (c2, d2) = (c - proj * u00, d - proj * u10);
    let n2 = (c2.norm_sqr() + d2.norm_sqr()).sqrt();
    [[u00, c2 / n2], [u10, d2 / n2]]
}

/// Deterministic per-sample seed derived from a base seed (SplitMix64 step).
pub fn sample_seed(base: u64, index: u64) -> u64 {
    let mut z = base.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}
