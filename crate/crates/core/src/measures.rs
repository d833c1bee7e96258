//! Closed-form entanglement measures.
//!
//! Two-qubit concurrence and concurrence of assistance both come from the
//! same four numbers `μ_1 ≥ … ≥ μ_4`, the square roots of the eigenvalues of
//! `ρ ρ̃` with `ρ̃` the spin-flipped state:
//!
//! * concurrence `C = max(0, μ_1 − μ_2 − μ_3 − μ_4)` (Wootters),
//! * assistance `C_a = μ_1 + μ_2 + μ_3 + μ_4` (fidelity between `ρ` and `ρ̃`).
//!
//! The `μ_i` are computed as singular values of `Lᵀ (σ_y⊗σ_y) L` for a factor
//! `ρ = L L†`, which avoids taking square roots of tiny, noisy eigenvalues.
//! Negativity uses the `‖ρ^{T_A}‖₁ − 1` convention, twice the more common one.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qcore::linalg::{hermitian_eigen, hermitian_eigenvalues, sigma_yy, singular_values};
use crate::qcore::{CMatrix, DensityMatrix, PureState, SubsystemSet, C64};

/// Values down to this far below zero are rounding and clip to zero.
pub const MEASURE_CLIP: f64 = 1e-10;

/// Eigenvalues of a two-qubit `ρ` below this are dropped from its factor.
const FACTOR_DROP: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MeasureKind {
    Concurrence,
    Coa,
    Negativity,
    Cren,
    Crenoa,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeasureValue {
    pub value: f64,
    pub kind: MeasureKind,
}

impl MeasureValue {
    pub fn new(kind: MeasureKind, value: f64) -> Self {
        let value = if (-MEASURE_CLIP..0.0).contains(&value) {
            0.0
        } else {
            value
        };
        Self { value, kind }
    }
}

/// `C(|ψ⟩) = √(2(1 − Tr ρ_A²))` across the cut `part_a | rest`.
///
/// `1 − Tr ρ_A²` is evaluated as twice the sum of squared 2×2 minors of the
/// coefficient matrix (Cauchy–Binet), which is exact zero on product states.
pub fn concurrence_pure(psi: &PureState, part_a: &SubsystemSet) -> Result<MeasureValue> {
    part_a.check_proper(psi.num_qubits())?;
    let mut m = psi.coefficient_matrix(part_a)?;
    if m.nrows() > m.ncols() {
        m = m.transpose();
    }
    let (rows, cols) = (m.nrows(), m.ncols());
    let mut e2 = 0.0;
    for i in 0..rows {
        for j in i + 1..rows {
            for k in 0..cols {
                let (aik, ajk) = (m[(i, k)], m[(j, k)]);
                for l in k + 1..cols {
                    e2 += (aik * m[(j, l)] - m[(i, l)] * ajk).norm_sqr();
                }
            }
        }
    }
    Ok(MeasureValue::new(MeasureKind::Concurrence, 2.0 * e2.sqrt()))
}

/// `μ_1 ≥ μ_2 ≥ μ_3 ≥ μ_4` for a two-qubit density matrix.
pub fn two_qubit_mu(rho: &DensityMatrix) -> Result<[f64; 4]> {
    check_two_qubit(rho)?;
    let (vals, vecs) = hermitian_eigen(rho.matrix());
    let cols: Vec<usize> = (0..4).filter(|&i| vals[i] > FACTOR_DROP).collect();
    if cols.is_empty() {
        return Ok([0.0; 4]);
    }
    let w = CMatrix::from_fn(4, cols.len(), |r, c| {
        vecs[(r, cols[c])] * vals[cols[c]].sqrt()
    });
    Ok(mu_from_factor(&w))
}

/// `μ_i` for `ρ = W W†`, where `W` is any `4 × m` factor.
pub(crate) fn mu_from_factor(w: &CMatrix) -> [f64; 4] {
    debug_assert_eq!(w.nrows(), 4);
    let l = if w.ncols() > 4 {
        w.adjoint().qr().r().adjoint()
    } else {
        w.clone()
    };
    let tau = l.transpose() * sigma_yy() * &l;
    let mut mu = [0.0; 4];
    for (slot, s) in mu.iter_mut().zip(singular_values(&tau)) {
        *slot = s;
    }
    mu
}

/// Two-qubit concurrence and concurrence of assistance of the reduction of
/// `psi` onto qubits `a`, `b` (in that order).
pub fn pair_measures(psi: &PureState, a: usize, b: usize) -> Result<(f64, f64)> {
    if a == b {
        return Err(Error::InvalidSubsystem(format!("pair ({a},{b}) repeats a qubit")));
    }
    let pair = SubsystemSet::new([a, b])?;
    let w = psi.coefficient_matrix(&pair)?;
    let mu = mu_from_factor(&w);
    Ok((concurrence_from_mu(&mu), coa_from_mu(&mu)))
}

fn concurrence_from_mu(mu: &[f64; 4]) -> f64 {
    (mu[0] - mu[1] - mu[2] - mu[3]).max(0.0)
}

fn coa_from_mu(mu: &[f64; 4]) -> f64 {
    mu.iter().sum()
}

fn check_two_qubit(rho: &DensityMatrix) -> Result<()> {
    if rho.num_qubits() != 2 {
        return Err(Error::InvalidInput(format!(
            "expected a two-qubit (4x4) state, got dimension {}",
            rho.dim()
        )));
    }
    Ok(())
}

pub fn concurrence_two_qubit(rho: &DensityMatrix) -> Result<MeasureValue> {
    let mu = two_qubit_mu(rho)?;
    Ok(MeasureValue::new(MeasureKind::Concurrence, concurrence_from_mu(&mu)))
}

pub fn coa_two_qubit(rho: &DensityMatrix) -> Result<MeasureValue> {
    let mu = two_qubit_mu(rho)?;
    Ok(MeasureValue::new(MeasureKind::Coa, coa_from_mu(&mu)))
}

/// `‖ρ^{T_A}‖₁ − 1`.
pub fn negativity(rho: &DensityMatrix, part_a: &SubsystemSet) -> Result<MeasureValue> {
    part_a.check_proper(rho.num_qubits())?;
    let pt = rho.partial_transpose(part_a)?;
    let trace_norm: f64 = hermitian_eigenvalues(&pt).iter().map(|l| l.abs()).sum();
    Ok(MeasureValue::new(MeasureKind::Negativity, trace_norm - 1.0))
}

/// `N(|ψ⟩) = 2 Σ_{i<j} √(λ_i λ_j)` from the Schmidt coefficients.
pub fn negativity_pure_schmidt(psi: &PureState, part_a: &SubsystemSet) -> Result<MeasureValue> {
    let s = psi.schmidt_singular_values(part_a)?;
    let mut total = 0.0;
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            total += s[i] * s[j];
        }
    }
    Ok(MeasureValue::new(MeasureKind::Negativity, 2.0 * total))
}

/// Convex-roof extended negativity; equals the concurrence on two qubits.
pub fn cren_two_qubit(rho: &DensityMatrix) -> Result<MeasureValue> {
    let c = concurrence_two_qubit(rho)?;
    Ok(MeasureValue::new(MeasureKind::Cren, c.value))
}

/// CREN of assistance; equals the concurrence of assistance on two qubits.
pub fn crenoa_two_qubit(rho: &DensityMatrix) -> Result<MeasureValue> {
    let ca = coa_two_qubit(rho)?;
    Ok(MeasureValue::new(MeasureKind::Crenoa, ca.value))
}

/// Returns `(C, N)` for a pure bipartition; `N ≥ C` always, with equality
/// at Schmidt rank 2.
pub fn pure_concurrence_vs_negativity_check(
    psi: &PureState,
    part: &SubsystemSet,
) -> Result<(MeasureValue, MeasureValue)> {
    Ok((concurrence_pure(psi, part)?, negativity_pure_schmidt(psi, part)?))
}

/// Builds a pure two-qubit density matrix; handy for closed-form checks.
pub fn two_qubit_pure(amps: [C64; 4]) -> Result<DensityMatrix> {
    Ok(PureState::new(amps.to_vec())?.to_density())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcore::{haar_random_pure, partial_trace};

    fn c(re: f64) -> C64 {
        C64::new(re, 0.0)
    }

    fn bell() -> PureState {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        PureState::new(vec![c(s), c(0.0), c(0.0), c(s)]).unwrap()
    }

    fn gsd3_equal() -> PureState {
        let l = 1.0 / 5f64.sqrt();
        let mut amps = vec![c(0.0); 8];
        for idx in [0, 4, 5, 6, 7] {
            amps[idx] = c(l);
        }
        PureState::new(amps).unwrap()
    }

    #[test]
    fn pure_concurrence_examples() {
        let a = SubsystemSet::single(0);
        assert!((concurrence_pure(&bell(), &a).unwrap().value - 1.0).abs() < 1e-14);
        let v = concurrence_pure(&gsd3_equal(), &a).unwrap().value;
        assert!((v - 2.0 * 3f64.sqrt() / 5.0).abs() < 1e-14);
        let prod = PureState::basis(&[0, 1, 0]).unwrap();
        assert_eq!(concurrence_pure(&prod, &a).unwrap().value, 0.0);
    }

    #[test]
    fn pure_concurrence_is_symmetric_and_matches_linear_entropy() {
        let psi = haar_random_pure(4, 11).unwrap();
        let part = SubsystemSet::new([0, 2]).unwrap();
        let c1 = concurrence_pure(&psi, &part).unwrap().value;
        let c2 = concurrence_pure(&psi, &part.complement(4)).unwrap().value;
        assert!((c1 - c2).abs() < 1e-13);
        let t = psi.reduced(&part).unwrap().linear_entropy();
        assert!((c1 - (2.0 * t).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn two_qubit_examples() {
        let b = bell().to_density();
        assert!((concurrence_two_qubit(&b).unwrap().value - 1.0).abs() < 1e-12);
        let mixed = DensityMatrix::maximally_mixed(2);
        assert_eq!(concurrence_two_qubit(&mixed).unwrap().value, 0.0);
        assert!((coa_two_qubit(&mixed).unwrap().value - 1.0).abs() < 1e-12);
        assert!((cren_two_qubit(&b).unwrap().value - 1.0).abs() < 1e-12);
        assert_eq!(cren_two_qubit(&mixed).unwrap().value, 0.0);
        assert!(concurrence_two_qubit(&DensityMatrix::maximally_mixed(1)).is_err());
        assert!(coa_two_qubit(&DensityMatrix::maximally_mixed(3)).is_err());
    }

    #[test]
    fn example_one_pair_values() {
        let psi = gsd3_equal();
        let rho_ab = partial_trace(&psi.to_density(), &SubsystemSet::new([0, 1]).unwrap()).unwrap();
        assert!((concurrence_two_qubit(&rho_ab).unwrap().value - 0.4).abs() < 1e-12);
        let ca = 2.0 * 2f64.sqrt() / 5.0;
        assert!((coa_two_qubit(&rho_ab).unwrap().value - ca).abs() < 1e-12);
        assert!((crenoa_two_qubit(&rho_ab).unwrap().value - ca).abs() < 1e-12);
        let (cp, cap) = pair_measures(&psi, 0, 1).unwrap();
        assert!((cp - 0.4).abs() < 1e-12 && (cap - ca).abs() < 1e-12);
    }

    #[test]
    fn coa_of_pure_two_qubit_equals_concurrence() {
        for seed in 0..20 {
            let psi = haar_random_pure(2, seed).unwrap();
            let rho = psi.to_density();
            let cp = concurrence_pure(&psi, &SubsystemSet::single(0)).unwrap().value;
            assert!((concurrence_two_qubit(&rho).unwrap().value - cp).abs() < 1e-9);
            assert!((coa_two_qubit(&rho).unwrap().value - cp).abs() < 1e-9);
        }
    }

    #[test]
    fn negativity_examples() {
        let a = SubsystemSet::single(0);
        assert!((negativity(&bell().to_density(), &a).unwrap().value - 1.0).abs() < 1e-12);
        let prod = PureState::basis(&[0, 1]).unwrap();
        assert!(negativity(&prod.to_density(), &a).unwrap().value.abs() < 1e-12);
        assert_eq!(negativity_pure_schmidt(&prod, &a).unwrap().value, 0.0);
        // Schmidt coefficients (2/3, 1/3): N = 2√(2/9).
        let psi = PureState::new(vec![c((2.0f64 / 3.0).sqrt()), c(0.0), c(0.0), c((1.0f64 / 3.0).sqrt())]).unwrap();
        let expected = 2.0 * 2f64.sqrt() / 3.0;
        assert!((negativity(&psi.to_density(), &a).unwrap().value - expected).abs() < 1e-12);
        assert!((negativity_pure_schmidt(&psi, &a).unwrap().value - expected).abs() < 1e-12);
        assert!(negativity(&prod.to_density(), &SubsystemSet::full(2)).is_err());
    }

    #[test]
    fn concurrence_versus_negativity() {
        let (c0, n0) = pure_concurrence_vs_negativity_check(&bell(), &SubsystemSet::single(0)).unwrap();
        assert!((c0.value - 1.0).abs() < 1e-12 && (n0.value - 1.0).abs() < 1e-12);
        let psi = haar_random_pure(6, 5).unwrap();
        let (c1, n1) =
            pure_concurrence_vs_negativity_check(&psi, &SubsystemSet::new([0, 1, 2]).unwrap()).unwrap();
        assert!(n1.value > c1.value + 1e-6);
    }

    #[test]
    fn measure_value_clips_rounding_negatives() {
        assert_eq!(MeasureValue::new(MeasureKind::Coa, -1e-12).value, 0.0);
        assert_eq!(MeasureValue::new(MeasureKind::Coa, -1e-6).value, -1e-6);
    }
}
