
use super::density::DensityMatrix;
use super::linalg::{singular_values, CMatrix, C64};
use super::subsystem::SubsystemSet;
use crate::error::{Error, Result};

/// Largest supported register.
pub const MAX_QUBITS: usize = 12;

/// Squared-norm tolerance for a normalized state.
pub const NORM_TOLERANCE: f64 = 1e-10;

/// Reduction eigenvalues above this count towards the Schmidt rank.
pub const SCHMIDT_THRESHOLD: f64 = 1e-10;

/// A normalized pure state of `num_qubits` qubits.
///
/// Amplitude index bits are big-endian: qubit 0 is the most significant bit,
/// so `|q0 q1 ... q_{n-1}>` sits at index `q0·2^{n-1} + ... + q_{n-1}`.
#[derive(Debug, Clone, PartialEq)]
pub struct PureState {
    num_qubits: usize,
    amplitudes: Vec<C64>,
}

impl PureState {
    /// Wraps an already normalized amplitude vector.
    pub fn new(amplitudes: Vec<C64>) -> Result<Self> {
        let num_qubits = qubits_for_len(amplitudes.len())?;
        let norm_sq: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sq - 1.0).abs() > NORM_TOLERANCE {
            return Err(Error::NotNormalized(norm_sq));
        }
        Ok(Self {
            num_qubits,
            amplitudes,
        })
    }

    /// Normalizes `amplitudes` first. Fails only on a zero vector or bad length.
    pub fn from_unnormalized(mut amplitudes: Vec<C64>) -> Result<Self> {
        let num_qubits = qubits_for_len(amplitudes.len())?;
        let norm = amplitudes.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
        if !norm.is_finite() || norm <= 0.0 {
            return Err(Error::NotNormalized(norm * norm));
        }
        amplitudes.iter_mut().for_each(|a| *a /= norm);
        Ok(Self {
            num_qubits,
            amplitudes,
        })
    }

    /// Computational basis state; `bits[q]` is the value of qubit `q`.
    pub fn basis(bits: &[u8]) -> Result<Self> {
        let n = bits.len();
        let idx = bits.iter().fold(0usize, |acc, &b| (acc << 1) | usize::from(b & 1));
        let mut amps = vec![C64::new(0.0, 0.0); 1 << n];
        amps[idx] = C64::new(1.0, 0.0);
        Self::new(amps)
    }

    /// Tensor product `self ⊗ other`; `other`'s qubits are appended.
    pub fn tensor(&self, other: &PureState) -> Result<PureState> {
        let mut amps = Vec::with_capacity(self.amplitudes.len() * other.amplitudes.len());
        for a in &self.amplitudes {
            for b in &other.amplitudes {
                amps.push(a * b);
            }
        }
        PureState::new(amps)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn dim(&self) -> usize {
        self.amplitudes.len()
    }

    pub fn to_density(&self) -> DensityMatrix {
        let v = CMatrix::from_column_slice(self.dim(), 1, &self.amplitudes);
        DensityMatrix::from_parts(self.num_qubits, &v * v.adjoint())
    }

    /// Amplitudes reshaped to a `2^|part| × 2^(n-|part|)` matrix with the
    /// `part` qubits on the rows. `part` may be the whole register, in which
    /// case the matrix has a single column.
    pub fn coefficient_matrix(&self, part: &SubsystemSet) -> Result<CMatrix> {
        part.check_range(self.num_qubits)?;
        if part.is_empty() {
            return Err(Error::InvalidSubsystem("empty subsystem".into()));
        }
        let rest = part.complement(self.num_qubits);
        let n = self.num_qubits;
        let mut m = CMatrix::zeros(1 << part.len(), 1 << rest.len());
        for (idx, amp) in self.amplitudes.iter().enumerate() {
            let row = gather_bits(idx, part.indices(), n);
            let col = gather_bits(idx, rest.indices(), n);
            m[(row, col)] = *amp;
        }
        Ok(m)
    }

    /// Reduced density matrix on `keep`, computed straight from the amplitudes.
    pub fn reduced(&self, keep: &SubsystemSet) -> Result<DensityMatrix> {
        let m = self.coefficient_matrix(keep)?;
        Ok(DensityMatrix::from_parts(keep.len(), &m * m.adjoint()))
    }

    /// Schmidt coefficients `λ_i` (eigenvalues of the reduction on `part`),
    /// descending, from singular values of the coefficient matrix.
    pub fn schmidt_coefficients(&self, part: &SubsystemSet) -> Result<Vec<f64>> {
        part.check_proper(self.num_qubits)?;
        let m = self.coefficient_matrix(part)?;
        Ok(singular_values(&m).into_iter().map(|s| s * s).collect())
    }

    /// Square roots of the Schmidt coefficients (singular values), descending.
    pub fn schmidt_singular_values(&self, part: &SubsystemSet) -> Result<Vec<f64>> {
        part.check_proper(self.num_qubits)?;
        Ok(singular_values(&self.coefficient_matrix(part)?))
    }

    /// Applies a single-qubit unitary (row-major 2×2) to qubit `q`.
    pub fn apply_single_qubit(&self, q: usize, u: [[C64; 2]; 2]) -> Result<PureState> {
        if q >= self.num_qubits {
            return Err(Error::InvalidSubsystem(format!("qubit {q} out of range")));
        }
        let shift = self.num_qubits - 1 - q;
        let mut out = self.amplitudes.clone();
        for idx in 0..self.dim() {
            if (idx >> shift) & 1 == 0 {
                let j = idx | (1 << shift);
                let (a0, a1) = (self.amplitudes[idx], self.amplitudes[j]);
                out[idx] = u[0][0] * a0 + u[0][1] * a1;
                out[j] = u[1][0] * a0 + u[1][1] * a1;
            }
        }
        PureState::from_unnormalized(out)
    }
}

/// Number of Schmidt coefficients above [`SCHMIDT_THRESHOLD`].
pub fn schmidt_rank(psi: &PureState, part: &SubsystemSet) -> Result<usize> {
    Ok(psi
        .schmidt_coefficients(part)?
        .into_iter()
        .filter(|&l| l > SCHMIDT_THRESHOLD)
        .count())
}

pub(crate) fn qubits_for_len(len: usize) -> Result<usize> {
    if len < 2 || !len.is_power_of_two() {
        return Err(Error::InvalidInput(format!(
            "amplitude vector length {len} is not 2^n with n ≥ 1"
        )));
    }
    let n = len.trailing_zeros() as usize;
    if n > MAX_QUBITS {
        return Err(Error::OutOfRange {
            what: "qubit count",
            detail: format!("{n} > {MAX_QUBITS}"),
        });
    }
    Ok(n)
}

/// Packs the bits of `idx` belonging to `qubits` (in order, first most
/// significant) into a sub-index.
pub(crate) fn gather_bits(idx: usize, qubits: &[usize], n: usize) -> usize {
    qubits
        .iter()
        .fold(0, |acc, &q| (acc << 1) | ((idx >> (n - 1 - q)) & 1))
}

/// Inverse of [`gather_bits`]: spreads `sub` over the positions of `qubits`.
pub(crate) fn scatter_bits(sub: usize, qubits: &[usize], n: usize) -> usize {
    let k = qubits.len();
    qubits.iter().enumerate().fold(0, |acc, (i, &q)| {
        acc | (((sub >> (k - 1 - i)) & 1) << (n - 1 - q))
    })
}
