use super::linalg::{
    clip_negative, hermitian_eigenvalues, hermiticity_defect, sigma_yy, trace, CMatrix,
    PSD_TOLERANCE,
};
use super::state::{scatter_bits, MAX_QUBITS};
use super::subsystem::SubsystemSet;
use crate::error::{Error, Result};

pub const HERMITIAN_TOLERANCE: f64 = 1e-10;
pub const TRACE_TOLERANCE: f64 = 1e-10;

/// Hermitian, positive semidefinite, unit-trace operator on `num_qubits` qubits.
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    num_qubits: usize,
    matrix: CMatrix,
}

impl DensityMatrix {
    /// Validates and wraps `matrix`.
    pub fn new(matrix: CMatrix) -> Result<Self> {
        let dim = matrix.nrows();
        if matrix.ncols() != dim || dim < 2 || !dim.is_power_of_two() {
            return Err(Error::InvalidInput(format!(
                "density matrix must be square with dimension 2^n, got {}x{}",
                matrix.nrows(),
                matrix.ncols()
            )));
        }
        let num_qubits = dim.trailing_zeros() as usize;
        if num_qubits > MAX_QUBITS {
            return Err(Error::OutOfRange {
                what: "qubit count",
                detail: format!("{num_qubits} > {MAX_QUBITS}"),
            });
        }
        let defect = hermiticity_defect(&matrix);
        if defect > HERMITIAN_TOLERANCE {
            return Err(Error::InvalidInput(format!(
                "matrix is not Hermitian (defect {defect:e})"
            )));
        }
        let tr = trace(&matrix);
        if (tr.re - 1.0).abs() > TRACE_TOLERANCE || tr.im.abs() > TRACE_TOLERANCE {
            return Err(Error::InvalidInput(format!("trace {tr} differs from 1")));
        }
        let min_ev = hermitian_eigenvalues(&matrix).last().copied().unwrap_or(0.0);
        if min_ev < -PSD_TOLERANCE {
            return Err(Error::InvalidInput(format!(
                "matrix is not positive semidefinite (eigenvalue {min_ev:e})"
            )));
        }
        Ok(Self { num_qubits, matrix })
    }

    /// Trusted constructor for matrices built by this crate.
    pub(crate) fn from_parts(num_qubits: usize, matrix: CMatrix) -> Self {
        debug_assert_eq!(matrix.nrows(), 1 << num_qubits);
        Self { num_qubits, matrix }
    }

    /// `I / 2^n`.
    pub fn maximally_mixed(num_qubits: usize) -> Self {
        let d = 1 << num_qubits;
        Self::from_parts(num_qubits, CMatrix::identity(d, d).unscale(d as f64))
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn into_matrix(self) -> CMatrix {
        self.matrix
    }

    /// Eigenvalues, descending, with rounding negatives clipped to zero.
    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(&self.matrix)
            .into_iter()
            .map(clip_negative)
            .collect()
    }

    /// Traces out every qubit not in `keep`.
    pub fn partial_trace(&self, keep: &SubsystemSet) -> Result<DensityMatrix> {
        keep.check_proper(self.num_qubits)?;
        let n = self.num_qubits;
        let traced = keep.complement(n);
        let (dk, dt) = (1usize << keep.len(), 1usize << traced.len());
        let keep_idx: Vec<usize> = (0..dk).map(|i| scatter_bits(i, keep.indices(), n)).collect();
        let traced_idx: Vec<usize> = (0..dt)
            .map(|t| scatter_bits(t, traced.indices(), n))
            .collect();
        let mut out = CMatrix::zeros(dk, dk);
        for i in 0..dk {
            for j in 0..dk {
                out[(i, j)] = traced_idx
                    .iter()
                    .map(|&t| self.matrix[(keep_idx[i] | t, keep_idx[j] | t)])
                    .sum();
            }
        }
        Ok(DensityMatrix::from_parts(keep.len(), out))
    }

    /// Partial transpose on `part`. The result is Hermitian but may have
    /// negative eigenvalues, so it is returned as a plain matrix.
    pub fn partial_transpose(&self, part: &SubsystemSet) -> Result<CMatrix> {
        partial_transpose_matrix(&self.matrix, self.num_qubits, part)
    }

    /// `T(ρ) = 1 - Tr ρ²`.
    pub fn linear_entropy(&self) -> f64 {
        // Tr ρ² = Σ|ρ_ij|² for Hermitian ρ.
        1.0 - self.matrix.iter().map(|z| z.norm_sqr()).sum::<f64>()
    }

    /// `(σ_y ⊗ σ_y) ρ* (σ_y ⊗ σ_y)` for a two-qubit state.
    pub fn spin_flip(&self) -> Result<CMatrix> {
        if self.num_qubits != 2 {
            return Err(Error::InvalidInput(format!(
                "spin flip needs a two-qubit state, got {} qubits",
                self.num_qubits
            )));
        }
        let y = sigma_yy();
        Ok(&y * self.matrix.conjugate() * &y)
    }
}

/// Partial transpose of an arbitrary `2^n × 2^n` matrix on `part`.
pub fn partial_transpose_matrix(m: &CMatrix, n: usize, part: &SubsystemSet) -> Result<CMatrix> {
    part.check_range(n)?;
    let dim = 1usize << n;
    if m.nrows() != dim || m.ncols() != dim {
        return Err(Error::InvalidInput(format!(
            "expected a {dim}x{dim} matrix, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    let pm = part
        .indices()
        .iter()
        .fold(0usize, |acc, &q| acc | (1 << (n - 1 - q)));
    Ok(CMatrix::from_fn(dim, dim, |r, c| {
        let r2 = (r & !pm) | (c & pm);
        let c2 = (c & !pm) | (r & pm);
        m[(r2, c2)]
    }))
}
