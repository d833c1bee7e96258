//! Small dense helpers on top of nalgebra.

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;

pub type C64 = Complex64;
pub type CMatrix = DMatrix<C64>;

/// Eigenvalues below this magnitude (but not below it in the negative
/// direction by more than [`PSD_TOLERANCE`]) are treated as rounding noise.
pub const PSD_TOLERANCE: f64 = 1e-9;

/// Real eigenvalues of a Hermitian matrix, sorted descending.
pub fn hermitian_eigenvalues(m: &CMatrix) -> Vec<f64> {
    let mut ev: Vec<f64> = SymmetricEigen::new(m.clone()).eigenvalues.iter().copied().collect();
    ev.sort_by(|a, b| b.total_cmp(a));
    ev
}

/// Eigen-decomposition of a Hermitian matrix: eigenvalues (unsorted) and
/// the matching unit eigenvectors as columns.
pub fn hermitian_eigen(m: &CMatrix) -> (Vec<f64>, CMatrix) {
    let eig = SymmetricEigen::new(m.clone());
    (eig.eigenvalues.iter().copied().collect(), eig.eigenvectors)
}

/// Singular values sorted descending.
pub fn singular_values(m: &CMatrix) -> Vec<f64> {
    if m.nrows() == 0 || m.ncols() == 0 {
        return Vec::new();
    }
    let mut sv: Vec<f64> = m.singular_values().iter().copied().collect();
    sv.sort_by(|a, b| b.total_cmp(a));
    sv
}

/// Largest entrywise deviation from Hermiticity.
pub fn hermiticity_defect(m: &CMatrix) -> f64 {
    let n = m.nrows();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in i..n {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

pub fn trace(m: &CMatrix) -> C64 {
    (0..m.nrows()).map(|i| m[(i, i)]).sum()
}

/// Clips values in `[-PSD_TOLERANCE, 0)` to zero.
pub fn clip_negative(x: f64) -> f64 {
    if (-PSD_TOLERANCE..0.0).contains(&x) {
        0.0
    } else {
        x
    }
}

/// `σ_y ⊗ σ_y`, which is real.
pub fn sigma_yy() -> CMatrix {
    let mut y = CMatrix::zeros(4, 4);
    y[(0, 3)] = C64::new(-1.0, 0.0);
    y[(1, 2)] = C64::new(1.0, 0.0);
    y[(2, 1)] = C64::new(1.0, 0.0);
    y[(3, 0)] = C64::new(-1.0, 0.0);
    y
}
