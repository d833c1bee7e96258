//! Dense state and operator algebra for small qubit registers.

mod density;
pub mod linalg;
mod random;
mod state;
mod subsystem;

pub use density::{partial_transpose_matrix, DensityMatrix};
pub use linalg::{CMatrix, C64};
pub use random::{haar_random_pure, haar_random_pure_with, random_unitary_2x2, sample_seed};
pub use state::{schmidt_rank, PureState, MAX_QUBITS, NORM_TOLERANCE};
pub use subsystem::SubsystemSet;

/// `1 - Tr ρ²`.
pub fn linear_entropy(rho: &DensityMatrix) -> f64 {
    rho.linear_entropy()
}

pub fn to_density(psi: &PureState) -> DensityMatrix {
    psi.to_density()
}

pub fn partial_trace(rho: &DensityMatrix, keep: &SubsystemSet) -> crate::Result<DensityMatrix> {
    rho.partial_trace(keep)
}

pub fn partial_transpose(rho: &DensityMatrix, part: &SubsystemSet) -> crate::Result<CMatrix> {
    rho.partial_transpose(part)
}

pub fn spin_flip(rho: &DensityMatrix) -> crate::Result<CMatrix> {
    rho.spin_flip()
}
