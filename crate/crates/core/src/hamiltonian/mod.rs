//! Tridiagonal Hamiltonians, matrix elements in L² bases, local potential
//! reconstruction and perturbed spectra.

mod matrices;
mod operator;

pub use matrices::{kinetic_matrix, potential_matrix, reconstruct_local_potential, PotentialMatrix};
pub use operator::{
    perturbed_spectrum, perturbed_spectrum_dense, tridiagonal_from_recursion, Perturbation,
    PerturbationSpec, TridiagonalOperator,
};
