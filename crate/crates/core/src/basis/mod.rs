//! Square-integrable configuration-space bases and wavefunction synthesis.

mod check;
mod spec;
mod wavefunction;

pub use check::{expand_function, integrator_for, orthonormality_check, Expansion};
pub use spec::{basis_conjugate_value, basis_value, BasisFamily, BasisSpec, CoordinateMap};
pub use wavefunction::{
    bound_coefficients, bound_wavefunction, resonance_coefficients, resonance_wavefunction,
    scattering_coefficients, scattering_convergence, scattering_wavefunction, state_overlap,
    synthesize, BoundStateOptions, WavefunctionGrid,
};
