//! Systems with discrete spectra built from classical orthogonal polynomials
//! in configuration space.

mod polys;
mod systems;
mod trithogonal;

pub use polys::{classical_poly_eval, ClassicalFamily};
pub use systems::{
    build_system, schrodinger_residual, ClassicalId, ClassicalParams, ClassicalSystem, JacobiSpectrum,
};
pub use trithogonal::{lambda_matrix, modified_laguerre, tri_thogonal_gram, TriThogonalMatrix};
