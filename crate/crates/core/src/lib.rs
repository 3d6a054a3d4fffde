//! Potential-free quantum mechanics on square-integrable bases.
//!
//! A physical system is specified by orthogonal polynomials in the energy
//! variable rather than by a potential function. The crate evaluates those
//! polynomials (Meixner–Pollaczek and continuous dual Hahn families and
//! their discrete partners), reads scattering phase shifts, bound states and
//! resonances off their asymptotics, synthesises wavefunctions over Hermite,
//! Laguerre and Jacobi bases, and connects back to conventional potentials
//! through classical-polynomial systems and tridiagonal Hamiltonians.

pub mod basis;
pub mod classical;
pub mod energy_poly;
pub mod error;
pub mod hamiltonian;
pub mod numerics;
pub mod scattering;
pub mod special;
pub mod spectra;

pub use error::{Error, Result};
