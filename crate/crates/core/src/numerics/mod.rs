//! Generic numerical kernels: adaptive quadrature, symmetric eigensolvers,
//! bracketed root finding and high-order finite differences.

mod diff;
mod eigen;
mod grid;
mod quadrature;
mod roots;

pub use diff::{first_derivative, second_derivative};
pub use eigen::{
    dense_symmetric_eigenvalues, sturm_count, tridiagonal_eigenvalues, SquareMatrix,
    TridiagonalMatrix,
};
pub use grid::Grid;
pub use quadrature::{integrate, Estimate, Integrator, Interval};
pub use roots::{complex_secant, find_root};
