use super::polys::laguerre;
use crate::error::{Error, Result};
use crate::numerics::{Integrator, Interval, SquareMatrix};
use crate::special::ln_gamma_real;

/// The symmetric tridiagonal Gram matrix Λ of the modified Laguerre basis.
#[derive(Debug, Clone, PartialEq)]
pub struct TriThogonalMatrix {
    pub diag: Vec<f64>,
    /// Λ_{n,n+1}.
    pub offdiag: Vec<f64>,
}

impl TriThogonalMatrix {
    pub fn size(&self) -> usize {
        self.diag.len()
    }

    pub fn entry(&self, n: usize, m: usize) -> f64 {
        if n == m {
            self.diag[n]
        } else if n + 1 == m {
            self.offdiag[n]
        } else if m + 1 == n {
            self.offdiag[m]
        } else {
            0.0
        }
    }

    pub fn to_dense(&self) -> SquareMatrix {
        SquareMatrix::from_fn(self.size(), |i, j| self.entry(i, j))
    }
}

/// Λ_nm = (2n+ν+1)δ_nm − √(n(n+ν))δ_{n,m+1} − √((n+1)(n+ν+1))δ_{n,m−1}, size N×N.
pub fn lambda_matrix(nu: f64, size: usize) -> Result<TriThogonalMatrix> {
    if !(nu > -1.0) {
        return Err(Error::InvalidParams(format!("nu must exceed -1, got {nu}")));
    }
    if size == 0 {
        return Err(Error::InvalidParams("matrix size must be at least 1".into()));
    }
    let diag = (0..size).map(|n| 2.0 * n as f64 + nu + 1.0).collect();
    let offdiag = (0..size - 1)
        .map(|n| -((n as f64 + 1.0) * (n as f64 + nu + 1.0)).sqrt())
        .collect();
    Ok(TriThogonalMatrix { diag, offdiag })
}

/// ψ_n(s) = √(n!/Γ(n+ν+1)) s^{(ν+1)/2} e^{−s/2} L_n^ν(s), s = μx.
pub fn modified_laguerre(nu: f64, n: usize, s: f64) -> f64 {
    let nf = n as f64;
    let ln_norm = 0.5 * (ln_gamma_real(nf + 1.0).unwrap_or(f64::NAN) - ln_gamma_real(nf + nu + 1.0).unwrap_or(f64::NAN));
    ln_norm.exp() * s.powf(0.5 * (nu + 1.0)) * (-0.5 * s).exp() * laguerre(n, nu, s)
}

/// ∫ψ_n ψ_m ds by quadrature, size N×N.
pub fn tri_thogonal_gram(nu: f64, size: usize) -> Result<SquareMatrix> {
    if !(nu > -1.0) || size == 0 {
        return Err(Error::InvalidParams(format!("need nu > -1 and size >= 1, got ({nu}, {size})")));
    }
    let integrator = Integrator {
        tol: 1e-12,
        scale: size as f64 + 2.0,
        initial_pieces: 16 + 2 * size,
        ..Integrator::default()
    };
    let mut rows = vec![vec![0.0; size]; size];
    for n in 0..size {
        for m in n..size {
            let v = integrator
                .integrate(|s| modified_laguerre(nu, n, s) * modified_laguerre(nu, m, s), Interval::half_line(0.0))?
                .value;
            rows[n][m] = v;
            rows[m][n] = v;
        }
    }
    SquareMatrix::from_rows(&rows)
}
