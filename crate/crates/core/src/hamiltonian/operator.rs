use crate::energy_poly::{recurrence_coefficients, EnergyPolynomial};
use crate::error::{Error, Result};
use crate::numerics::{dense_symmetric_eigenvalues, tridiagonal_eigenvalues, SquareMatrix, TridiagonalMatrix};

/// Hamiltonian action H φ_n = a_n φ_n + b_{n−1} φ_{n−1} + b_n φ_{n+1},
/// expressed in the recursion variable w of the energy polynomials.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TridiagonalOperator {
    poly: EnergyPolynomial,
}

pub fn tridiagonal_from_recursion(poly: EnergyPolynomial) -> TridiagonalOperator {
    TridiagonalOperator { poly }
}

impl TridiagonalOperator {
    pub fn polynomial(&self) -> EnergyPolynomial {
        self.poly
    }

    pub fn a(&self, n: usize) -> Result<f64> {
        Ok(recurrence_coefficients(&self.poly, n)?.0)
    }

    pub fn b(&self, n: usize) -> Result<f64> {
        Ok(recurrence_coefficients(&self.poly, n)?.1)
    }

    /// "w = y sinθ" or "w = y²".
    pub fn variable(&self) -> &'static str {
        match self.poly {
            EnergyPolynomial::MeixnerPollaczek(_) => "w = y sin(theta)",
            EnergyPolynomial::ContinuousDualHahn(_) => "w = y^2",
        }
    }

    /// Leading size×size block.
    pub fn truncate(&self, size: usize) -> Result<TridiagonalMatrix> {
        if size == 0 {
            return Err(Error::InvalidParams("truncation size must be at least 1".into()));
        }
        let mut diag = Vec::with_capacity(size);
        let mut off = Vec::with_capacity(size - 1);
        for n in 0..size {
            let (a, b) = recurrence_coefficients(&self.poly, n)?;
            diag.push(a);
            if n + 1 < size {
                off.push(b);
            }
        }
        TridiagonalMatrix::new(diag, off)
    }
}

/// Perturbation η·W added to the truncated operator.
#[derive(Debug, Clone, PartialEq)]
pub enum Perturbation {
    /// Diagonal shifts α_n and off-diagonal shifts β_n (W_{n,n+1}), zero
    /// beyond their lengths.
    ShortRange { alpha: Vec<f64>, beta: Vec<f64> },
    /// Symmetric block placed in the leading corner.
    Block(SquareMatrix),
}

#[derive(Debug, Clone, PartialEq)]
pub struct PerturbationSpec {
    pub eta: f64,
    pub kind: Perturbation,
}

impl PerturbationSpec {
    pub fn range(&self) -> usize {
        match &self.kind {
            Perturbation::ShortRange { alpha, beta } => alpha.len().max(beta.len() + 1),
            Perturbation::Block(m) => m.size(),
        }
    }

    /// W embedded in a size×size matrix.
    pub fn dense(&self, size: usize) -> Result<SquareMatrix> {
        if size < self.range() {
            return Err(Error::InvalidParams(format!(
                "truncation {size} is smaller than the perturbation range {}",
                self.range()
            )));
        }
        let mut w = SquareMatrix::zeros(size);
        match &self.kind {
            Perturbation::ShortRange { alpha, beta } => {
                for (i, &a) in alpha.iter().enumerate() {
                    w[(i, i)] = a;
                }
                for (i, &b) in beta.iter().enumerate() {
                    w[(i, i + 1)] = b;
                    w[(i + 1, i)] = b;
                }
            }
            Perturbation::Block(m) => {
                if m.max_asymmetry() > 1e-12 * m.max_abs().max(1.0) {
                    return Err(Error::Asymmetric(m.max_asymmetry()));
                }
                for i in 0..m.size() {
                    for j in 0..m.size() {
                        w[(i, j)] = m[(i, j)];
                    }
                }
            }
        }
        Ok(w)
    }
}

/// Eigenvalues (ascending) of the size×size truncation of H0 + η·W.
///
/// Short-range perturbations keep the matrix tridiagonal and use Sturm
/// bisection; general blocks use the dense solver.
pub fn perturbed_spectrum(h0: &TridiagonalOperator, pert: &PerturbationSpec, size: usize) -> Result<Vec<f64>> {
    if size < pert.range() {
        return Err(Error::InvalidParams(format!(
            "truncation {size} is smaller than the perturbation range {}",
            pert.range()
        )));
    }
    let base = h0.truncate(size)?;
    match &pert.kind {
        Perturbation::ShortRange { alpha, beta } => {
            let mut diag = base.diag().to_vec();
            let mut off = base.offdiag().to_vec();
            for (d, a) in diag.iter_mut().zip(alpha) {
                *d += pert.eta * a;
            }
            for (o, b) in off.iter_mut().zip(beta) {
                *o += pert.eta * b;
            }
            Ok(tridiagonal_eigenvalues(&TridiagonalMatrix::new(diag, off)?))
        }
        Perturbation::Block(_) => perturbed_spectrum_dense(h0, pert, size),
    }
}

/// Dense-solver eigenvalues of the same truncated matrix.
pub fn perturbed_spectrum_dense(h0: &TridiagonalOperator, pert: &PerturbationSpec, size: usize) -> Result<Vec<f64>> {
    let full = h0.truncate(size)?.to_dense().add_scaled(&pert.dense(size)?, pert.eta)?;
    dense_symmetric_eigenvalues(&full)
}
