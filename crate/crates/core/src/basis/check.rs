use super::spec::{BasisFamily, BasisSpec, CoordinateMap};
use crate::error::Result;
use crate::numerics::Integrator;

/// Quadrature settings adapted to the spread of the first `n_max + 1` elements.
pub fn integrator_for(spec: &BasisSpec, n_max: usize, tol: f64) -> Integrator {
    basis_integrator(spec, n_max, tol)
}

pub(crate) fn basis_integrator(spec: &BasisSpec, n_max: usize, tol: f64) -> Integrator {
    let width = match (spec.family, spec.map) {
        (BasisFamily::Hermite { .. }, _) => (2.0 * n_max as f64 + 1.0).sqrt(),
        (_, CoordinateMap::Linear) => 0.5 * (n_max as f64 + 2.0),
        (_, CoordinateMap::Power { tau }) => (n_max as f64 + 2.0).powf(1.0 / tau),
        _ => 1.0 + (n_max as f64 + 1.0).ln(),
    };
    Integrator {
        tol,
        scale: width / spec.lambda,
        initial_pieces: 16 + 2 * n_max,
        ..Integrator::default()
    }
}

/// λ∫φ̄_n φ_m dx.
pub fn orthonormality_check(spec: &BasisSpec, n: usize, m: usize) -> Result<f64> {
    let top = n.max(m);
    let integrand = |x: f64| -> f64 {
        match (spec.conjugate_values(top, x), spec.values(top, x)) {
            (Ok(c), Ok(v)) => c[n] * v[m],
            _ => f64::NAN,
        }
    };
    let est = basis_integrator(spec, top, 1e-11).integrate(integrand, spec.domain())?;
    Ok(spec.lambda * est.value)
}

/// Expansion of f in the first n_terms elements.
#[derive(Debug, Clone, PartialEq)]
pub struct Expansion {
    pub coefficients: Vec<f64>,
    /// ‖f − Σ c_n φ_n‖ in L²(dx).
    pub error: f64,
}

/// c_n = λ∫φ̄_n f dx and the L² reconstruction error.
pub fn expand_function<F: Fn(f64) -> f64>(
    spec: &BasisSpec,
    f: F,
    n_terms: usize,
) -> Result<Expansion> {
    if n_terms == 0 {
        let err = basis_integrator(spec, 0, 1e-10).integrate(|x| f(x) * f(x), spec.domain())?;
        return Ok(Expansion {
            coefficients: Vec::new(),
            error: err.value.max(0.0).sqrt(),
        });
    }
    let top = n_terms - 1;
    let integrator = basis_integrator(spec, top, 1e-11);
    let mut coefficients = Vec::with_capacity(n_terms);
    for n in 0..n_terms {
        let c = integrator.integrate(
            |x| match spec.conjugate_values(n, x) {
                Ok(c) => c[n] * f(x),
                Err(_) => f64::NAN,
            },
            spec.domain(),
        )?;
        coefficients.push(spec.lambda * c.value);
    }
    let residual = integrator.integrate(
        |x| match spec.values(top, x) {
            Ok(v) => {
                let approx: f64 = v.iter().zip(&coefficients).map(|(p, c)| p * c).sum();
                let d = f(x) - approx;
                d * d
            }
            Err(_) => f64::NAN,
        },
        spec.domain(),
    )?;
    Ok(Expansion {
        coefficients,
        error: residual.value.max(0.0).sqrt(),
    })
}
