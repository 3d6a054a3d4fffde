use crate::basis::BasisSpec;
use crate::error::{Error, Result};
use crate::numerics::{second_derivative, Grid, Integrator, SquareMatrix};

/// Matrix elements ⟨φ̄_m|O|φ_n⟩ in a truncated basis.
pub type PotentialMatrix = SquareMatrix;

fn integrator(spec: &BasisSpec, size: usize, tol: f64) -> Integrator {
    let mut it = crate::basis::integrator_for(spec, size.saturating_sub(1), tol);
    it.max_subdivisions = it.max_subdivisions.max(4000);
    it
}

fn symmetrized(raw: &[Vec<f64>]) -> Result<SquareMatrix> {
    let n = raw.len();
    SquareMatrix::from_rows(
        &(0..n)
            .map(|i| (0..n).map(|j| 0.5 * (raw[i][j] + raw[j][i])).collect())
            .collect::<Vec<Vec<f64>>>(),
    )
}

/// V_mn = λ∫φ̄_m V φ_n dx for m, n < size, symmetrized.
pub fn potential_matrix<V: Fn(f64) -> f64>(v: V, spec: &BasisSpec, size: usize) -> Result<PotentialMatrix> {
    if size == 0 {
        return Err(Error::InvalidParams("matrix size must be at least 1".into()));
    }
    let top = size - 1;
    let it = integrator(spec, size, 1e-10);
    let mut raw = vec![vec![0.0; size]; size];
    for m in 0..size {
        for n in 0..size {
            let f = |x: f64| match (spec.conjugate_values(top, x), spec.values(top, x)) {
                (Ok(c), Ok(p)) => {
                    let prod = c[m] * p[n];
                    if prod == 0.0 {
                        0.0
                    } else {
                        prod * v(x)
                    }
                }
                _ => f64::NAN,
            };
            raw[m][n] = spec.lambda * it.integrate(f, spec.domain())?.value;
        }
    }
    symmetrized(&raw)
}

/// Finite-difference step relative to the basis length 1/λ.
const KINETIC_STEP: f64 = 2e-2;

/// T_mn = λ∫φ̄_m (−½ φ_n″) dx with φ″ from a 9-point stencil. Points whose
/// stencil would leave the domain are dropped from the integrand.
pub fn kinetic_matrix(spec: &BasisSpec, size: usize) -> Result<PotentialMatrix> {
    if size == 0 {
        return Err(Error::InvalidParams("matrix size must be at least 1".into()));
    }
    if let crate::basis::BasisFamily::Laguerre { nu, sigma } = spec.family {
        if nu - sigma < 1.0 {
            log::warn!("Laguerre power (nu - sigma)/2 < 1/2: kinetic integrand is singular at the origin");
        }
    }
    let top = size - 1;
    let h = KINETIC_STEP / spec.lambda;
    let dom = spec.domain();
    let it = integrator(spec, size, 1e-10);
    let mut raw = vec![vec![0.0; size]; size];
    for m in 0..size {
        for n in 0..size {
            let f = |x: f64| {
                if x - 4.0 * h < dom.lo || x + 4.0 * h > dom.hi {
                    return 0.0;
                }
                let c = match spec.conjugate_values(top, x) {
                    Ok(c) => c[m],
                    Err(_) => return f64::NAN,
                };
                if c == 0.0 {
                    return 0.0;
                }
                let phi = |t: f64| spec.values(top, t).map(|v| v[n]).unwrap_or(f64::NAN);
                -0.5 * c * second_derivative(phi, x, h)
            };
            raw[m][n] = spec.lambda * it.integrate(f, dom)?.value;
        }
    }
    symmetrized(&raw)
}

/// V(x) ≈ Σ V_nm φ_n(x) φ̄_m(x) / Σ φ_n(x) φ̄_n(x), using the leading size×size
/// block. `None` where the denominator is below 10⁻⁶ of its grid maximum.
pub fn reconstruct_local_potential(
    vmat: &PotentialMatrix,
    spec: &BasisSpec,
    grid: &Grid,
    size: usize,
) -> Result<Vec<Option<f64>>> {
    if size == 0 || size > vmat.size() {
        return Err(Error::InvalidParams(format!(
            "reconstruction size {size} must lie in 1..={}",
            vmat.size()
        )));
    }
    let top = size - 1;
    let mut parts = Vec::with_capacity(grid.len());
    for &x in grid.points() {
        let p = spec.values(top, x)?;
        let c = spec.conjugate_values(top, x)?;
        let den: f64 = p.iter().zip(&c).map(|(a, b)| a * b).sum();
        let mut num = 0.0;
        for n in 0..size {
            for m in 0..size {
                num += vmat[(n, m)] * p[n] * c[m];
            }
        }
        parts.push((num, den));
    }
    let peak = parts.iter().map(|&(_, d)| d.abs()).fold(0.0, f64::max);
    Ok(parts
        .into_iter()
        .map(|(num, den)| if den.abs() >= 1e-6 * peak && den != 0.0 { Some(num / den) } else { None })
        .collect())
}
