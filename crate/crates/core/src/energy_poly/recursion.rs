use super::params::EnergyPolynomial;
use crate::error::{Error, Result};
use crate::special::ComplexValue;

/// Real part of a value that must be real, with relative residue check.
pub(crate) fn expect_real(z: ComplexValue, scale: f64) -> Result<f64> {
    if z.im.abs() > 1e-10 * z.norm().max(scale) {
        return Err(Error::NotReal { re: z.re, im: z.im });
    }
    Ok(z.re)
}

/// Coefficients (a_n, b_n) of w·P_n = a_n P_n + b_{n-1} P_{n-1} + b_n P_{n+1}.
pub fn recurrence_coefficients(poly: &EnergyPolynomial, n: usize) -> Result<(f64, f64)> {
    let nf = n as f64;
    match poly {
        EnergyPolynomial::MeixnerPollaczek(p) => {
            let (mu, theta) = (p.mu(), p.theta());
            let a = -(nf + mu) * theta.cos();
            let b = 0.5 * ((nf + 1.0) * (nf + 2.0 * mu)).sqrt();
            Ok((a, b))
        }
        EnergyPolynomial::ContinuousDualHahn(p) => {
            let (mu, a, b) = (p.mu(), p.a(), p.b());
            let diag = (mu + a + nf) * (mu + b + nf) + (a + b + nf - 1.0) * nf - mu * mu;
            let off2 = (a + b + nf) * (mu + a + nf) * (mu + b + nf) * (nf + 1.0);
            let diag = expect_real(diag, 1.0)?;
            let off2 = expect_real(off2, 1.0)?;
            if !(off2 > 0.0) {
                return Err(Error::InvalidParams(format!(
                    "recursion coefficient b_{n}^2 = {off2} is not positive for these parameters"
                )));
            }
            Ok((diag, -off2.sqrt()))
        }
    }
}

fn forward(poly: &EnergyPolynomial, w: f64, n_max: usize, shift: usize) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(1.0);
    if n_max == 0 {
        return Ok(out);
    }
    let (a0, b0) = recurrence_coefficients(poly, shift)?;
    out.push((w - a0) / b0);
    let mut b_prev = b0;
    for n in 1..n_max {
        let (an, bn) = recurrence_coefficients(poly, n + shift)?;
        let next = ((w - an) * out[n] - b_prev * out[n - 1]) / bn;
        out.push(next);
        b_prev = bn;
    }
    Ok(out)
}

/// Orthonormal polynomial values P_0..P_{n_max} at the physical argument y.
pub fn eval_recursion(poly: &EnergyPolynomial, y: f64, n_max: usize) -> Result<Vec<f64>> {
    forward(poly, poly.variable(y), n_max, 0)
}

/// Same as [`eval_recursion`] but at a given value of the recursion variable
/// (y sinθ for Meixner–Pollaczek, y² for continuous dual Hahn). Negative y²
/// reaches the discrete points of the spectrum.
pub fn eval_at_variable(poly: &EnergyPolynomial, w: f64, n_max: usize) -> Result<Vec<f64>> {
    forward(poly, w, n_max, 0)
}

/// Associated polynomials: the same recursion with every coefficient index
/// shifted by one, seeded with 1.
pub fn second_kind(poly: &EnergyPolynomial, y: f64, n_max: usize) -> Result<Vec<f64>> {
    forward(poly, poly.variable(y), n_max, 1)
}

/// Largest residual of the (optionally shifted) recursion over a sequence.
pub fn recurrence_residual(
    poly: &EnergyPolynomial,
    w: f64,
    values: &[f64],
    shift: usize,
) -> Result<f64> {
    let mut worst = 0.0f64;
    for n in 0..values.len().saturating_sub(1) {
        let (an, bn) = recurrence_coefficients(poly, n + shift)?;
        let lower = if n == 0 {
            0.0
        } else {
            recurrence_coefficients(poly, n - 1 + shift)?.1 * values[n - 1]
        };
        let r = w * values[n] - an * values[n] - lower - bn * values[n + 1];
        let scale = values[n].abs().max(values[n + 1].abs()).max(1.0);
        worst = worst.max(r.abs() / scale);
    }
    Ok(worst)
}
