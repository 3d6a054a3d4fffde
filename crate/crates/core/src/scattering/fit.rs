use std::f64::consts::PI;

use super::closed::reduce_mod_pi;
use crate::energy_poly::{eval_recursion, weight, EnergyPolynomial};
use crate::error::{Error, Result};
use crate::spectra::SystemCatalogEntry;

/// n-dependent part of the asymptotic cosine argument.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum AsymptoticModel {
    /// nθ − c ln(2n sinθ).
    LinearN { theta: f64, log_correction_coeff: f64 },
    /// y ln n.
    LogN { y: f64 },
}

impl AsymptoticModel {
    pub fn for_polynomial(poly: &EnergyPolynomial, y: f64) -> Self {
        match poly {
            EnergyPolynomial::MeixnerPollaczek(p) => AsymptoticModel::LinearN {
                theta: p.theta(),
                log_correction_coeff: y,
            },
            EnergyPolynomial::ContinuousDualHahn(_) => AsymptoticModel::LogN { y },
        }
    }

    pub fn phase(&self, n: f64) -> f64 {
        match *self {
            AsymptoticModel::LinearN {
                theta,
                log_correction_coeff,
            } => n * theta - log_correction_coeff * (2.0 * n * theta.sin()).ln(),
            AsymptoticModel::LogN { y } => y * n.ln(),
        }
    }

    fn validate(&self) -> Result<()> {
        if let AsymptoticModel::LinearN { theta, .. } = *self {
            if !(theta > 0.0 && theta < PI) {
                return Err(Error::InvalidParams(format!("theta = {theta} must lie in (0, pi)")));
            }
        }
        Ok(())
    }
}

/// Index window [start, start + length).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TailWindow {
    pub start: usize,
    pub length: usize,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseFit {
    pub amplitude: f64,
    /// Modulo π, in (−π/2, π/2].
    pub phase: f64,
    pub rms_residual: f64,
}

/// Largest admissible condition number of the normalized 2×2 fit system.
const MAX_CONDITION: f64 = 1e8;

/// Least-squares fit of values[i] ≈ A cos(Θ_n + φ)/√n, n = start + i.
pub fn fit_tail_phase(values: &[f64], model: AsymptoticModel, window: TailWindow) -> Result<PhaseFit> {
    model.validate()?;
    if window.start < 256 || window.length < 64 {
        return Err(Error::InvalidParams(format!(
            "tail window needs start >= 256 and length >= 64, got {window:?}"
        )));
    }
    if values.len() < window.length {
        return Err(Error::InvalidParams(format!(
            "{} values supplied for a window of length {}",
            values.len(),
            window.length
        )));
    }
    let basis: Vec<(f64, f64)> = (0..window.length)
        .map(|i| {
            let n = (window.start + i) as f64;
            let th = model.phase(n);
            let s = n.sqrt();
            (th.cos() / s, th.sin() / s)
        })
        .collect();
    let (mut cc, mut cs, mut ss, mut cv, mut sv) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for (&(c, s), &v) in basis.iter().zip(values) {
        cc += c * c;
        cs += c * s;
        ss += s * s;
        cv += c * v;
        sv += s * v;
    }
    let det = cc * ss - cs * cs;
    let tr = cc + ss;
    let disc = ((cc - ss).powi(2) + 4.0 * cs * cs).sqrt();
    let cond = (tr + disc) / (tr - disc).max(f64::MIN_POSITIVE);
    if !(det > 0.0) || cond > MAX_CONDITION {
        return Err(Error::IllConditioned(cond));
    }
    // v ≈ p cosΘ + q sinΘ with p = A cosφ, q = −A sinφ.
    let p = (ss * cv - cs * sv) / det;
    let q = (cc * sv - cs * cv) / det;
    let amplitude = p.hypot(q);
    let phase = reduce_mod_pi((-q).atan2(p));
    let ssr: f64 = basis
        .iter()
        .zip(values)
        .map(|(&(c, s), &v)| (v - p * c - q * s).powi(2))
        .sum();
    Ok(PhaseFit {
        amplitude,
        phase,
        rms_residual: (ssr / window.length as f64).sqrt(),
    })
}

/// √ρ(y)·P_n(y) over the window for a catalog system at momentum k.
pub fn weighted_tail(system: &SystemCatalogEntry, k: f64, window: TailWindow) -> Result<(Vec<f64>, AsymptoticModel)> {
    if !(k > 0.0) {
        return Err(Error::InvalidEnergy(format!("momentum must be positive, got {k}")));
    }
    let energy = 0.5 * k * k;
    let poly = system.polynomial_at(energy)?;
    let y = system.mapping.y(energy)?;
    let values = weighted_polynomials(&poly, y, window)?;
    Ok((values, AsymptoticModel::for_polynomial(&poly, y)))
}

/// √ρ(y)·P_n(y) for n in the window.
pub fn weighted_polynomials(poly: &EnergyPolynomial, y: f64, window: TailWindow) -> Result<Vec<f64>> {
    let root = weight(poly, y)?.sqrt();
    let all = eval_recursion(poly, y, window.start + window.length - 1)?;
    Ok(all[window.start..].iter().map(|p| root * p).collect())
}

/// Tail fit for a catalog system at momentum k.
pub fn fit_system_phase(system: &SystemCatalogEntry, k: f64, window: TailWindow) -> Result<PhaseFit> {
    let (values, model) = weighted_tail(system, k, window)?;
    fit_tail_phase(&values, model, window)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn synthetic_linear_phase() {
        let window = TailWindow { start: 300, length: 100 };
        let model = AsymptoticModel::LinearN {
            theta: 0.7,
            log_correction_coeff: 0.0,
        };
        let values: Vec<f64> = (300..400)
            .map(|n| {
                let n = n as f64;
                2.0 * (0.7 * n - 0.0 * (2.0 * n * 0.7f64.sin()).ln() + 0.3).cos() / n.sqrt()
            })
            .collect();
        let fit = fit_tail_phase(&values, model, window).unwrap();
        assert!((fit.phase - 0.3).abs() < 1e-6);
        assert!((fit.amplitude - 2.0).abs() < 1e-10);
        assert!(fit.rms_residual < 1e-12);
    }

    #[test]
    fn constant_phase_law_is_ill_conditioned() {
        let window = TailWindow { start: 300, length: 100 };
        let values = vec![1.0; 100];
        let r = fit_tail_phase(&values, AsymptoticModel::LogN { y: 1e-12 }, window);
        assert!(matches!(r, Err(Error::IllConditioned(_))));
    }

    #[test]
    fn window_preconditions() {
        let values = vec![0.0; 100];
        let model = AsymptoticModel::LogN { y: 1.0 };
        assert!(fit_tail_phase(&values, model, TailWindow { start: 100, length: 100 }).is_err());
        assert!(fit_tail_phase(&values, model, TailWindow { start: 300, length: 10 }).is_err());
    }
}
