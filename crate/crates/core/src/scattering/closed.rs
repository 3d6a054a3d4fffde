use std::f64::consts::PI;

use crate::energy_poly::{amplitude_factor, phase_constant, EnergyPolynomial};
use crate::error::{Error, Result};
use crate::spectra::SystemCatalogEntry;

fn at_momentum(system: &SystemCatalogEntry, k: f64) -> Result<(EnergyPolynomial, f64)> {
    if !(k > 0.0) || !k.is_finite() {
        return Err(Error::InvalidEnergy(format!("momentum must be positive and finite, got {k}")));
    }
    let energy = 0.5 * k * k;
    Ok((system.polynomial_at(energy)?, system.mapping.y(energy)?))
}

/// Scattering phase shift δ(k) on the analytic branch of log Γ.
pub fn phase_shift_closed(system: &SystemCatalogEntry, k: f64) -> Result<f64> {
    let (poly, y) = at_momentum(system, k)?;
    phase_constant(&poly, y)
}

/// Energy-dependent amplitude factor A(k) of the large-n asymptotics.
pub fn amplitude_closed(system: &SystemCatalogEntry, k: f64) -> Result<f64> {
    let (poly, y) = at_momentum(system, k)?;
    amplitude_factor(&poly, y)
}

/// Representative of δ modulo π in (−π/2, π/2].
pub fn reduce_mod_pi(delta: f64) -> f64 {
    let r = delta - PI * (delta / PI).round();
    if r <= -PI / 2.0 {
        r + PI
    } else {
        r
    }
}

/// Distance between two phases as classes modulo π.
pub fn phase_distance_mod_pi(a: f64, b: f64) -> f64 {
    reduce_mod_pi(a - b).abs()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhaseSample {
    pub k: f64,
    /// Continuous along the sweep.
    pub delta: f64,
    pub reduced: f64,
}

/// Phase shifts along increasing momenta, unwrapped so that consecutive
/// samples differ by less than π/2.
pub fn phase_shift_sweep(system: &SystemCatalogEntry, ks: &[f64]) -> Result<Vec<PhaseSample>> {
    let mut out: Vec<PhaseSample> = Vec::with_capacity(ks.len());
    for &k in ks {
        let raw = phase_shift_closed(system, k)?;
        let delta = match out.last() {
            Some(prev) => raw - PI * ((raw - prev.delta) / PI).round(),
            None => raw,
        };
        out.push(PhaseSample {
            k,
            delta,
            reduced: reduce_mod_pi(delta),
        });
    }
    Ok(out)
}
