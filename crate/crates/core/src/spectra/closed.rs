use super::system::{SystemCatalogEntry, SystemKind};
use crate::energy_poly::ContinuousDualHahnParams;
use crate::error::{Error, Result};
use crate::special::{c64, ComplexValue};

/// Relative distance below which two levels are merged.
const MERGE_TOL: f64 = 1e-12;

/// Bound energies (ascending) and resonance energies (Im < 0).
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Spectrum {
    pub bound: Vec<f64>,
    pub resonances: Vec<ComplexValue>,
    /// Total number of bound states when finite.
    pub count_cap: Option<usize>,
}

impl Spectrum {
    pub fn is_empty(&self) -> bool {
        self.bound.is_empty() && self.resonances.is_empty()
    }
}

fn sort_merge(mut levels: Vec<f64>) -> Vec<f64> {
    levels.sort_by(f64::total_cmp);
    levels.dedup_by(|a, b| (*a - *b).abs() <= MERGE_TOL * a.abs().max(b.abs()).max(1e-300));
    levels
}

/// Number of levels n = 0..=floor(-c) on the ladder of a negative parameter.
fn ladder_len(c: f64) -> usize {
    if c < 0.0 {
        (-c).floor() as usize + 1
    } else {
        0
    }
}

fn real_parameter(z: ComplexValue) -> Option<f64> {
    (z.im == 0.0).then_some(z.re)
}

/// Closed-form bound states, at most `n_request` of them.
pub fn bound_states(system: &SystemCatalogEntry, n_request: usize) -> Result<Spectrum> {
    let mp_ladder = |mu: f64, energy: &dyn Fn(f64) -> f64| -> Spectrum {
        Spectrum {
            bound: (0..n_request).map(|n| energy(n as f64 + mu)).collect(),
            resonances: Vec::new(),
            count_cap: None,
        }
    };
    match system.kind() {
        SystemKind::Coulomb { z, l } => {
            if z == 0.0 {
                return Ok(Spectrum {
                    count_cap: Some(0),
                    ..Spectrum::default()
                });
            }
            Ok(mp_ladder(l as f64 + 1.0, &|s| -0.5 * z * z / (s * s)))
        }
        SystemKind::LogMP { lambda, beta, v0, l } => {
            let mu = l as f64 + v0.sqrt() / lambda;
            let threshold = -0.5 * lambda * lambda;
            let mut s = mp_ladder(mu, &|s| {
                0.5 * lambda * lambda / ((-beta * s * s).exp() - 1.0)
            });
            // Levels pile up at the threshold and eventually round onto it.
            s.bound.retain(|&e| e < threshold);
            Ok(s)
        }
        SystemKind::PowerMP { lambda, mu, l } => {
            let p = 1.0 / (l as f64 + 0.5);
            Ok(mp_ladder(mu, &|s| -0.5 * lambda * lambda * s.powf(-p)))
        }
        SystemKind::Morse { alpha, .. } => {
            let b = system.dual_hahn().and_then(|p| real_parameter(p.b())).unwrap_or(0.0);
            Ok(finite_ladder(b, n_request, |s| -0.5 * alpha * alpha * s * s))
        }
        SystemKind::LogCDH { alpha, beta } => {
            let mu = system.dual_hahn().and_then(|p| p.mu_real()).unwrap_or(0.0);
            Ok(finite_ladder(mu, n_request, |s| {
                0.5 * alpha * alpha * ((-beta * s * s).exp() - 1.0)
            }))
        }
        SystemKind::PowerCDH { alpha, l } => {
            let mu = system.dual_hahn().and_then(|p| p.mu_real()).unwrap_or(0.0);
            let p = 1.0 / (l as f64 + 0.5);
            Ok(finite_ladder(mu, n_request, |s| -0.5 * alpha * alpha * s.abs().powf(p)))
        }
        SystemKind::LinearCDH { alpha } => {
            let params = system.dual_hahn().expect("linear-cdh has fixed parameters");
            let mut s = threefold_spectrum(&params, alpha, [usize::MAX; 3])?;
            s.bound.truncate(n_request);
            Ok(s)
        }
        SystemKind::Resonance { alpha, beta } => {
            let mut s = resonances(alpha, beta, n_request.saturating_sub(1))?;
            s.resonances.clear();
            s.bound.truncate(n_request);
            Ok(s)
        }
    }
}

/// Ladder E(n + c), n = 0..=floor(-c), for a negative governing parameter c.
fn finite_ladder(c: f64, n_request: usize, energy: impl Fn(f64) -> f64) -> Spectrum {
    let len = ladder_len(c);
    Spectrum {
        bound: sort_merge((0..len.min(n_request)).map(|n| energy(n as f64 + c)).collect()),
        resonances: Vec::new(),
        count_cap: Some(len),
    }
}

/// Union of the ladders -(α²/2)(m + c)² over the negative parameters
/// c ∈ {μ, a, b}, each limited by its cap and by floor(-c).
pub fn threefold_spectrum(
    params: &ContinuousDualHahnParams,
    alpha: f64,
    caps: [usize; 3],
) -> Result<Spectrum> {
    if !(alpha > 0.0) {
        return Err(Error::InvalidParams(format!("alpha must be positive, got {alpha}")));
    }
    let values = [params.mu(), params.a(), params.b()];
    let mut levels = Vec::new();
    for (z, cap) in values.iter().zip(caps) {
        let Some(c) = real_parameter(*z) else {
            continue;
        };
        let len = ladder_len(c).min(cap);
        levels.extend((0..len).map(|m| {
            let s = m as f64 + c;
            -0.5 * alpha * alpha * s * s
        }));
    }
    let has_negative = values.iter().any(|z| z.im == 0.0 && z.re < 0.0);
    if has_negative {
        let reals: Vec<f64> = values.iter().filter_map(|z| real_parameter(*z)).collect();
        for i in 0..reals.len() {
            for j in i + 1..reals.len() {
                if reals[i] == reals[j] {
                    return Err(Error::InvalidParams(
                        "three-fold spectrum needs pairwise distinct parameters".into(),
                    ));
                }
            }
        }
    }
    let bound = sort_merge(levels);
    let count = bound.len();
    Ok(Spectrum {
        bound,
        resonances: Vec::new(),
        count_cap: Some(count),
    })
}

/// E_n = [½(n²α² − β²) − inαβ] / (n² + β²/α²)², n = 0..=n_max. The n = 0
/// entry is the bound state −½(α²/β)².
pub fn resonances(alpha: f64, beta: f64, n_max: usize) -> Result<Spectrum> {
    if !(alpha > 0.0 && beta > 0.0) {
        return Err(Error::InvalidParams(format!(
            "resonances need alpha, beta > 0, got ({alpha}, {beta})"
        )));
    }
    let ratio = beta / alpha;
    let bound = vec![-0.5 * (alpha * alpha / beta).powi(2)];
    let resonances = (1..=n_max)
        .map(|n| resonance_energy(alpha, beta, n as f64, ratio))
        .collect();
    Ok(Spectrum {
        bound,
        resonances,
        count_cap: Some(1),
    })
}

fn resonance_energy(alpha: f64, beta: f64, n: f64, ratio: f64) -> ComplexValue {
    let d = n * n + ratio * ratio;
    c64(0.5 * (n * n * alpha * alpha - beta * beta), -n * alpha * beta) / (d * d)
}
