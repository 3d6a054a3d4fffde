use num_complex::Complex64;

use super::check::basis_integrator;
use super::spec::BasisSpec;
use crate::energy_poly::{
    discrete_dual_hahn, discrete_meixner, eval_recursion, weight, DiscreteDualHahnParams,
    DiscreteMeixnerParams,
};
use crate::error::{Error, Result};
use crate::numerics::Grid;
use crate::special::{c64, terminating_pfq};
use crate::spectra::{SystemCatalogEntry, SystemKind};

/// Wavefunction samples on a grid with the number of basis terms used.
#[derive(Debug, Clone, PartialEq)]
pub struct WavefunctionGrid {
    pub x: Grid,
    pub values: Vec<Complex64>,
    pub truncation: usize,
}

impl WavefunctionGrid {
    pub fn magnitudes(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.norm()).collect()
    }

    /// Largest |Im ψ| relative to the largest |ψ|.
    pub fn imaginary_fraction(&self) -> f64 {
        let peak = self.values.iter().map(|v| v.norm()).fold(0.0, f64::max);
        let im = self.values.iter().map(|v| v.im.abs()).fold(0.0, f64::max);
        if peak == 0.0 {
            0.0
        } else {
            im / peak
        }
    }
}

/// Σ c_n φ_n on the grid.
pub fn synthesize(spec: &BasisSpec, coefficients: &[Complex64], grid: &Grid) -> Result<WavefunctionGrid> {
    if coefficients.is_empty() {
        return Err(Error::InvalidParams("at least one expansion coefficient is needed".into()));
    }
    let top = coefficients.len() - 1;
    let values = grid
        .points()
        .iter()
        .map(|&x| {
            let phi = spec.values(top, x)?;
            Ok(phi.iter().zip(coefficients).map(|(p, c)| c * p).sum())
        })
        .collect::<Result<Vec<Complex64>>>()?;
    Ok(WavefunctionGrid {
        x: grid.clone(),
        values,
        truncation: coefficients.len(),
    })
}

fn to_complex(c: &[f64]) -> Vec<Complex64> {
    c.iter().map(|&v| c64(v, 0.0)).collect()
}

/// λ∫(Σ a_n φ_n)(Σ b_n φ̄_n) dx by quadrature.
pub fn state_overlap(spec: &BasisSpec, a: &[f64], b: &[f64]) -> Result<f64> {
    let top = a.len().max(b.len()).max(1) - 1;
    let integrand = |x: f64| -> f64 {
        match (spec.values(top, x), spec.conjugate_values(top, x)) {
            (Ok(v), Ok(c)) => {
                let left: f64 = v.iter().zip(a).map(|(p, q)| p * q).sum();
                let right: f64 = c.iter().zip(b).map(|(p, q)| p * q).sum();
                left * right
            }
            _ => f64::NAN,
        }
    };
    let est = basis_integrator(spec, top, 1e-11).integrate(integrand, spec.domain())?;
    Ok(spec.lambda * est.value)
}

/// √ρ(ε)·P_n(ε) for n < n_terms at a continuum energy.
pub fn scattering_coefficients(system: &SystemCatalogEntry, energy: f64, n_terms: usize) -> Result<Vec<f64>> {
    if n_terms == 0 {
        return Err(Error::InvalidParams("n_terms must be at least 1".into()));
    }
    let y = system.mapping.y(energy)?;
    let poly = system.polynomial_at(energy)?;
    let root = weight(&poly, y)?.sqrt();
    Ok(eval_recursion(&poly, y, n_terms - 1)?.into_iter().map(|p| root * p).collect())
}

/// Truncated continuum state ψ(E, x) = √ρ Σ_{n<N} P_n φ_n(x).
pub fn scattering_wavefunction(
    system: &SystemCatalogEntry,
    energy: f64,
    grid: &Grid,
    n_terms: usize,
) -> Result<WavefunctionGrid> {
    let c = scattering_coefficients(system, energy, n_terms)?;
    synthesize(&system.basis, &to_complex(&c), grid)
}

/// Largest change on the grid between the N- and 2N-term continuum sums.
pub fn scattering_convergence(system: &SystemCatalogEntry, energy: f64, grid: &Grid, n_terms: usize) -> Result<f64> {
    let coarse = scattering_wavefunction(system, energy, grid, n_terms)?;
    let fine = scattering_wavefunction(system, energy, grid, 2 * n_terms)?;
    Ok(coarse
        .values
        .iter()
        .zip(&fine.values)
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max))
}

/// Controls for the infinite Meixner expansions of bound states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundStateOptions {
    /// Meixner parameter β = e^{−2θ}.
    pub theta: f64,
    pub tail_tol: f64,
    pub max_terms: usize,
}

impl Default for BoundStateOptions {
    fn default() -> Self {
        BoundStateOptions {
            theta: 0.5 * std::f64::consts::LN_2,
            tail_tol: 1e-14,
            max_terms: 2000,
        }
    }
}

/// Consecutive small terms required before an infinite sum is cut.
const QUIET_RUN: usize = 20;

fn adaptive<F: FnMut(usize) -> Result<Complex64>>(mut term: F, min_terms: usize, tol: f64, cap: usize) -> Result<Vec<Complex64>> {
    let mut out = Vec::new();
    let mut peak = 0.0f64;
    let mut quiet = 0;
    for n in 0..cap {
        let c = term(n)?;
        peak = peak.max(c.norm());
        quiet = if c.norm() < tol * peak { quiet + 1 } else { 0 };
        out.push(c);
        if n + 1 >= min_terms && quiet >= QUIET_RUN {
            break;
        }
    }
    Ok(out)
}

fn meixner_coefficients(mu: f64, m: usize, opts: &BoundStateOptions) -> Result<Vec<f64>> {
    if !(opts.theta > 0.0) {
        return Err(Error::InvalidParams(format!("theta must be positive, got {}", opts.theta)));
    }
    let params = DiscreteMeixnerParams::new(2.0 * mu, (-2.0 * opts.theta).exp())?;
    let root = discrete_meixner(&params, 0, m)?.1.sqrt();
    let c = adaptive(
        |n| Ok(c64(root * discrete_meixner(&params, n, m)?.0, 0.0)),
        m + 1,
        opts.tail_tol,
        opts.max_terms,
    )?;
    Ok(c.into_iter().map(|z| z.re).collect())
}

fn dual_hahn_coefficients(params: &DiscreteDualHahnParams, index: usize) -> Result<Vec<f64>> {
    let w = discrete_dual_hahn(params, 0, index)?.1.sqrt();
    (0..=params.size())
        .map(|n| Ok(w * discrete_dual_hahn(params, n, index)?.0))
        .collect()
}

fn finite_size(x: f64, what: &str) -> Result<usize> {
    let r = x.round();
    if !(r >= 0.0) || (x - r).abs() > 1e-9 {
        return Err(Error::InvalidParams(format!("{what} = {x} is not a non-negative integer")));
    }
    Ok(r as usize)
}

/// Expansion coefficients of bound state m in the system basis.
///
/// Meixner–Pollaczek systems use the discrete Meixner expansion (infinite,
/// truncated adaptively); the Morse system and the three-parameter systems
/// with integer N = −μ−b use finite dual Hahn sums.
pub fn bound_coefficients(system: &SystemCatalogEntry, m: usize, opts: &BoundStateOptions) -> Result<Vec<f64>> {
    match system.kind() {
        SystemKind::Coulomb { .. } | SystemKind::LogMP { .. } | SystemKind::PowerMP { .. } => {
            let p = system
                .meixner_pollaczek()
                .ok_or_else(|| Error::InvalidParams("missing Meixner-Pollaczek parameters".into()))?;
            meixner_coefficients(p.mu(), m, opts)
        }
        SystemKind::Morse { .. } => {
            let p = system
                .dual_hahn()
                .ok_or_else(|| Error::InvalidParams("missing dual Hahn parameters".into()))?;
            let (mu, b) = (p.mu().re, p.b().re);
            let big = finite_size(-(mu + b), "-(mu + b)")?;
            if m > big {
                return Err(Error::IndexOutOfRange { index: m, limit: big });
            }
            let params = DiscreteDualHahnParams::new(big, 2.0 * mu - 1.0, 0.0)?;
            dual_hahn_coefficients(&params, big - m)
        }
        SystemKind::LogCDH { .. } | SystemKind::PowerCDH { .. } | SystemKind::LinearCDH { .. } => {
            let p = system
                .dual_hahn()
                .ok_or_else(|| Error::InvalidParams("missing dual Hahn parameters".into()))?;
            let (mu, a, b) = (p.mu().re, p.a().re, p.b().re);
            let big = finite_size(-(mu + b), "N = -(mu + b)")?;
            if m > big {
                return Err(Error::IndexOutOfRange { index: m, limit: big });
            }
            let params = DiscreteDualHahnParams::new(big, mu + a - 1.0, mu - a)?;
            dual_hahn_coefficients(&params, m)
        }
        SystemKind::Resonance { alpha, beta } => {
            if m > 0 {
                return Err(Error::IndexOutOfRange { index: m, limit: 0 });
            }
            let c = resonance_coefficients(alpha, beta, 0, 2000)?;
            Ok(c.into_iter().map(|z| z.re).collect())
        }
    }
}

/// Bound state m synthesized on the grid.
pub fn bound_wavefunction(
    system: &SystemCatalogEntry,
    m: usize,
    grid: &Grid,
    opts: &BoundStateOptions,
) -> Result<WavefunctionGrid> {
    let c = bound_coefficients(system, m, opts)?;
    synthesize(&system.basis, &to_complex(&c), grid)
}

/// Relative size below which trailing resonance terms are dropped.
const RESONANCE_TAIL: f64 = 1e-10;

/// Coefficients of resonance state m (m = 0 is the bound state) for the
/// system with μ = α/√(2E), y = β/α, θ = π/2.
///
/// For m ≥ 1, μ = m + iβ/α; for m = 0, μ = β/α. Square roots of complex
/// Pochhammer ratios are taken factor by factor on the principal branch.
pub fn resonance_coefficients(alpha: f64, beta: f64, m: usize, max_terms: usize) -> Result<Vec<Complex64>> {
    if !(alpha > 0.0) || !(beta > 0.0) {
        return Err(Error::InvalidParams(format!(
            "alpha and beta must be positive, got ({alpha}, {beta})"
        )));
    }
    let mu = if m == 0 {
        c64(beta / alpha, 0.0)
    } else {
        c64(m as f64, beta / alpha)
    };
    let two_mu = mu * 2.0;
    let q = (-std::f64::consts::PI).exp();
    let z = c64(1.0 - 1.0 / q, 0.0);
    let mut pre = (mu * (1.0 - q).ln()).exp() * q.powf(0.5 * m as f64);
    for k in 0..m {
        pre *= ((two_mu + k as f64) / (k as f64 + 1.0)).sqrt();
    }
    let mf = c64(-(m as f64), 0.0);
    let mut norm = c64(1.0, 0.0);
    adaptive(
        |n| {
            if n > 0 {
                norm *= ((two_mu + (n - 1) as f64) * q / n as f64).sqrt();
            }
            let f = terminating_pfq(&[c64(-(n as f64), 0.0), mf], &[two_mu], z)?;
            Ok(pre * norm * f)
        },
        m + 1,
        RESONANCE_TAIL,
        max_terms.max(1),
    )
}

/// Resonance state m on the Laguerre ν = 1 basis with unit scale.
pub fn resonance_wavefunction(
    alpha: f64,
    beta: f64,
    m: usize,
    grid: &Grid,
    max_terms: usize,
) -> Result<WavefunctionGrid> {
    let c = resonance_coefficients(alpha, beta, m, max_terms)?;
    synthesize(&BasisSpec::laguerre(1.0, 1.0)?, &c, grid)
}
