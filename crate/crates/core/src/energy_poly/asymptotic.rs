use std::f64::consts::{FRAC_PI_2, PI};

use super::params::EnergyPolynomial;
use crate::error::{Error, Result};
use crate::special::{c64, ln_gamma_real, log_gamma_complex, recip_gamma, recip_gamma_real};

fn check_support(poly: &EnergyPolynomial, y: f64) -> Result<()> {
    if let EnergyPolynomial::ContinuousDualHahn(_) = poly {
        if !(y > 0.0) {
            return Err(Error::Domain {
                x: y,
                what: "dual Hahn asymptotics need y > 0".into(),
            });
        }
    }
    Ok(())
}

/// n-independent phase constant δ in P_n ~ A cos(law(n) + δ).
///
/// Meixner–Pollaczek: arg Γ(μ+iy) + μ(θ − π/2).
/// Continuous dual Hahn: −arg{Γ(μ+iy)Γ(a+iy)Γ(b+iy)/Γ(2iy)}.
pub fn phase_constant(poly: &EnergyPolynomial, y: f64) -> Result<f64> {
    check_support(poly, y)?;
    match poly {
        EnergyPolynomial::MeixnerPollaczek(p) => {
            let gamma = log_gamma_complex(c64(p.mu(), y))?.im;
            Ok(gamma + p.mu() * (p.theta() - FRAC_PI_2))
        }
        EnergyPolynomial::ContinuousDualHahn(p) => {
            let iy = c64(0.0, y);
            let g = log_gamma_complex(p.mu() + iy)?.im
                + log_gamma_complex(p.a() + iy)?.im
                + log_gamma_complex(p.b() + iy)?.im
                - log_gamma_complex(iy * 2.0)?.im;
            Ok(-g)
        }
    }
}

/// n-dependent part of the cosine argument: nθ − y ln(2n sinθ), or y ln n.
pub fn phase_law(poly: &EnergyPolynomial, y: f64, n: f64) -> f64 {
    match poly {
        EnergyPolynomial::MeixnerPollaczek(p) => {
            let th = p.theta();
            n * th - y * (2.0 * n * th.sin()).ln()
        }
        EnergyPolynomial::ContinuousDualHahn(_) => y * n.ln(),
    }
}

/// Full cosine argument Θ_n.
pub fn asymptotic_phase(poly: &EnergyPolynomial, y: f64, n: usize) -> Result<f64> {
    Ok(phase_law(poly, y, n as f64) + phase_constant(poly, y)?)
}

/// n-independent amplitude A(y) with P_n ≈ A(y) n^{-1/2} cos Θ_n.
pub fn amplitude_factor(poly: &EnergyPolynomial, y: f64) -> Result<f64> {
    check_support(poly, y)?;
    match poly {
        EnergyPolynomial::MeixnerPollaczek(p) => {
            let (mu, th) = (p.mu(), p.theta());
            let lg = match log_gamma_complex(c64(mu, y)) {
                Ok(v) => v.re,
                Err(Error::GammaPole { .. }) => return Ok(0.0),
                Err(e) => return Err(e),
            };
            Ok((2f64.ln() + 0.5 * ln_gamma_real(2.0 * mu)? + (FRAC_PI_2 - th) * y
                - mu * (2.0 * th.sin()).ln()
                - lg)
                .exp())
        }
        EnergyPolynomial::ContinuousDualHahn(p) => {
            let iy = c64(0.0, y);
            let (mu, a, b) = (p.mu(), p.a(), p.b());
            let norm = log_gamma_complex(mu + a)? + log_gamma_complex(mu + b)?
                + log_gamma_complex(a + b)?;
            let mut denom = 0.0;
            for c in [mu, a, b] {
                match log_gamma_complex(c + iy) {
                    Ok(v) => denom += v.re,
                    Err(Error::GammaPole { .. }) => return Ok(0.0),
                    Err(e) => return Err(e),
                }
            }
            let top = log_gamma_complex(iy * 2.0)?.re;
            Ok((2f64.ln() + 0.5 * norm.re + top - denom).exp())
        }
    }
}

/// Large-n approximation of the orthonormal polynomial P_n(y).
pub fn asymptotic_approximant(poly: &EnergyPolynomial, y: f64, n: usize) -> Result<f64> {
    let amp = amplitude_factor(poly, y)?;
    Ok(amp / (n as f64).sqrt() * asymptotic_phase(poly, y, n)?.cos())
}

/// Large-n approximation of √ρ(y)·P_n(y): √(2/(nπ)) cos Θ_n.
pub fn asymptotic_weighted(poly: &EnergyPolynomial, y: f64, n: usize) -> Result<f64> {
    Ok((2.0 / (n as f64 * PI)).sqrt() * asymptotic_phase(poly, y, n)?.cos())
}

/// Reciprocal-gamma part of the amplitude on the continued axis iy = ∓s,
/// real for real s. Meixner–Pollaczek: 1/Γ(μ − s), zero at s = μ + n.
/// Continuous dual Hahn: 1/[Γ(μ+s)Γ(a+s)Γ(b+s)], zero at s = −(c + n) for
/// each negative parameter c.
pub fn reciprocal_gamma_factor(poly: &EnergyPolynomial, s: f64) -> f64 {
    match poly {
        EnergyPolynomial::MeixnerPollaczek(p) => recip_gamma_real(p.mu() - s),
        EnergyPolynomial::ContinuousDualHahn(p) => {
            let prod = recip_gamma(p.mu() + s) * recip_gamma(p.a() + s) * recip_gamma(p.b() + s);
            prod.re
        }
    }
}
