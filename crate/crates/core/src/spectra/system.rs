use std::f64::consts::FRAC_PI_2;

use crate::basis::BasisSpec;
use crate::energy_poly::{ContinuousDualHahnParams, EnergyPolynomial, MeixnerPollaczekParams};
use crate::error::{Error, Result};

/// Polynomial class of a system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyClass {
    MeixnerPollaczek,
    ContinuousDualHahn,
}

/// Relation between the energy E = k²/2 and the polynomial argument y.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EnergyMapping {
    /// y = Z/k.
    CoulombMap { z: f64, l: u32 },
    /// y² = β⁻¹ ln(1 + λ²/k²).
    LogMapMP { lambda: f64, beta: f64 },
    /// y = (scale/k)^{2l+1} when `inverse`, else (|k|/scale)^{2l+1}.
    PowerMap { scale: f64, l: u32, inverse: bool },
    /// y = |k|/α.
    LinearMap { alpha: f64 },
    /// y² = β⁻¹ ln(1 + k²/α²).
    LogMapCDH { alpha: f64, beta: f64 },
    /// μ = α/√(2E), y = β/α, θ = π/2.
    InverseMuMap { alpha: f64, beta: f64 },
}

impl EnergyMapping {
    /// y² as a real function of E, continued to E < 0 where it is real.
    pub fn y_squared(&self, energy: f64) -> Result<f64> {
        if energy == 0.0 || !energy.is_finite() {
            return Err(Error::InvalidEnergy(format!("energy {energy} has no mapped argument")));
        }
        let k2 = 2.0 * energy;
        Ok(match *self {
            EnergyMapping::CoulombMap { z, .. } => z * z / k2,
            EnergyMapping::LogMapMP { lambda, beta } => {
                let arg = 1.0 + lambda * lambda / k2;
                if !(arg > 0.0) {
                    return Err(Error::InvalidEnergy(format!(
                        "log mapping undefined for E = {energy} (needs |E| > λ²/2 below threshold)"
                    )));
                }
                arg.ln() / beta
            }
            EnergyMapping::PowerMap { scale, l, inverse } => {
                let base = if inverse {
                    scale * scale / k2
                } else {
                    k2 / (scale * scale)
                };
                base.powi(2 * l as i32 + 1)
            }
            EnergyMapping::LinearMap { alpha } => k2 / (alpha * alpha),
            EnergyMapping::LogMapCDH { alpha, beta } => {
                let arg = 1.0 + k2 / (alpha * alpha);
                if !(arg > 0.0) {
                    return Err(Error::InvalidEnergy(format!(
                        "log mapping undefined for E = {energy} (needs E > -α²/2)"
                    )));
                }
                arg.ln() / beta
            }
            EnergyMapping::InverseMuMap { alpha, beta } => (beta / alpha).powi(2),
        })
    }

    /// Physical argument y for a scattering energy E > 0.
    pub fn y(&self, energy: f64) -> Result<f64> {
        if !(energy > 0.0) {
            return Err(Error::InvalidEnergy(format!("scattering energy must be positive, got {energy}")));
        }
        let k = (2.0 * energy).sqrt();
        Ok(match *self {
            EnergyMapping::CoulombMap { z, .. } => z / k,
            EnergyMapping::PowerMap { scale, l, inverse } => {
                let base = if inverse { scale / k } else { k / scale };
                base.powi(2 * l as i32 + 1)
            }
            EnergyMapping::LinearMap { alpha } => k / alpha,
            EnergyMapping::InverseMuMap { alpha, beta } => beta / alpha,
            _ => self.y_squared(energy)?.sqrt(),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Polynomial {
    Fixed(EnergyPolynomial),
    /// μ follows from the energy.
    EnergyDependentMu,
}

/// A named system: polynomial class and parameters, energy mapping and the
/// basis used for wavefunctions.
#[derive(Debug, Clone, PartialEq)]
pub struct SystemCatalogEntry {
    pub name: String,
    pub mapping: EnergyMapping,
    pub basis: BasisSpec,
    polynomial: Polynomial,
    kind: SystemKind,
}

/// Closed-form family a catalog entry belongs to, with its physical
/// parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SystemKind {
    Coulomb { z: f64, l: u32 },
    LogMP { lambda: f64, beta: f64, v0: f64, l: u32 },
    PowerMP { lambda: f64, mu: f64, l: u32 },
    Morse { alpha: f64, beta: f64, v0: f64 },
    LogCDH { alpha: f64, beta: f64 },
    PowerCDH { alpha: f64, l: u32 },
    LinearCDH { alpha: f64 },
    Resonance { alpha: f64, beta: f64 },
}

fn positive(name: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidParams(format!("{name} must be positive, got {v}")))
    }
}

fn laguerre(nu: f64) -> BasisSpec {
    BasisSpec::laguerre(nu, 1.0).expect("static basis parameters")
}

impl SystemCatalogEntry {
    fn build(
        name: &str,
        kind: SystemKind,
        mapping: EnergyMapping,
        polynomial: Polynomial,
        basis: BasisSpec,
    ) -> Self {
        SystemCatalogEntry {
            name: name.to_string(),
            mapping,
            basis,
            polynomial,
            kind,
        }
    }

    fn mp(mu: f64) -> Result<Polynomial> {
        Ok(Polynomial::Fixed(MeixnerPollaczekParams::new(mu, FRAC_PI_2)?.into()))
    }

    /// μ = ℓ+1, θ = π/2, y = Z/k.
    pub fn coulomb(z: f64, l: u32) -> Result<Self> {
        if !z.is_finite() {
            return Err(Error::InvalidParams(format!("charge must be finite, got {z}")));
        }
        Ok(Self::build(
            "coulomb",
            SystemKind::Coulomb { z, l },
            EnergyMapping::CoulombMap { z, l },
            Self::mp(l as f64 + 1.0)?,
            laguerre(2.0 * l as f64 + 1.0),
        ))
    }

    /// μ = ℓ + √V0/λ, θ = π/2, y² = β⁻¹ ln(1 + λ²/k²).
    pub fn log_mp(lambda: f64, beta: f64, v0: f64, l: u32) -> Result<Self> {
        positive("lambda", lambda)?;
        positive("beta", beta)?;
        positive("V0", v0)?;
        Ok(Self::build(
            "log-mp",
            SystemKind::LogMP { lambda, beta, v0, l },
            EnergyMapping::LogMapMP { lambda, beta },
            Self::mp(l as f64 + v0.sqrt() / lambda)?,
            laguerre(2.0 * l as f64 + 1.0),
        ))
    }

    /// θ = π/2, y = (λ/k)^{2ℓ+1}.
    pub fn power_mp(lambda: f64, mu: f64, l: u32) -> Result<Self> {
        positive("lambda", lambda)?;
        Ok(Self::build(
            "power-mp",
            SystemKind::PowerMP { lambda, mu, l },
            EnergyMapping::PowerMap {
                scale: lambda,
                l,
                inverse: true,
            },
            Self::mp(mu)?,
            laguerre(2.0 * l as f64 + 1.0),
        ))
    }

    /// y = |k|/α, a = μ, b = ½ − α⁻¹β√(2V0) < 0, μ = −b − floor(−b).
    pub fn morse(alpha: f64, beta: f64, v0: f64) -> Result<Self> {
        positive("alpha", alpha)?;
        positive("beta", beta)?;
        positive("V0", v0)?;
        let b = 0.5 - beta * (2.0 * v0).sqrt() / alpha;
        if !(b < 0.0) {
            return Err(Error::InvalidParams(format!(
                "Morse parameters give b = {b}; bound states need b < 0"
            )));
        }
        let mu = -b - (-b).floor();
        if mu < 1e-12 {
            return Err(Error::InvalidParams(format!(
                "Morse parameters give integer b = {b}, so mu = 0"
            )));
        }
        let params = ContinuousDualHahnParams::real(mu, mu, b)?;
        Ok(Self::build(
            "morse",
            SystemKind::Morse { alpha, beta, v0 },
            EnergyMapping::LinearMap { alpha },
            Polynomial::Fixed(params.into()),
            laguerre(1.0),
        ))
    }

    /// y² = β⁻¹ ln(1 + k²/α²) with general (μ, a, b).
    pub fn log_cdh(alpha: f64, beta: f64, mu: f64, a: f64, b: f64) -> Result<Self> {
        positive("alpha", alpha)?;
        positive("beta", beta)?;
        let params = ContinuousDualHahnParams::real(mu, a, b)?;
        Ok(Self::build(
            "log-cdh",
            SystemKind::LogCDH { alpha, beta },
            EnergyMapping::LogMapCDH { alpha, beta },
            Polynomial::Fixed(params.into()),
            laguerre(1.0),
        ))
    }

    /// y = (|k|/α)^{2ℓ+1}.
    pub fn power_cdh(alpha: f64, l: u32, mu: f64, a: f64, b: f64) -> Result<Self> {
        positive("alpha", alpha)?;
        let params = ContinuousDualHahnParams::real(mu, a, b)?;
        Ok(Self::build(
            "power-cdh",
            SystemKind::PowerCDH { alpha, l },
            EnergyMapping::PowerMap {
                scale: alpha,
                l,
                inverse: false,
            },
            Polynomial::Fixed(params.into()),
            laguerre(1.0),
        ))
    }

    /// y = |k|/α with three free parameters.
    pub fn linear_cdh(alpha: f64, mu: f64, a: f64, b: f64) -> Result<Self> {
        positive("alpha", alpha)?;
        let params = ContinuousDualHahnParams::real(mu, a, b)?;
        Ok(Self::build(
            "linear-cdh",
            SystemKind::LinearCDH { alpha },
            EnergyMapping::LinearMap { alpha },
            Polynomial::Fixed(params.into()),
            laguerre(1.0),
        ))
    }

    /// μ = α/√(2E), y = β/α, θ = π/2.
    pub fn resonance(alpha: f64, beta: f64) -> Result<Self> {
        positive("alpha", alpha)?;
        positive("beta", beta)?;
        Ok(Self::build(
            "resonance",
            SystemKind::Resonance { alpha, beta },
            EnergyMapping::InverseMuMap { alpha, beta },
            Polynomial::EnergyDependentMu,
            laguerre(1.0),
        ))
    }

    pub fn with_basis(mut self, basis: BasisSpec) -> Self {
        self.basis = basis;
        self
    }

    pub fn kind(&self) -> SystemKind {
        self.kind
    }

    pub fn class(&self) -> PolyClass {
        match self.polynomial {
            Polynomial::Fixed(EnergyPolynomial::ContinuousDualHahn(_)) => PolyClass::ContinuousDualHahn,
            _ => PolyClass::MeixnerPollaczek,
        }
    }

    /// Polynomial parameters at a given energy (E > 0 for energy-dependent μ).
    pub fn polynomial_at(&self, energy: f64) -> Result<EnergyPolynomial> {
        match self.polynomial {
            Polynomial::Fixed(p) => Ok(p),
            Polynomial::EnergyDependentMu => {
                let EnergyMapping::InverseMuMap { alpha, .. } = self.mapping else {
                    unreachable!("energy-dependent mu only with the inverse-mu mapping")
                };
                if !(energy > 0.0) {
                    return Err(Error::InvalidEnergy(format!(
                        "energy-dependent mu needs E > 0, got {energy}"
                    )));
                }
                Ok(MeixnerPollaczekParams::new(alpha / (2.0 * energy).sqrt(), FRAC_PI_2)?.into())
            }
        }
    }

    /// Fixed continuous dual Hahn parameters, if any.
    pub fn dual_hahn(&self) -> Option<ContinuousDualHahnParams> {
        match self.polynomial {
            Polynomial::Fixed(EnergyPolynomial::ContinuousDualHahn(p)) => Some(p),
            _ => None,
        }
    }

    /// Fixed Meixner–Pollaczek parameters, if any.
    pub fn meixner_pollaczek(&self) -> Option<MeixnerPollaczekParams> {
        match self.polynomial {
            Polynomial::Fixed(EnergyPolynomial::MeixnerPollaczek(p)) => Some(p),
            _ => None,
        }
    }
}

/// Default entries, one per system family.
pub fn catalog() -> Vec<SystemCatalogEntry> {
    let build = || -> Result<Vec<SystemCatalogEntry>> {
        Ok(vec![
            SystemCatalogEntry::coulomb(1.0, 0)?,
            SystemCatalogEntry::log_mp(1.0, 1.0, 1.0, 0)?,
            SystemCatalogEntry::power_mp(1.0, 1.0, 1)?,
            SystemCatalogEntry::morse(1.0, 1.0, 2.0)?,
            SystemCatalogEntry::log_cdh(1.0, 1.0, -2.3, 1.0, 0.3)?,
            SystemCatalogEntry::power_cdh(1.0, 1, -1.5, 2.0, 2.5)?,
            SystemCatalogEntry::linear_cdh(1.0, -1.2, -0.5, 7.0)?,
            SystemCatalogEntry::resonance(1.0, 0.9)?,
        ])
    };
    build().expect("catalog parameters are valid")
}
