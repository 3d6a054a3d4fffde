use std::f64::consts::PI;

use super::polys::{gegenbauer, generalized_hermite, hermite, jacobi, laguerre};
use crate::error::{Error, Result};
use crate::numerics::{second_derivative, Grid, Interval};
use crate::special::{bessel_j, ln_gamma_real};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassicalId {
    Oscillator,
    PoschlTeller,
    Coulomb3D,
    Morse1D,
    Table1Jacobi,
    Table1Bessel,
    Table1GenHermite,
}

/// Energy formula used for the Jacobi column.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum JacobiSpectrum {
    /// ½(π/a)²(n + (μ+ν+1)/2)².
    #[default]
    Corrected,
    /// ½(π/a)²(n + μ + ν + 1)².
    AsPrinted,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClassicalParams {
    Oscillator { kappa: f64 },
    PoschlTeller { a: f64, mu: f64 },
    /// Attractive charge Z < 0.
    Coulomb3D { z: f64, l: u32 },
    Morse1D { alpha: f64, beta: f64, v0: f64 },
    Table1Jacobi { a: f64, mu: f64, nu: f64, spectrum: JacobiSpectrum },
    /// Free radial motion at E = ½k²; the index is the Bessel order.
    Table1Bessel { k: f64 },
    Table1GenHermite { k: f64, l: u32 },
}

impl ClassicalParams {
    pub fn id(&self) -> ClassicalId {
        match self {
            ClassicalParams::Oscillator { .. } => ClassicalId::Oscillator,
            ClassicalParams::PoschlTeller { .. } => ClassicalId::PoschlTeller,
            ClassicalParams::Coulomb3D { .. } => ClassicalId::Coulomb3D,
            ClassicalParams::Morse1D { .. } => ClassicalId::Morse1D,
            ClassicalParams::Table1Jacobi { .. } => ClassicalId::Table1Jacobi,
            ClassicalParams::Table1Bessel { .. } => ClassicalId::Table1Bessel,
            ClassicalParams::Table1GenHermite { .. } => ClassicalId::Table1GenHermite,
        }
    }
}

/// A system with discrete spectrum built from a classical polynomial:
/// potential, energies and wavefunctions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalSystem {
    params: ClassicalParams,
    domain: Interval,
}

fn positive(name: &str, v: f64) -> Result<()> {
    if !(v > 0.0) || !v.is_finite() {
        return Err(Error::InvalidParams(format!("{name} must be positive, got {v}")));
    }
    Ok(())
}

pub fn build_system(params: ClassicalParams) -> Result<ClassicalSystem> {
    let domain = match params {
        ClassicalParams::Oscillator { kappa } => {
            positive("kappa", kappa)?;
            Interval::whole_line()
        }
        ClassicalParams::PoschlTeller { a, mu } => {
            positive("a", a)?;
            if !(mu > -0.5) || mu == 0.0 {
                return Err(Error::InvalidParams(format!("Gegenbauer index needs mu > -1/2, mu != 0, got {mu}")));
            }
            Interval { lo: -0.5 * a, hi: 0.5 * a }
        }
        ClassicalParams::Coulomb3D { z, .. } => {
            if !(z < 0.0) {
                return Err(Error::InvalidParams(format!("bound Coulomb states need Z < 0, got {z}")));
            }
            Interval::half_line(0.0)
        }
        ClassicalParams::Morse1D { alpha, beta, v0 } => {
            positive("alpha", alpha)?;
            positive("beta", beta)?;
            positive("V0", v0)?;
            if beta * (2.0 * v0).sqrt() / alpha <= 0.5 {
                return Err(Error::InvalidParams("Morse parameters admit no bound state".into()));
            }
            Interval::whole_line()
        }
        ClassicalParams::Table1Jacobi { a, mu, nu, .. } => {
            positive("a", a)?;
            if !(mu > -1.0 && nu > -1.0) {
                return Err(Error::InvalidParams(format!("Jacobi needs mu, nu > -1, got ({mu}, {nu})")));
            }
            Interval { lo: -0.5 * a, hi: 0.5 * a }
        }
        ClassicalParams::Table1Bessel { k } => {
            positive("k", k)?;
            Interval::half_line(0.0)
        }
        ClassicalParams::Table1GenHermite { k, .. } => {
            positive("k", k)?;
            Interval::whole_line()
        }
    };
    Ok(ClassicalSystem { params, domain })
}

fn ln_factorial(n: usize) -> f64 {
    ln_gamma_real(n as f64 + 1.0).unwrap_or(f64::NAN)
}

impl ClassicalSystem {
    pub fn id(&self) -> ClassicalId {
        self.params.id()
    }

    pub fn params(&self) -> ClassicalParams {
        self.params
    }

    pub fn domain(&self) -> Interval {
        self.domain
    }

    /// Points where the potential is singular.
    pub fn singular_points(&self) -> Vec<f64> {
        match self.params {
            ClassicalParams::PoschlTeller { .. } | ClassicalParams::Table1Jacobi { .. } => {
                vec![self.domain.lo, self.domain.hi]
            }
            ClassicalParams::Coulomb3D { .. }
            | ClassicalParams::Table1Bessel { .. }
            | ClassicalParams::Table1GenHermite { .. } => vec![0.0],
            _ => Vec::new(),
        }
    }

    /// Largest admissible level index, if finite.
    pub fn max_level(&self) -> Option<usize> {
        match self.params {
            ClassicalParams::Morse1D { alpha, beta, v0 } => {
                let top = beta * (2.0 * v0).sqrt() / alpha - 0.5;
                // n < top strictly.
                Some((top.ceil() - 1.0).max(0.0) as usize)
            }
            _ => None,
        }
    }

    fn check_level(&self, n: usize) -> Result<()> {
        if let Some(limit) = self.max_level() {
            if n > limit {
                return Err(Error::IndexOutOfRange { index: n, limit });
            }
        }
        if let ClassicalParams::Table1Bessel { .. } = self.params {
            if n == 0 {
                return Err(Error::InvalidParams("Bessel column needs order n >= 1".into()));
            }
        }
        Ok(())
    }

    /// Length scale λ with λ∫ψ_n² dx = 1 (Λ_nn for the Coulomb family).
    /// `None` for the non-normalizable Bessel column.
    pub fn norm_scale(&self, n: usize) -> Option<f64> {
        match self.params {
            ClassicalParams::Oscillator { kappa } => Some(kappa),
            ClassicalParams::PoschlTeller { a, .. } | ClassicalParams::Table1Jacobi { a, .. } => Some(PI / a),
            ClassicalParams::Coulomb3D { z, l } => Some(-2.0 * z / (n as f64 + l as f64 + 1.0)),
            ClassicalParams::Morse1D { alpha, .. } => Some(alpha),
            ClassicalParams::Table1Bessel { .. } => None,
            ClassicalParams::Table1GenHermite { k, .. } => Some(k),
        }
    }

    /// V(x); the Bessel column's potential depends on the order n.
    pub fn potential(&self, n: usize, x: f64) -> f64 {
        match self.params {
            ClassicalParams::Oscillator { kappa } => 0.5 * kappa.powi(4) * x * x,
            ClassicalParams::PoschlTeller { a, mu } => {
                let c = (PI * x / a).cos();
                0.5 * (PI / a).powi(2) * mu * (mu - 1.0) / (c * c)
            }
            ClassicalParams::Coulomb3D { z, l } => {
                let lf = l as f64;
                lf * (lf + 1.0) / (2.0 * x * x) + z / x
            }
            ClassicalParams::Morse1D { alpha, beta, v0 } => {
                let e = (-alpha * x).exp();
                v0 * (e * e - 2.0 * beta * e)
            }
            ClassicalParams::Table1Jacobi { a, mu, nu, .. } => {
                let u = PI * x / a;
                let c2 = u.cos().powi(2);
                0.25 * (PI / a).powi(2) * ((mu * mu + nu * nu - 0.5) / c2 + (mu * mu - nu * nu) * u.sin() / c2)
            }
            ClassicalParams::Table1Bessel { .. } => {
                let nf = n as f64;
                (nf * nf - 0.25) / (2.0 * x * x)
            }
            ClassicalParams::Table1GenHermite { k, l } => {
                let lf = l as f64;
                lf * (lf + 1.0) / (2.0 * x * x) + 0.5 * k.powi(4) * x * x
            }
        }
    }

    pub fn energy(&self, n: usize) -> Result<f64> {
        self.check_level(n)?;
        let nf = n as f64;
        Ok(match self.params {
            ClassicalParams::Oscillator { kappa } => kappa * kappa * (nf + 0.5),
            ClassicalParams::PoschlTeller { a, mu } => 0.5 * (PI / a).powi(2) * (nf + mu).powi(2),
            ClassicalParams::Coulomb3D { z, l } => -0.5 * (z / (nf + l as f64 + 1.0)).powi(2),
            ClassicalParams::Morse1D { alpha, .. } => -0.5 * (alpha * self.morse_nu(n)).powi(2),
            ClassicalParams::Table1Jacobi { a, mu, nu, spectrum } => {
                let shift = match spectrum {
                    JacobiSpectrum::Corrected => 0.5 * (mu + nu + 1.0),
                    JacobiSpectrum::AsPrinted => mu + nu + 1.0,
                };
                0.5 * (PI / a).powi(2) * (nf + shift).powi(2)
            }
            ClassicalParams::Table1Bessel { k } => 0.5 * k * k,
            ClassicalParams::Table1GenHermite { k, l } => k * k * (2.0 * (n / 2) as f64 + l as f64 + 1.5),
        })
    }

    fn morse_nu(&self, n: usize) -> f64 {
        match self.params {
            ClassicalParams::Morse1D { alpha, beta, v0 } => beta * (2.0 * v0).sqrt() / alpha - n as f64 - 0.5,
            _ => f64::NAN,
        }
    }

    /// ψ_n(x).
    pub fn wavefunction(&self, n: usize, x: f64) -> Result<f64> {
        self.check_level(n)?;
        if !self.domain.contains(x) {
            return Err(Error::Domain {
                x,
                what: format!("outside [{}, {}]", self.domain.lo, self.domain.hi),
            });
        }
        let nf = n as f64;
        Ok(match self.params {
            ClassicalParams::Oscillator { kappa } => {
                let y = kappa * x;
                let ln_norm = -0.25 * PI.ln() - 0.5 * (nf * 2f64.ln() + ln_factorial(n));
                ln_norm.exp() * (-0.5 * y * y).exp() * hermite(n, y)
            }
            ClassicalParams::PoschlTeller { a, mu } => {
                let u = PI * x / a;
                let ln_norm = mu * 2f64.ln() + ln_gamma_real(mu)?
                    + 0.5 * ((nf + mu).ln() + ln_factorial(n) - (2.0 * PI).ln() - ln_gamma_real(nf + 2.0 * mu)?);
                let c = u.cos().max(0.0);
                ln_norm.exp() * c.powf(mu) * gegenbauer(n, mu, u.sin())
            }
            ClassicalParams::Coulomb3D { l, .. } => {
                let mu = self.norm_scale(n).unwrap_or(f64::NAN);
                let nu = 2.0 * l as f64 + 1.0;
                let y = mu * x;
                let ln_norm = 0.5 * (ln_factorial(n) - ln_gamma_real(nf + nu + 1.0)?);
                ln_norm.exp() * y.powf(0.5 * (nu + 1.0)) * (-0.5 * y).exp() * laguerre(n, nu, y)
            }
            ClassicalParams::Morse1D { alpha, v0, .. } => {
                let nu = self.morse_nu(n);
                let y = 2.0 * (2.0 * v0).sqrt() / alpha * (-alpha * x).exp();
                let ln_norm = 0.5 * ((2.0 * nu).ln() + ln_factorial(n) - ln_gamma_real(nf + 2.0 * nu + 1.0)?);
                let envelope = (ln_norm + nu * y.ln() - 0.5 * y).exp();
                if envelope == 0.0 || !y.is_finite() {
                    0.0
                } else {
                    envelope * laguerre(n, 2.0 * nu, y)
                }
            }
            ClassicalParams::Table1Jacobi { a, mu, nu, .. } => {
                let y = (PI * x / a).sin();
                let ln_zeta = (mu + nu + 1.0) * 2f64.ln() + ln_gamma_real(nf + mu + 1.0)? + ln_gamma_real(nf + nu + 1.0)?
                    - (2.0 * nf + mu + nu + 1.0).ln()
                    - ln_gamma_real(nf + mu + nu + 1.0)?
                    - ln_factorial(n);
                let amp = ((1.0 - y).max(0.0).powf(mu + 0.5) * (1.0 + y).max(0.0).powf(nu + 0.5)).sqrt();
                (-0.5 * ln_zeta).exp() * amp * jacobi(n, mu, nu, y)
            }
            ClassicalParams::Table1Bessel { k } => {
                let y = k * x;
                y.sqrt() * bessel_j(n, y)
            }
            ClassicalParams::Table1GenHermite { k, l } => {
                let mu = self.gen_hermite_mu(n, l);
                let y = k * x;
                let m = n / 2;
                let ln_zeta = if n.is_multiple_of(2) {
                    4.0 * m as f64 * 2f64.ln() + ln_factorial(m) + ln_gamma_real(m as f64 + mu + 0.5)?
                } else {
                    (4.0 * m as f64 + 2.0) * 2f64.ln() + ln_factorial(m) + ln_gamma_real(m as f64 + mu + 1.5)?
                };
                (-0.5 * ln_zeta - 0.5 * y * y).exp() * y.abs().powf(mu) * generalized_hermite(n, mu, y)
            }
        })
    }

    fn gen_hermite_mu(&self, n: usize, l: u32) -> f64 {
        if n.is_multiple_of(2) {
            l as f64 + 1.0
        } else {
            l as f64
        }
    }

    /// Natural length of the wavefunctions, used for finite-difference steps.
    pub fn length_scale(&self, n: usize) -> f64 {
        match self.params {
            ClassicalParams::Oscillator { kappa } => 1.0 / kappa,
            ClassicalParams::PoschlTeller { a, .. } | ClassicalParams::Table1Jacobi { a, .. } => a / PI,
            ClassicalParams::Coulomb3D { .. } => 1.0 / self.norm_scale(n).unwrap_or(1.0),
            ClassicalParams::Morse1D { alpha, .. } => 1.0 / alpha,
            ClassicalParams::Table1Bessel { k } | ClassicalParams::Table1GenHermite { k, .. } => 1.0 / k,
        }
    }
}

/// Relative step of the finite-difference stencil.
const STEP: f64 = 4e-3;

/// max_x |−½ψ″ + Vψ − E_nψ| / max_x |E_nψ| on the grid.
pub fn schrodinger_residual(system: &ClassicalSystem, n: usize, grid: &Grid) -> Result<f64> {
    let e = system.energy(n)?;
    let h = STEP * system.length_scale(n);
    let reach = 4.0 * h;
    let dom = system.domain();
    let singular = system.singular_points();
    let mut worst = 0.0f64;
    let mut scale = 0.0f64;
    for &x in grid.points() {
        let near_edge = x - reach <= dom.lo || x + reach >= dom.hi;
        if near_edge || singular.iter().any(|&s| (x - s).abs() <= reach) {
            return Err(Error::SingularGrid { x });
        }
        let psi = |t: f64| system.wavefunction(n, t).unwrap_or(f64::NAN);
        let p = psi(x);
        let d2 = second_derivative(psi, x, h);
        let r = -0.5 * d2 + (system.potential(n, x) - e) * p;
        if !r.is_finite() {
            return Err(Error::SingularGrid { x });
        }
        worst = worst.max(r.abs());
        scale = scale.max((e * p).abs());
    }
    if scale == 0.0 {
        return Err(Error::InvalidParams("wavefunction vanishes on the whole grid".into()));
    }
    Ok(worst / scale)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn interior(sys: &ClassicalSystem, lo: f64, hi: f64) -> Grid {
        let d = sys.domain();
        Grid::linspace(lo.max(d.lo), hi.min(d.hi), 41).unwrap()
    }

    #[test]
    fn reference_energies() {
        let osc = build_system(ClassicalParams::Oscillator { kappa: 1.0 }).unwrap();
        assert_eq!(osc.energy(0).unwrap(), 0.5);
        let pt = build_system(ClassicalParams::PoschlTeller { a: PI, mu: 2.0 }).unwrap();
        for n in 0..4 {
            assert!((pt.energy(n).unwrap() - 0.5 * (n as f64 + 2.0).powi(2)).abs() < 1e-13);
        }
        let c = build_system(ClassicalParams::Coulomb3D { z: -1.0, l: 0 }).unwrap();
        assert_eq!(c.energy(0).unwrap(), -0.5);
    }

    #[test]
    fn oscillator_residual() {
        let osc = build_system(ClassicalParams::Oscillator { kappa: 1.0 }).unwrap();
        let r = schrodinger_residual(&osc, 0, &interior(&osc, -3.0, 3.0)).unwrap();
        assert!(r <= 1e-8, "{r}");
    }

    #[test]
    fn poschl_teller_residual() {
        let pt = build_system(ClassicalParams::PoschlTeller { a: PI, mu: 2.0 }).unwrap();
        let r = schrodinger_residual(&pt, 2, &interior(&pt, -1.4, 1.4)).unwrap();
        assert!(r <= 1e-6, "{r}");
    }

    #[test]
    fn morse_residual_and_count() {
        let m = build_system(ClassicalParams::Morse1D { alpha: 1.0, beta: 1.0, v0: 2.0 }).unwrap();
        assert_eq!(m.max_level(), Some(1));
        let r = schrodinger_residual(&m, 0, &interior(&m, -1.0, 4.0)).unwrap();
        assert!(r <= 1e-6, "{r}");
        assert!(m.energy(2).is_err());
    }

    #[test]
    fn singular_grid_rejected() {
        let c = build_system(ClassicalParams::Coulomb3D { z: -1.0, l: 0 }).unwrap();
        let g = Grid::linspace(0.0, 2.0, 5).unwrap();
        assert!(matches!(schrodinger_residual(&c, 0, &g), Err(Error::SingularGrid { .. })));
    }

    #[test]
    fn rejects_repulsive_coulomb() {
        assert!(build_system(ClassicalParams::Coulomb3D { z: 1.0, l: 0 }).is_err());
    }
}
