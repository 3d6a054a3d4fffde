use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::special::{c64, ComplexValue};

/// Smallest admissible distance of θ from 0 and π.
const THETA_MARGIN: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeixnerPollaczekParams {
    mu: f64,
    theta: f64,
}

impl MeixnerPollaczekParams {
    pub fn new(mu: f64, theta: f64) -> Result<Self> {
        if !(mu > 0.0) || !mu.is_finite() {
            return Err(Error::InvalidParams(format!("mu must be positive, got {mu}")));
        }
        if !(theta > THETA_MARGIN && theta < PI - THETA_MARGIN) {
            return Err(Error::InvalidParams(format!(
                "theta must lie strictly inside (0, pi), got {theta}"
            )));
        }
        Ok(MeixnerPollaczekParams { mu, theta })
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }
}

/// Parameter regime of a continuous dual Hahn family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualHahnRegime {
    /// All parameters positive (or one conjugate pair with positive real parts).
    Continuous,
    /// μ < 0 with μ+a, μ+b positive or conjugate; finite discrete part.
    Mixed,
    /// Anything else: usable for spectra, not for orthogonality.
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ContinuousDualHahnParams {
    mu: ComplexValue,
    a: ComplexValue,
    b: ComplexValue,
}

fn is_real(z: ComplexValue) -> bool {
    z.im == 0.0
}

fn conjugate(z: ComplexValue, w: ComplexValue) -> bool {
    z.im != 0.0 && (z - w.conj()).norm() <= 1e-14 * z.norm().max(1.0)
}

impl ContinuousDualHahnParams {
    /// Real parameters (any signs; the regime is checked where it matters).
    pub fn real(mu: f64, a: f64, b: f64) -> Result<Self> {
        Self::new(c64(mu, 0.0), c64(a, 0.0), c64(b, 0.0))
    }

    /// Parameters with at most one complex-conjugate pair, the third real.
    pub fn new(mu: ComplexValue, a: ComplexValue, b: ComplexValue) -> Result<Self> {
        let all = [mu, a, b];
        if all.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidParams("parameters must be finite".into()));
        }
        let complex = all.iter().filter(|z| !is_real(**z)).count();
        let ok = match complex {
            0 => true,
            2 => {
                (conjugate(mu, a) && is_real(b))
                    || (conjugate(mu, b) && is_real(a))
                    || (conjugate(a, b) && is_real(mu))
            }
            _ => false,
        };
        if !ok {
            return Err(Error::InvalidParams(
                "non-real parameters must form a single conjugate pair".into(),
            ));
        }
        Ok(ContinuousDualHahnParams { mu, a, b })
    }

    pub fn mu(&self) -> ComplexValue {
        self.mu
    }
    pub fn a(&self) -> ComplexValue {
        self.a
    }
    pub fn b(&self) -> ComplexValue {
        self.b
    }

    /// μ when it is real.
    pub fn mu_real(&self) -> Option<f64> {
        is_real(self.mu).then_some(self.mu.re)
    }

    pub fn regime(&self) -> DualHahnRegime {
        let positive = |z: ComplexValue| z.re > 0.0;
        if [self.mu, self.a, self.b].iter().all(|z| positive(*z)) {
            return DualHahnRegime::Continuous;
        }
        if is_real(self.mu) && self.mu.re < 0.0 {
            let (pa, pb) = (self.mu + self.a, self.mu + self.b);
            let real_pos = is_real(pa) && is_real(pb) && pa.re > 0.0 && pb.re > 0.0;
            let pair = conjugate(pa, pb) && pa.re > 0.0;
            let sum_ok = (self.a + self.b).re > 0.0;
            if (real_pos || pair) && sum_ok {
                return DualHahnRegime::Mixed;
            }
        }
        DualHahnRegime::Other
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscreteMeixnerParams {
    alpha: f64,
    beta: f64,
}

impl DiscreteMeixnerParams {
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        if !(alpha > 0.0) || !alpha.is_finite() {
            return Err(Error::InvalidParams(format!("alpha must be positive, got {alpha}")));
        }
        if !(beta > 0.0 && beta < 1.0) {
            return Err(Error::InvalidParams(format!("beta must lie in (0, 1), got {beta}")));
        }
        Ok(DiscreteMeixnerParams { alpha, beta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }
    pub fn beta(&self) -> f64 {
        self.beta
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiscreteDualHahnParams {
    n: usize,
    alpha: f64,
    beta: f64,
}

impl DiscreteDualHahnParams {
    pub fn new(n: usize, alpha: f64, beta: f64) -> Result<Self> {
        let big = -(n as f64);
        let above = alpha > -1.0 && beta > -1.0;
        let below = alpha < big && beta < big;
        if !(above || below) {
            return Err(Error::InvalidParams(format!(
                "dual Hahn needs alpha, beta > -1 or alpha, beta < -N (N = {n}), got ({alpha}, {beta})"
            )));
        }
        if below {
            // Pochhammer factors must not vanish inside the index range.
            let bad = |x: f64| x == x.round();
            if bad(alpha) || bad(beta) || bad(alpha + beta) {
                return Err(Error::InvalidParams(
                    "alpha, beta and alpha+beta must be non-integer below -N".into(),
                ));
            }
        }
        Ok(DiscreteDualHahnParams { n, alpha, beta })
    }

    pub fn size(&self) -> usize {
        self.n
    }
    pub fn alpha(&self) -> f64 {
        self.alpha
    }
    pub fn beta(&self) -> f64 {
        self.beta
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtendedJacobiParams {
    pub mu: f64,
    pub nu: f64,
    pub lambda: f64,
}

impl ExtendedJacobiParams {
    pub fn new(mu: f64, nu: f64, lambda: f64) -> Result<Self> {
        if !(mu > -1.0 && nu > -1.0) || !lambda.is_finite() {
            return Err(Error::InvalidParams(format!(
                "extended Jacobi needs mu, nu > -1, got ({mu}, {nu})"
            )));
        }
        Ok(ExtendedJacobiParams { mu, nu, lambda })
    }
}

/// One of the two continuous energy-polynomial classes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EnergyPolynomial {
    MeixnerPollaczek(MeixnerPollaczekParams),
    ContinuousDualHahn(ContinuousDualHahnParams),
}

impl From<MeixnerPollaczekParams> for EnergyPolynomial {
    fn from(p: MeixnerPollaczekParams) -> Self {
        EnergyPolynomial::MeixnerPollaczek(p)
    }
}

impl From<ContinuousDualHahnParams> for EnergyPolynomial {
    fn from(p: ContinuousDualHahnParams) -> Self {
        EnergyPolynomial::ContinuousDualHahn(p)
    }
}

impl EnergyPolynomial {
    /// Recursion variable for the physical argument y.
    pub fn variable(&self, y: f64) -> f64 {
        match self {
            EnergyPolynomial::MeixnerPollaczek(p) => y * p.theta.sin(),
            EnergyPolynomial::ContinuousDualHahn(_) => y * y,
        }
    }

    /// Lower end of the continuous support in y.
    pub fn support_lo(&self) -> f64 {
        match self {
            EnergyPolynomial::MeixnerPollaczek(_) => f64::NEG_INFINITY,
            EnergyPolynomial::ContinuousDualHahn(_) => 0.0,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn meixner_pollaczek_validation() {
        assert!(MeixnerPollaczekParams::new(1.0, PI / 2.0).is_ok());
        assert!(MeixnerPollaczekParams::new(0.0, 1.0).is_err());
        assert!(MeixnerPollaczekParams::new(1.0, 0.0).is_err());
        assert!(MeixnerPollaczekParams::new(1.0, PI).is_err());
        assert!(MeixnerPollaczekParams::new(1.0, 1e-9).is_err());
    }

    #[test]
    fn dual_hahn_regimes() {
        let p = ContinuousDualHahnParams::real(0.5, 0.5, 0.5).unwrap();
        assert_eq!(p.regime(), DualHahnRegime::Continuous);
        let m = ContinuousDualHahnParams::real(-0.4, 0.7, 0.6).unwrap();
        assert_eq!(m.regime(), DualHahnRegime::Mixed);
        let pair = ContinuousDualHahnParams::new(c64(0.4, 0.0), c64(0.8, 0.3), c64(0.8, -0.3))
            .unwrap();
        assert_eq!(pair.regime(), DualHahnRegime::Continuous);
        assert!(
            ContinuousDualHahnParams::new(c64(0.4, 0.1), c64(0.8, 0.3), c64(0.8, -0.3)).is_err()
        );
        let morse = ContinuousDualHahnParams::real(0.5, 0.5, -1.5).unwrap();
        assert_eq!(morse.regime(), DualHahnRegime::Other);
    }

    #[test]
    fn discrete_validation() {
        assert!(DiscreteMeixnerParams::new(2.0, 0.4).is_ok());
        assert!(DiscreteMeixnerParams::new(2.0, 1.0).is_err());
        assert!(DiscreteDualHahnParams::new(3, 0.0, 0.5).is_ok());
        assert!(DiscreteDualHahnParams::new(3, -3.5, -4.2).is_ok());
        assert!(DiscreteDualHahnParams::new(3, -2.0, 0.5).is_err());
        assert!(ExtendedJacobiParams::new(-1.5, 0.0, 1.0).is_err());
    }
}
