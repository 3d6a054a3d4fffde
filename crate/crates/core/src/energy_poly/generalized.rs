use super::params::{ContinuousDualHahnParams, DualHahnRegime, EnergyPolynomial};
use super::recursion::{eval_at_variable, expect_real};
use super::weight::weight;
use crate::error::{Error, Result};
use crate::numerics::{Integrator, Interval};
use crate::special::{c64, log_gamma_complex, pochhammer};

/// Pieces of the mixed continuous/discrete orthogonality sum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralizedOrthogonality {
    pub integral: f64,
    pub discrete: f64,
}

impl GeneralizedOrthogonality {
    /// Integral minus the discrete correction; δ_{n,n'} when the relation holds.
    pub fn total(&self) -> f64 {
        self.integral - self.discrete
    }
}

/// Continuous integral of ρ S_n S_n' over y > 0 minus the finite sum over the
/// discrete points y² = -(m+μ)², m = 0..=floor(-μ).
pub fn generalized_orthogonality(
    params: &ContinuousDualHahnParams,
    n: usize,
    n2: usize,
) -> Result<GeneralizedOrthogonality> {
    let poly = EnergyPolynomial::from(*params);
    let regime = params.regime();
    if regime == DualHahnRegime::Other {
        return Err(Error::InvalidParams(
            "generalized orthogonality needs the continuous or mixed regime".into(),
        ));
    }
    let top = n.max(n2);
    let integrand = |y: f64| -> f64 {
        if y <= 0.0 {
            return 0.0;
        }
        let w = match weight(&poly, y) {
            Ok(w) => w,
            Err(_) => return f64::NAN,
        };
        if w == 0.0 {
            return 0.0;
        }
        match eval_at_variable(&poly, y * y, top) {
            Ok(v) => w * v[n] * v[n2],
            Err(_) => f64::NAN,
        }
    };
    let integrator = Integrator {
        tol: 1e-11,
        ..Integrator::default()
    };
    let integral = integrator.integrate(integrand, Interval::half_line(0.0))?.value;

    let discrete = match params.mu_real() {
        Some(mu) if regime == DualHahnRegime::Mixed => {
            discrete_part(params, &poly, mu, n, n2, top)?
        }
        _ => 0.0,
    };
    Ok(GeneralizedOrthogonality { integral, discrete })
}

fn discrete_part(
    params: &ContinuousDualHahnParams,
    poly: &EnergyPolynomial,
    mu: f64,
    n: usize,
    n2: usize,
    top: usize,
) -> Result<f64> {
    let (a, b) = (params.a(), params.b());
    let muc = c64(mu, 0.0);
    let one = c64(1.0, 0.0);
    let ln_c = log_gamma_complex(a - muc)? + log_gamma_complex(b - muc)?
        - log_gamma_complex(a + b)?
        - log_gamma_complex(one - muc * 2.0)?;
    let scale = expect_real(ln_c.exp() * 2.0, 1.0)?;
    let count = (-mu).floor() as usize;
    let mut sum = 0.0;
    for m in 0..=count {
        let mf = m as f64;
        let ratio = pochhammer(muc + a, m) * pochhammer(muc + b, m) * pochhammer(muc * 2.0, m)
            / (pochhammer(muc - a + 1.0, m) * pochhammer(muc - b + 1.0, m) * pochhammer(one, m));
        let ratio = expect_real(ratio, 1.0)?;
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        let s = eval_at_variable(poly, -(mf + mu) * (mf + mu), top)?;
        sum += sign * (mf + mu) * ratio * s[n] * s[n2];
    }
    Ok(scale * sum)
}
