use std::f64::consts::PI;

use super::params::{DualHahnRegime, EnergyPolynomial};
use crate::error::{Error, Result};
use crate::special::{c64, ln_gamma_real, log_gamma_complex};

/// Natural log of the normalized weight; −∞ where the weight vanishes.
pub fn ln_weight(poly: &EnergyPolynomial, y: f64) -> Result<f64> {
    match poly {
        EnergyPolynomial::MeixnerPollaczek(p) => {
            let (mu, theta) = (p.mu(), p.theta());
            let lg = log_gamma_complex(c64(mu, y))?;
            Ok(2.0 * mu * (2.0 * theta.sin()).ln() + (2.0 * theta - PI) * y + 2.0 * lg.re
                - (2.0 * PI).ln()
                - ln_gamma_real(2.0 * mu)?)
        }
        EnergyPolynomial::ContinuousDualHahn(p) => {
            if p.regime() == DualHahnRegime::Other {
                return Err(Error::InvalidParams(
                    "dual Hahn weight needs the continuous or mixed parameter regime".into(),
                ));
            }
            if y < 0.0 {
                return Err(Error::Domain {
                    x: y,
                    what: "dual Hahn weight is supported on y > 0".into(),
                });
            }
            if y == 0.0 {
                return Ok(f64::NEG_INFINITY);
            }
            let iy = c64(0.0, y);
            let (mu, a, b) = (p.mu(), p.a(), p.b());
            let top = log_gamma_complex(mu + iy)? + log_gamma_complex(a + iy)?
                + log_gamma_complex(b + iy)?
                - log_gamma_complex(iy * 2.0)?;
            let norm = log_gamma_complex(mu + a)? + log_gamma_complex(mu + b)?
                + log_gamma_complex(a + b)?;
            // The normalisation product is real and positive in both regimes.
            if norm.im.abs() > 1e-9 {
                return Err(Error::NotReal {
                    re: norm.re,
                    im: norm.im,
                });
            }
            Ok(2.0 * top.re - (2.0 * PI).ln() - norm.re)
        }
    }
}

/// Normalized weight ρ(y).
pub fn weight(poly: &EnergyPolynomial, y: f64) -> Result<f64> {
    Ok(ln_weight(poly, y)?.exp())
}
