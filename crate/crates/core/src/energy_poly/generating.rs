use super::params::EnergyPolynomial;
use super::recursion::{eval_recursion, expect_real};
use crate::error::{Error, Result};
use crate::special::{c64, hyp2f1_series, ComplexValue};

/// Partial sum of the generating-function series next to its closed form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratingCheck {
    pub partial_sum: f64,
    pub closed_form: f64,
}

impl GeneratingCheck {
    pub fn difference(&self) -> f64 {
        (self.partial_sum - self.closed_form).abs()
    }
}

/// Σ_{n≤N} P̃_n t^n against the closed-form generating function, with the
/// non-orthonormal normalizations P̃_n = √((2μ)_n/n!)·P_n and
/// S̃_n = √((μ+a)_n(μ+b)_n/(n!(a+b)_n))·S_n.
pub fn generating_check(
    poly: &EnergyPolynomial,
    y: f64,
    t: f64,
    terms: usize,
) -> Result<GeneratingCheck> {
    if t.abs() > 0.9 {
        return Err(Error::Domain {
            x: t,
            what: "generating function check needs |t| <= 0.9".into(),
        });
    }
    let values = eval_recursion(poly, y, terms)?;
    let mut partial = 0.0;
    let mut scale = 1.0;
    let mut tn = 1.0;
    match poly {
        EnergyPolynomial::MeixnerPollaczek(p) => {
            let (mu, theta) = (p.mu(), p.theta());
            for (n, v) in values.iter().enumerate() {
                if n > 0 {
                    let nf = n as f64;
                    scale *= ((2.0 * mu + nf - 1.0) / nf).sqrt();
                    tn *= t;
                }
                partial += scale * v * tn;
            }
            let e = ComplexValue::from_polar(1.0, theta);
            let one = c64(1.0, 0.0);
            let closed = ((one - e * t).ln() * c64(-mu, y)).exp()
                * ((one - e.conj() * t).ln() * c64(-mu, -y)).exp();
            Ok(GeneratingCheck {
                partial_sum: partial,
                closed_form: expect_real(closed, 1.0)?,
            })
        }
        EnergyPolynomial::ContinuousDualHahn(p) => {
            let (mu, a, b) = (p.mu(), p.a(), p.b());
            let mut ratio = c64(1.0, 0.0);
            for (n, v) in values.iter().enumerate() {
                if n > 0 {
                    let k = (n - 1) as f64;
                    ratio = ratio * (mu + a + k) * (mu + b + k) / ((a + b + k) * (k + 1.0));
                    tn *= t;
                }
                let r = expect_real(ratio, 0.0)?;
                partial += r.abs().sqrt() * v * tn;
            }
            let iy = c64(0.0, y);
            let pre = (c64(1.0 - t, 0.0).ln() * (iy - mu)).exp();
            let f = hyp2f1_series(a + iy, b + iy, a + b, c64(t, 0.0))?;
            Ok(GeneratingCheck {
                partial_sum: partial,
                closed_form: expect_real(pre * f, 1.0)?,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::energy_poly::{ContinuousDualHahnParams, MeixnerPollaczekParams};
    use std::f64::consts::FRAC_PI_2;

    #[test]
    fn zero_argument() {
        let mp: EnergyPolynomial = MeixnerPollaczekParams::new(1.0, FRAC_PI_2).unwrap().into();
        let g = generating_check(&mp, 0.3, 0.0, 5).unwrap();
        assert_eq!(g.partial_sum, 1.0);
        assert!((g.closed_form - 1.0).abs() < 1e-15);
    }

    #[test]
    fn half_argument() {
        let mp: EnergyPolynomial = MeixnerPollaczekParams::new(1.0, FRAC_PI_2).unwrap().into();
        assert!(generating_check(&mp, 0.0, 0.5, 60).unwrap().difference() < 1e-10);
        let cdh: EnergyPolynomial = ContinuousDualHahnParams::real(0.5, 0.5, 0.5).unwrap().into();
        assert!(generating_check(&cdh, 1.0, 0.5, 80).unwrap().difference() < 1e-8);
    }

    #[test]
    fn rejects_large_t() {
        let mp: EnergyPolynomial = MeixnerPollaczekParams::new(1.0, FRAC_PI_2).unwrap().into();
        assert!(generating_check(&mp, 0.0, 0.95, 10).is_err());
    }
}
