use super::params::EnergyPolynomial;
use super::recursion::expect_real;
use crate::error::Result;
use crate::special::{c64, pochhammer, terminating_pfq, ComplexValue};

/// Orthonormal polynomial of degree n from its terminating hypergeometric
/// representation. Independent of the recursion; used as its oracle.
pub fn eval_hypergeometric(poly: &EnergyPolynomial, y: f64, n: usize) -> Result<f64> {
    let minus_n = c64(-(n as f64), 0.0);
    match poly {
        EnergyPolynomial::MeixnerPollaczek(p) => {
            let (mu, theta) = (p.mu(), p.theta());
            let nf = n as f64;
            let pref = (0..n)
                .map(|k| (2.0 * mu + k as f64) / (k as f64 + 1.0))
                .product::<f64>()
                .sqrt();
            let arg = c64(1.0, 0.0) - ComplexValue::from_polar(1.0, -2.0 * theta);
            let f = terminating_pfq(&[minus_n, c64(mu, y)], &[c64(2.0 * mu, 0.0)], arg)?;
            let v = ComplexValue::from_polar(pref, nf * theta) * f;
            expect_real(v, pref * 1e-2)
        }
        EnergyPolynomial::ContinuousDualHahn(p) => {
            let (mu, a, b) = (p.mu(), p.a(), p.b());
            let ratio = pochhammer(mu + a, n) * pochhammer(mu + b, n)
                / (pochhammer(c64(1.0, 0.0), n) * pochhammer(a + b, n));
            let ratio = expect_real(ratio, 0.0)?;
            let pref = ratio.abs().sqrt();
            let iy = c64(0.0, y);
            let f = terminating_pfq(&[minus_n, mu + iy, mu - iy], &[mu + a, mu + b], c64(1.0, 0.0))?;
            expect_real(f * pref, pref * 1e-2)
        }
    }
}
