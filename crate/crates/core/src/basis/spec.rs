use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::numerics::Interval;
use crate::special::ln_gamma_real;

/// Classical polynomial family of an L² basis with its exponents.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BasisFamily {
    /// e^{-z²/2} H_n(z), z = λx; with `sigma` ≠ 0 the generalized form
    /// |z|^σ e^{-z²/2} H_n^σ(z).
    Hermite { sigma: f64 },
    /// s^{(ν-σ)/2} e^{-s/2} L_n^ν(s).
    Laguerre { nu: f64, sigma: f64 },
    /// (1-y)^{(α-σ)/2} (1+y)^{(β-τ)/2} P_n^{(α,β)}(y).
    Jacobi {
        alpha: f64,
        beta: f64,
        sigma: f64,
        tau: f64,
    },
}

/// Coordinate map from x to the polynomial variable.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CoordinateMap {
    /// z = λx (Hermite) or s = λx (Laguerre).
    Linear,
    /// s = (λx)^τ, x ≥ 0.
    Power { tau: f64 },
    /// s = e^{-λx}, x real.
    Exponential,
    /// y = tanh(λx).
    Tanh,
    /// y = 1 - 2e^{-λx}, x ≥ 0.
    OneMinusExp,
    /// y = sin(πx/a), |x| ≤ a/2.
    Sine { a: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BasisSpec {
    pub family: BasisFamily,
    pub lambda: f64,
    pub map: CoordinateMap,
}

impl BasisSpec {
    pub fn new(family: BasisFamily, lambda: f64, map: CoordinateMap) -> Result<Self> {
        if !(lambda > 0.0) || !lambda.is_finite() {
            return Err(Error::InvalidParams(format!("lambda must be positive, got {lambda}")));
        }
        let map_ok = match family {
            BasisFamily::Hermite { sigma } => {
                if !(sigma > -0.5) {
                    return Err(Error::InvalidParams(format!(
                        "generalized Hermite needs sigma > -1/2, got {sigma}"
                    )));
                }
                matches!(map, CoordinateMap::Linear)
            }
            BasisFamily::Laguerre { nu, .. } => {
                if !(nu > -1.0) {
                    return Err(Error::InvalidParams(format!("Laguerre needs nu > -1, got {nu}")));
                }
                matches!(
                    map,
                    CoordinateMap::Linear | CoordinateMap::Power { .. } | CoordinateMap::Exponential
                )
            }
            BasisFamily::Jacobi { alpha, beta, .. } => {
                if !(alpha > -1.0 && beta > -1.0) {
                    return Err(Error::InvalidParams(format!(
                        "Jacobi needs alpha, beta > -1, got ({alpha}, {beta})"
                    )));
                }
                matches!(
                    map,
                    CoordinateMap::Tanh | CoordinateMap::OneMinusExp | CoordinateMap::Sine { .. }
                )
            }
        };
        if !map_ok {
            return Err(Error::InvalidParams(format!(
                "coordinate map {map:?} does not fit the {family:?} family"
            )));
        }
        match map {
            CoordinateMap::Power { tau } if !(tau > 0.0) => {
                return Err(Error::InvalidParams(format!("power map needs tau > 0, got {tau}")));
            }
            CoordinateMap::Sine { a } if !(a > 0.0) => {
                return Err(Error::InvalidParams(format!("segment length must be positive, got {a}")));
            }
            _ => {}
        }
        Ok(BasisSpec { family, lambda, map })
    }

    pub fn hermite(lambda: f64) -> Result<Self> {
        Self::new(BasisFamily::Hermite { sigma: 0.0 }, lambda, CoordinateMap::Linear)
    }

    pub fn laguerre(nu: f64, lambda: f64) -> Result<Self> {
        Self::new(BasisFamily::Laguerre { nu, sigma: 0.0 }, lambda, CoordinateMap::Linear)
    }

    /// Configuration-space domain of x.
    pub fn domain(&self) -> Interval {
        match self.map {
            CoordinateMap::Linear => match self.family {
                BasisFamily::Hermite { .. } => Interval::whole_line(),
                _ => Interval::half_line(0.0),
            },
            CoordinateMap::Power { .. } | CoordinateMap::OneMinusExp => Interval::half_line(0.0),
            CoordinateMap::Exponential | CoordinateMap::Tanh => Interval::whole_line(),
            CoordinateMap::Sine { a } => Interval {
                lo: -0.5 * a,
                hi: 0.5 * a,
            },
        }
    }

    /// Polynomial variable at x and |d(variable)/dx| / λ.
    fn variable(&self, x: f64) -> Result<(f64, f64)> {
        let dom = self.domain();
        if !(x >= dom.lo && x <= dom.hi) || x.is_nan() {
            return Err(Error::Domain {
                x,
                what: format!("outside the basis domain [{}, {}]", dom.lo, dom.hi),
            });
        }
        let l = self.lambda;
        Ok(match self.map {
            CoordinateMap::Linear => (l * x, 1.0),
            CoordinateMap::Power { tau } => {
                let s = (l * x).powf(tau);
                let d = if x == 0.0 {
                    if tau == 1.0 {
                        1.0
                    } else if tau > 1.0 {
                        0.0
                    } else {
                        f64::INFINITY
                    }
                } else {
                    tau * (l * x).powf(tau - 1.0)
                };
                (s, d)
            }
            CoordinateMap::Exponential => {
                let s = (-l * x).exp();
                (s, s)
            }
            CoordinateMap::Tanh => {
                let y = (l * x).tanh();
                (y, 1.0 - y * y)
            }
            CoordinateMap::OneMinusExp => {
                let e = (-l * x).exp();
                (1.0 - 2.0 * e, 2.0 * e)
            }
            CoordinateMap::Sine { a } => {
                let u = PI * x / a;
                (u.sin(), PI / (a * l) * u.cos())
            }
        })
    }

    /// φ_0..φ_{n_max} at x.
    pub fn values(&self, n_max: usize, x: f64) -> Result<Vec<f64>> {
        let (v, _) = self.variable(x)?;
        if v.is_infinite() {
            return Ok(vec![0.0; n_max + 1]);
        }
        Ok(self.raw_values(n_max, v))
    }

    /// Conjugate elements φ̄_0..φ̄_{n_max} at x.
    pub fn conjugate_values(&self, n_max: usize, x: f64) -> Result<Vec<f64>> {
        let (v, d) = self.variable(x)?;
        if v.is_infinite() {
            return Ok(vec![0.0; n_max + 1]);
        }
        let factor = d * match self.family {
            BasisFamily::Hermite { .. } => 1.0,
            BasisFamily::Laguerre { sigma, .. } => v.powf(sigma),
            BasisFamily::Jacobi { sigma, tau, .. } => (1.0 - v).powf(sigma) * (1.0 + v).powf(tau),
        };
        let mut out = self.raw_values(n_max, v);
        if factor.is_finite() {
            out.iter_mut().for_each(|p| *p *= factor);
        } else {
            // Singular map derivative at an endpoint where the element vanishes.
            out.iter_mut().for_each(|p| *p = if *p == 0.0 { 0.0 } else { *p * factor });
        }
        Ok(out)
    }

    fn raw_values(&self, n_max: usize, v: f64) -> Vec<f64> {
        match self.family {
            BasisFamily::Hermite { sigma } if sigma == 0.0 => hermite_functions(n_max, v),
            BasisFamily::Hermite { sigma } => generalized_hermite_functions(n_max, sigma, v),
            BasisFamily::Laguerre { nu, sigma } => {
                laguerre_functions(n_max, nu, 0.5 * (nu - sigma), v)
            }
            BasisFamily::Jacobi {
                alpha,
                beta,
                sigma,
                tau,
            } => jacobi_functions(n_max, alpha, beta, 0.5 * (alpha - sigma), 0.5 * (beta - tau), v),
        }
    }
}

/// φ_n^λ(x).
pub fn basis_value(spec: &BasisSpec, n: usize, x: f64) -> Result<f64> {
    Ok(spec.values(n, x)?[n])
}

/// φ̄_n^λ(x).
pub fn basis_conjugate_value(spec: &BasisSpec, n: usize, x: f64) -> Result<f64> {
    Ok(spec.conjugate_values(n, x)?[n])
}

/// Orthonormal Hermite functions (√π 2ⁿ n!)^{-1/2} e^{-z²/2} H_n(z).
fn hermite_functions(n_max: usize, z: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(PI.powf(-0.25) * (-0.5 * z * z).exp());
    if n_max > 0 {
        out.push(2f64.sqrt() * z * out[0]);
    }
    for n in 1..n_max {
        let nf = n as f64;
        let next = (2.0 / (nf + 1.0)).sqrt() * z * out[n] - (nf / (nf + 1.0)).sqrt() * out[n - 1];
        out.push(next);
    }
    out
}

/// Orthonormal Laguerre polynomials √(n!/Γ(n+ν+1)) L_n^ν(s), each multiplied
/// by s^power e^{-s/2}. The prefactor is folded into the seed so large
/// degrees do not overflow.
fn laguerre_functions(n_max: usize, nu: f64, power: f64, s: f64) -> Vec<f64> {
    let pre = if s == 0.0 {
        if power == 0.0 {
            1.0
        } else if power > 0.0 {
            0.0
        } else {
            f64::INFINITY
        }
    } else {
        (power * s.ln() - 0.5 * s).exp()
    };
    let seed = pre * (-0.5 * ln_gamma_real(nu + 1.0).unwrap_or(f64::NAN)).exp();
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(seed);
    if n_max > 0 {
        out.push((nu + 1.0 - s) * seed / (nu + 1.0).sqrt());
    }
    for n in 1..n_max {
        let nf = n as f64;
        let next = ((2.0 * nf + nu + 1.0 - s) * out[n] - (nf * (nf + nu)).sqrt() * out[n - 1])
            / ((nf + 1.0) * (nf + nu + 1.0)).sqrt();
        out.push(next);
    }
    out
}

/// |z|^σ e^{-z²/2} times orthonormal generalized Hermite polynomials,
/// through the Laguerre connection.
fn generalized_hermite_functions(n_max: usize, sigma: f64, z: f64) -> Vec<f64> {
    let t = z * z;
    let half = n_max / 2;
    let even = laguerre_functions(half, sigma - 0.5, 0.5 * sigma, t);
    let odd = laguerre_functions(half, sigma + 0.5, 0.5 * sigma, t);
    (0..=n_max)
        .map(|n| {
            if n % 2 == 0 {
                even[n / 2]
            } else {
                z * odd[n / 2]
            }
        })
        .collect()
}

/// Orthonormal Jacobi polynomials for the weight (1-y)^α (1+y)^β, multiplied
/// by (1-y)^p (1+y)^q.
fn jacobi_functions(n_max: usize, alpha: f64, beta: f64, p: f64, q: f64, y: f64) -> Vec<f64> {
    let s = alpha + beta;
    let ln_mass = (s + 1.0) * 2f64.ln() + ln_gamma_real(alpha + 1.0).unwrap_or(f64::NAN)
        + ln_gamma_real(beta + 1.0).unwrap_or(f64::NAN)
        - ln_gamma_real(s + 2.0).unwrap_or(f64::NAN);
    let power = |base: f64, e: f64| -> f64 {
        if base == 0.0 {
            if e == 0.0 {
                1.0
            } else if e > 0.0 {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            base.powf(e)
        }
    };
    let pre = power(1.0 - y, p) * power(1.0 + y, q);
    let coeff = |n: usize| -> (f64, f64) {
        let nf = n as f64;
        let a = if n == 0 {
            (beta - alpha) / (s + 2.0)
        } else {
            (beta * beta - alpha * alpha) / ((2.0 * nf + s) * (2.0 * nf + s + 2.0))
        };
        let num = (nf + 1.0) * (nf + alpha + 1.0) * (nf + beta + 1.0) * (nf + s + 1.0);
        let den = (2.0 * nf + s + 1.0) * (2.0 * nf + s + 3.0);
        let b = if n == 0 {
            2.0 / (s + 2.0) * ((alpha + 1.0) * (beta + 1.0) / (s + 3.0)).sqrt()
        } else {
            2.0 / (2.0 * nf + s + 2.0) * (num / den).sqrt()
        };
        (a, b)
    };
    let mut out = Vec::with_capacity(n_max + 1);
    out.push(pre * (-0.5 * ln_mass).exp());
    let mut b_prev = 0.0;
    for n in 0..n_max {
        let (a, b) = coeff(n);
        let lower = if n == 0 { 0.0 } else { b_prev * out[n - 1] };
        out.push(((y - a) * out[n] - lower) / b);
        b_prev = b;
    }
    out
}
