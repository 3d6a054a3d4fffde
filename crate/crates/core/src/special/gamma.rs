use std::f64::consts::PI;

use super::{nonpositive_integer, ComplexValue};
use crate::error::{Error, Result};

/// Stirling coefficients B_{2k} / (2k (2k - 1)), k = 1..=10.
const STIRLING: [f64; 10] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360_360.0,
    1.0 / 156.0,
    -3617.0 / 122_400.0,
    43_867.0 / 244_188.0,
    -174_611.0 / 125_400.0,
];

/// Real part beyond which the Stirling series is used directly.
const STIRLING_MIN_RE: f64 = 12.0;

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

/// Γ(z) in polar form; the argument is the imaginary part of the analytic
/// log-gamma, so it varies continuously along paths avoiding the negative
/// real axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaPolar {
    pub magnitude: f64,
    pub argument: f64,
}

impl GammaPolar {
    pub fn to_complex(self) -> ComplexValue {
        ComplexValue::from_polar(self.magnitude, self.argument)
    }
}

fn stirling(z: ComplexValue) -> ComplexValue {
    let inv = z.inv();
    let w = inv * inv;
    let mut series = ComplexValue::new(STIRLING[STIRLING.len() - 1], 0.0);
    for &c in STIRLING.iter().rev().skip(1) {
        series = series * w + c;
    }
    (z - 0.5) * z.ln() - z + HALF_LN_2PI + series * inv
}

fn principal_ln(z: ComplexValue) -> ComplexValue {
    // Points on the negative real axis are taken from the upper side.
    let z = if z.im == 0.0 {
        ComplexValue::new(z.re, 0.0)
    } else {
        z
    };
    z.ln()
}

/// Analytic log Γ(z) on the plane cut along the negative real axis.
///
/// Computed with the Stirling series after shifting the argument upward by
/// the recurrence Γ(z+1) = zΓ(z); the shift keeps the branch consistent with
/// the analytic continuation from the positive real axis.
pub fn log_gamma_complex(z: ComplexValue) -> Result<ComplexValue> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::InvalidParams(format!("non-finite argument {z}")));
    }
    if nonpositive_integer(z).is_some() {
        return Err(Error::GammaPole { re: z.re, im: z.im });
    }
    if z.re >= STIRLING_MIN_RE {
        return Ok(stirling(z));
    }
    let shift = (STIRLING_MIN_RE - z.re).ceil() as usize;
    let mut correction = ComplexValue::new(0.0, 0.0);
    for k in 0..shift {
        correction += principal_ln(z + k as f64);
    }
    Ok(stirling(z + shift as f64) - correction)
}

/// |Γ(z)| and arg Γ(z).
pub fn gamma_abs_arg(z: ComplexValue) -> Result<GammaPolar> {
    let lg = log_gamma_complex(z)?;
    Ok(GammaPolar {
        magnitude: lg.re.exp(),
        argument: lg.im,
    })
}

/// 1/Γ(z); zero at the poles of Γ.
pub fn recip_gamma(z: ComplexValue) -> ComplexValue {
    if z.im == 0.0 {
        return ComplexValue::new(recip_gamma_real(z.re), 0.0);
    }
    match log_gamma_complex(z) {
        Ok(lg) => (-lg).exp(),
        Err(_) => ComplexValue::new(0.0, 0.0),
    }
}

/// sin(πx) with exact zeros at the integers.
pub fn sin_pi(x: f64) -> f64 {
    let n = x.round();
    let r = x - n;
    let s = (PI * r).sin();
    if (n as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

/// ln|Γ(x)| for real x that is not a pole.
pub fn ln_gamma_real(x: f64) -> Result<f64> {
    if x > 0.0 {
        return Ok(log_gamma_complex(ComplexValue::new(x, 0.0))?.re);
    }
    if x == x.round() {
        return Err(Error::GammaPole { re: x, im: 0.0 });
    }
    // Reflection: Γ(x)Γ(1-x) = π / sin(πx).
    let lg1 = log_gamma_complex(ComplexValue::new(1.0 - x, 0.0))?.re;
    Ok(PI.ln() - sin_pi(x).abs().ln() - lg1)
}

/// 1/Γ(x) for real x, accurate close to the poles.
pub fn recip_gamma_real(x: f64) -> f64 {
    if x > 0.0 {
        return (-log_gamma_complex(ComplexValue::new(x, 0.0))
            .map(|l| l.re)
            .unwrap_or(f64::INFINITY))
        .exp();
    }
    if x == x.round() {
        return 0.0;
    }
    let lg1 = log_gamma_complex(ComplexValue::new(1.0 - x, 0.0))
        .map(|l| l.re)
        .unwrap_or(f64::INFINITY);
    sin_pi(x) * lg1.exp() / PI
}

/// Rising factorial (z)_n = z (z+1) ... (z+n-1).
pub fn pochhammer(z: ComplexValue, n: usize) -> ComplexValue {
    if n <= 64 || nonpositive_integer(z).is_some() {
        let mut p = ComplexValue::new(1.0, 0.0);
        for k in 0..n {
            p *= z + k as f64;
        }
        return p;
    }
    match (log_gamma_complex(z + n as f64), log_gamma_complex(z)) {
        (Ok(a), Ok(b)) => (a - b).exp(),
        _ => {
            let mut p = ComplexValue::new(1.0, 0.0);
            for k in 0..n {
                p *= z + k as f64;
            }
            p
        }
    }
}

/// Real rising factorial by direct product.
pub fn pochhammer_real(x: f64, n: usize) -> f64 {
    (0..n).fold(1.0, |p, k| p * (x + k as f64))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::c64;

    fn rel(a: ComplexValue, b: ComplexValue) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn integer_arguments() {
        assert!(log_gamma_complex(c64(1.0, 0.0)).unwrap().norm() < 1e-13);
        let l5 = log_gamma_complex(c64(5.0, 0.0)).unwrap();
        assert!((l5.re - 24f64.ln()).abs() < 1e-13);
        assert_eq!(l5.im, 0.0);
        let g2 = gamma_abs_arg(c64(2.0, 0.0)).unwrap();
        assert!((g2.magnitude - 1.0).abs() < 1e-13 && g2.argument == 0.0);
    }

    #[test]
    fn half_integer_via_reflection() {
        let g = gamma_abs_arg(c64(0.5, 0.0)).unwrap();
        assert!((g.magnitude - PI.sqrt()).abs() < 1e-14);
        assert_eq!(g.argument, 0.0);
    }

    #[test]
    fn one_plus_i_matches_high_precision_value() {
        // Γ(1+i) = 0.49801566811835604271 - 0.15494982830181068512 i
        let exact = c64(0.498_015_668_118_356_04, -0.154_949_828_301_810_685);
        let g = gamma_abs_arg(c64(1.0, 1.0)).unwrap();
        assert!(rel(g.to_complex(), exact) < 1e-14);
        assert!((g.argument - (-0.301_640_320_467_533_2)).abs() < 1e-14);
        let sq = g.magnitude * g.magnitude;
        assert!((sq - PI / PI.sinh()).abs() < 1e-14);
    }

    #[test]
    fn poles_are_errors() {
        for z in [0.0, -1.0, -7.0] {
            assert!(matches!(
                log_gamma_complex(c64(z, 0.0)),
                Err(Error::GammaPole { .. })
            ));
        }
        assert_eq!(recip_gamma_real(-3.0), 0.0);
        assert_eq!(recip_gamma(c64(0.0, 0.0)), c64(0.0, 0.0));
    }

    #[test]
    fn negative_real_arguments_carry_sign_in_argument() {
        // Γ(-0.5) = -2√π
        let g = gamma_abs_arg(c64(-0.5, 0.0)).unwrap();
        assert!((g.magnitude - 2.0 * PI.sqrt()).abs() < 1e-13);
        assert!((g.argument.cos() + 1.0).abs() < 1e-15);
        assert!((recip_gamma_real(-0.5) + 0.5 / PI.sqrt()).abs() < 1e-15);
        assert!((ln_gamma_real(-2.5).unwrap() - (8.0 * PI.sqrt() / 15.0).ln()).abs() < 1e-14);
    }

    #[test]
    fn recip_gamma_near_pole_is_linear() {
        // 1/Γ(-n + d) ~ (-1)^n n! d
        let d = 2f64.powi(-30);
        let v = recip_gamma_real(-2.0 + d);
        let exact = 1.862_645_147_630_181_38e-9;
        assert!((v - exact).abs() < 1e-13 * exact, "{v}");
    }

    #[test]
    fn pochhammer_products() {
        assert_eq!(pochhammer(c64(3.7, 1.0), 0), c64(1.0, 0.0));
        assert_eq!(pochhammer(c64(2.0, 0.0), 3), c64(24.0, 0.0));
        let mut f = 1.0;
        for n in 1..15 {
            f *= n as f64;
            assert!((pochhammer(c64(1.0, 0.0), n).re - f).abs() <= 1e-15 * f);
        }
        let z = c64(0.3, 2.0);
        let a = pochhammer(z, 80);
        let direct = (0..80).fold(c64(1.0, 0.0), |p, k| p * (z + k as f64));
        assert!(rel(a, direct) < 1e-12);
        assert_eq!(pochhammer(c64(-3.0, 0.0), 100), c64(0.0, 0.0));
    }

    #[test]
    fn continuity_of_argument_along_imaginary_direction() {
        let mut prev = gamma_abs_arg(c64(0.5, 0.01)).unwrap().argument;
        for i in 2..3000 {
            let y = 0.01 * i as f64;
            let a = gamma_abs_arg(c64(0.5, y)).unwrap().argument;
            assert!((a - prev).abs() < 0.1, "jump at y = {y}");
            prev = a;
        }
    }
}
