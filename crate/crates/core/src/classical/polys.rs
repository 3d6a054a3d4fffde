use crate::error::{Error, Result};

/// Classical polynomial family with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClassicalFamily {
    Hermite,
    /// C_n^μ, μ > −½, μ ≠ 0.
    Gegenbauer { mu: f64 },
    /// P_n^{(α,β)}, α, β > −1.
    Jacobi { alpha: f64, beta: f64 },
    /// L_n^ν, ν > −1.
    Laguerre { nu: f64 },
    /// H_n^μ, μ > −½.
    GeneralizedHermite { mu: f64 },
}

fn on_segment(y: f64) -> Result<()> {
    if !(-1.0..=1.0).contains(&y) {
        return Err(Error::Domain {
            x: y,
            what: "argument must lie in [-1, 1]".into(),
        });
    }
    Ok(())
}

/// Standard-normalization value by forward recurrence.
pub fn classical_poly_eval(family: ClassicalFamily, n: usize, y: f64) -> Result<f64> {
    if !y.is_finite() {
        return Err(Error::Domain {
            x: y,
            what: "argument must be finite".into(),
        });
    }
    match family {
        ClassicalFamily::Hermite => Ok(hermite(n, y)),
        ClassicalFamily::Gegenbauer { mu } => {
            if !(mu > -0.5) || mu == 0.0 {
                return Err(Error::InvalidParams(format!("Gegenbauer needs mu > -1/2, mu != 0, got {mu}")));
            }
            on_segment(y)?;
            Ok(gegenbauer(n, mu, y))
        }
        ClassicalFamily::Jacobi { alpha, beta } => {
            if !(alpha > -1.0 && beta > -1.0) {
                return Err(Error::InvalidParams(format!(
                    "Jacobi needs alpha, beta > -1, got ({alpha}, {beta})"
                )));
            }
            on_segment(y)?;
            Ok(jacobi(n, alpha, beta, y))
        }
        ClassicalFamily::Laguerre { nu } => {
            if !(nu > -1.0) {
                return Err(Error::InvalidParams(format!("Laguerre needs nu > -1, got {nu}")));
            }
            if y < 0.0 {
                return Err(Error::Domain {
                    x: y,
                    what: "Laguerre argument must be non-negative".into(),
                });
            }
            Ok(laguerre(n, nu, y))
        }
        ClassicalFamily::GeneralizedHermite { mu } => {
            if !(mu > -0.5) {
                return Err(Error::InvalidParams(format!("generalized Hermite needs mu > -1/2, got {mu}")));
            }
            Ok(generalized_hermite(n, mu, y))
        }
    }
}

pub(crate) fn hermite(n: usize, y: f64) -> f64 {
    let (mut p0, mut p1) = (1.0, 2.0 * y);
    if n == 0 {
        return p0;
    }
    for k in 1..n {
        let p2 = 2.0 * y * p1 - 2.0 * k as f64 * p0;
        p0 = p1;
        p1 = p2;
    }
    p1
}

pub(crate) fn gegenbauer(n: usize, mu: f64, y: f64) -> f64 {
    let (mut p0, mut p1) = (1.0, 2.0 * mu * y);
    if n == 0 {
        return p0;
    }
    for k in 1..n {
        let kf = k as f64;
        let p2 = (2.0 * (kf + mu) * y * p1 - (kf + 2.0 * mu - 1.0) * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    p1
}

pub(crate) fn jacobi(n: usize, a: f64, b: f64, y: f64) -> f64 {
    let (mut p0, mut p1) = (1.0, 0.5 * (a - b) + 0.5 * (a + b + 2.0) * y);
    if n == 0 {
        return p0;
    }
    for k in 1..n {
        let kf = k as f64;
        let s = 2.0 * kf + a + b;
        let lead = 2.0 * (kf + 1.0) * (kf + a + b + 1.0) * s;
        let mid = (s + 1.0) * ((s + 2.0) * s * y + a * a - b * b);
        let back = 2.0 * (kf + a) * (kf + b) * (s + 2.0);
        let p2 = (mid * p1 - back * p0) / lead;
        p0 = p1;
        p1 = p2;
    }
    p1
}

pub(crate) fn laguerre(n: usize, nu: f64, y: f64) -> f64 {
    let (mut p0, mut p1) = (1.0, 1.0 + nu - y);
    if n == 0 {
        return p0;
    }
    for k in 1..n {
        let kf = k as f64;
        let p2 = ((2.0 * kf + nu + 1.0 - y) * p1 - (kf + nu) * p0) / (kf + 1.0);
        p0 = p1;
        p1 = p2;
    }
    p1
}

/// H_{2m}^μ = (−1)^m 2^{2m} m! L_m^{μ−½}(y²), H_{2m+1}^μ = (−1)^m 2^{2m+1} m! y L_m^{μ+½}(y²).
pub(crate) fn generalized_hermite(n: usize, mu: f64, y: f64) -> f64 {
    let m = n / 2;
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    let fact: f64 = (1..=m).map(|k| k as f64).product();
    let scale = sign * 4f64.powi(m as i32) * fact;
    if n.is_multiple_of(2) {
        scale * laguerre(m, mu - 0.5, y * y)
    } else {
        2.0 * scale * y * laguerre(m, mu + 0.5, y * y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_orders() {
        assert_eq!(classical_poly_eval(ClassicalFamily::Hermite, 0, 0.3).unwrap(), 1.0);
        let c1 = classical_poly_eval(ClassicalFamily::Gegenbauer { mu: 1.5 }, 1, 0.4).unwrap();
        assert!((c1 - 2.0 * 1.5 * 0.4).abs() < 1e-15);
        // H_2^1(1) = −4 L_1^{1/2}(1) = −4 (3/2 − 1).
        let h2 = classical_poly_eval(ClassicalFamily::GeneralizedHermite { mu: 1.0 }, 2, 1.0).unwrap();
        assert!((h2 + 2.0).abs() < 1e-14);
    }

    #[test]
    fn generalized_hermite_reduces_to_hermite() {
        for n in 0..8 {
            for y in [-1.3, 0.2, 2.1] {
                let g = generalized_hermite(n, 0.0, y);
                let h = hermite(n, y);
                assert!((g - h).abs() < 1e-11 * h.abs().max(1.0), "n={n} y={y}");
            }
        }
    }

    #[test]
    fn jacobi_at_unit_argument() {
        // P_n^{(α,β)}(1) = (α+1)_n / n!.
        let (a, b) = (0.7, 1.9);
        let mut want = 1.0;
        for n in 0..10 {
            let got = jacobi(n, a, b, 1.0);
            assert!((got - want).abs() < 1e-12 * want);
            want *= (a + 1.0 + n as f64) / (n as f64 + 1.0);
        }
    }

    #[test]
    fn gegenbauer_is_scaled_jacobi() {
        // C_3^μ(y) = (2μ)_3/(μ+½)_3 · P_3^{(μ−½,μ−½)}(y).
        let (mu, y): (f64, f64) = (1.3, 0.45);
        let poch = |x: f64, k: usize| (0..k).map(|i| x + i as f64).product::<f64>();
        let want = poch(2.0 * mu, 3) / poch(mu + 0.5, 3) * jacobi(3, mu - 0.5, mu - 0.5, y);
        assert!((gegenbauer(3, mu, y) - want).abs() < 1e-13);
    }

    #[test]
    fn domain_errors() {
        assert!(classical_poly_eval(ClassicalFamily::Jacobi { alpha: 0.0, beta: 0.0 }, 2, 1.5).is_err());
        assert!(classical_poly_eval(ClassicalFamily::Laguerre { nu: 1.0 }, 2, -0.1).is_err());
        assert!(classical_poly_eval(ClassicalFamily::Gegenbauer { mu: -0.7 }, 2, 0.1).is_err());
    }
}
