use super::dd::Cdd;
use super::{log_gamma_complex, nonpositive_integer, recip_gamma, ComplexValue};
use crate::error::{Error, Result};

/// Terminating generalized hypergeometric sum pFq(numerator; denominator; arg).
///
/// The series stops after the first numerator parameter equal to a
/// non-positive integer -n, giving n+1 terms. Terms and the running sum are
/// carried in double-double arithmetic, so sums whose terms exceed the result
/// by up to ~15 orders of magnitude still come out at full double precision.
pub fn terminating_pfq(
    numerator: &[ComplexValue],
    denominator: &[ComplexValue],
    arg: ComplexValue,
) -> Result<ComplexValue> {
    let n = numerator
        .iter()
        .filter_map(|&a| nonpositive_integer(a))
        .min()
        .ok_or_else(|| {
            Error::InvalidParams("no numerator parameter is a non-positive integer".into())
        })?;
    for (index, &b) in denominator.iter().enumerate() {
        if let Some(m) = nonpositive_integer(b) {
            if m < n {
                return Err(Error::DenominatorPole { index });
            }
        }
    }

    let num: Vec<Cdd> = numerator.iter().map(|a| Cdd::new(a.re, a.im)).collect();
    let den: Vec<Cdd> = denominator.iter().map(|b| Cdd::new(b.re, b.im)).collect();
    let z = Cdd::new(arg.re, arg.im);

    let mut term = Cdd::ONE;
    let mut sum = Cdd::ONE;
    for k in 0..n {
        let kf = k as f64;
        let mut ratio_num = z;
        for a in &num {
            ratio_num = ratio_num * a.add_real(kf);
        }
        let mut ratio_den = Cdd::new(kf + 1.0, 0.0);
        for b in &den {
            ratio_den = ratio_den * b.add_real(kf);
        }
        term = term * ratio_num / ratio_den;
        sum = sum + term;
    }
    Ok(sum.to_c64())
}

/// Gauss sum 2F1(a, b; c; 1) = Γ(c)Γ(c-a-b) / (Γ(c-a)Γ(c-b)).
///
/// Terminating cases are summed directly and carry no convergence condition.
pub fn gauss_2f1_unit(a: ComplexValue, b: ComplexValue, c: ComplexValue) -> Result<ComplexValue> {
    let one = ComplexValue::new(1.0, 0.0);
    if nonpositive_integer(a).is_some() || nonpositive_integer(b).is_some() {
        return terminating_pfq(&[a, b], &[c], one);
    }
    if nonpositive_integer(c).is_some() {
        return Err(Error::DenominatorPole { index: 0 });
    }
    let excess = c - a - b;
    if excess.re <= 0.0 {
        return Err(Error::Divergent(format!(
            "Re(c - a - b) = {} is not positive",
            excess.re
        )));
    }
    let head = (log_gamma_complex(c)? + log_gamma_complex(excess)?).exp();
    Ok(head * recip_gamma(c - a) * recip_gamma(c - b))
}

/// Power series for 2F1(a, b; c; z) inside the unit disc.
///
/// Only intended for |z| <= 0.9, where the series converges geometrically.
pub fn hyp2f1_series(
    a: ComplexValue,
    b: ComplexValue,
    c: ComplexValue,
    z: ComplexValue,
) -> Result<ComplexValue> {
    if z.norm() > 0.9 {
        return Err(Error::Domain {
            x: z.norm(),
            what: "power series for 2F1 requires |z| <= 0.9".into(),
        });
    }
    if nonpositive_integer(c).is_some() {
        return Err(Error::DenominatorPole { index: 0 });
    }
    let mut term = Cdd::ONE;
    let mut sum = Cdd::ONE;
    let za = Cdd::new(z.re, z.im);
    let (ca, cb, cc) = (Cdd::new(a.re, a.im), Cdd::new(b.re, b.im), Cdd::new(c.re, c.im));
    let mut small = 0;
    for k in 0..20_000 {
        let kf = k as f64;
        term = term * ca.add_real(kf) * cb.add_real(kf) * za
            / (cc.add_real(kf) * Cdd::new(kf + 1.0, 0.0));
        sum = sum + term;
        if term.norm_sqr_f64() <= 1e-40 * sum.norm_sqr_f64() {
            small += 1;
            if small >= 3 {
                return Ok(sum.to_c64());
            }
        } else {
            small = 0;
        }
    }
    Err(Error::Divergent("2F1 power series did not converge".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::special::c64;
    use std::f64::consts::PI;

    #[test]
    fn zero_degree_is_one() {
        let v = terminating_pfq(
            &[c64(0.0, 0.0), c64(0.5, 1.0), c64(0.5, -1.0)],
            &[c64(1.0, 0.0), c64(1.0, 0.0)],
            c64(1.0, 0.0),
        )
        .unwrap();
        assert_eq!(v, c64(1.0, 0.0));
    }

    #[test]
    fn hand_evaluated_sums() {
        let v = terminating_pfq(&[c64(-1.0, 0.0), c64(1.0, 0.0)], &[c64(2.0, 0.0)], c64(2.0, 0.0))
            .unwrap();
        assert!(v.norm() < 1e-16);
        let v = terminating_pfq(
            &[c64(-1.0, 0.0), c64(0.5, 1.0), c64(0.5, -1.0)],
            &[c64(1.0, 0.0), c64(1.0, 0.0)],
            c64(1.0, 0.0),
        )
        .unwrap();
        assert!((v - c64(-0.25, 0.0)).norm() < 1e-16);
    }

    #[test]
    fn denominator_pole_detected() {
        let r = terminating_pfq(&[c64(-3.0, 0.0)], &[c64(-1.0, 0.0)], c64(1.0, 0.0));
        assert!(matches!(r, Err(Error::DenominatorPole { index: 0 })));
        // -N in the denominator with n <= N is fine.
        assert!(terminating_pfq(&[c64(-2.0, 0.0)], &[c64(-2.0, 0.0)], c64(1.0, 0.0)).is_ok());
    }

    #[test]
    fn gauss_sum_values() {
        let one = gauss_2f1_unit(c64(0.0, 0.0), c64(1.0, 0.0), c64(2.0, 0.0)).unwrap();
        assert_eq!(one, c64(1.0, 0.0));
        let half = gauss_2f1_unit(c64(-1.0, 0.0), c64(1.0, 0.0), c64(2.0, 0.0)).unwrap();
        assert!((half - c64(0.5, 0.0)).norm() < 1e-16);
        let v = gauss_2f1_unit(c64(0.5, 0.0), c64(0.5, 0.0), c64(2.0, 0.0)).unwrap();
        assert!((v.re - 4.0 / PI).abs() < 1e-13 && v.im.abs() < 1e-15, "{v}");
        assert!(matches!(
            gauss_2f1_unit(c64(0.5, 0.0), c64(1.0, 0.0), c64(1.5, 0.0)),
            Err(Error::Divergent(_))
        ));
    }

    #[test]
    fn terminating_sum_agrees_with_gauss_sum() {
        for n in 0..=20 {
            for &(b, c) in &[(c64(0.3, 1.2), c64(2.5, -0.4)), (c64(1.7, 0.0), c64(0.6, 0.0))] {
                let a = c64(-(n as f64), 0.0);
                let direct = terminating_pfq(&[a, b], &[c], c64(1.0, 0.0)).unwrap();
                // Chu-Vandermonde: (c-b)_n / (c)_n
                let cv = crate::special::pochhammer(c - b, n) / crate::special::pochhammer(c, n);
                assert!((direct - cv).norm() <= 1e-12 * cv.norm().max(1e-300), "n = {n}");
            }
        }
    }

    #[test]
    fn power_series_matches_closed_form() {
        // 2F1(1, 1; 2; z) = -ln(1 - z) / z
        let z = c64(0.5, 0.2);
        let v = hyp2f1_series(c64(1.0, 0.0), c64(1.0, 0.0), c64(2.0, 0.0), z).unwrap();
        let exact = -(c64(1.0, 0.0) - z).ln() / z;
        assert!((v - exact).norm() < 1e-15);
    }
}
