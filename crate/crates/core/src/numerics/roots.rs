use num_complex::Complex64;

use super::Interval;
use crate::error::{Error, Result};

/// Brent's method: inverse quadratic interpolation and secant steps
/// safeguarded by bisection. Returns a point whose bracket width is at most
/// `tol`.
pub fn find_root<F: Fn(f64) -> f64>(f: F, bracket: Interval, tol: f64) -> Result<f64> {
    let (mut a, mut b) = (bracket.lo, bracket.hi);
    if !a.is_finite() || !b.is_finite() {
        return Err(Error::InvalidParams("root bracket must be finite".into()));
    }
    let (mut fa, mut fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() || fa.is_nan() || fb.is_nan() {
        return Err(Error::NoSignChange { lo: a, hi: b });
    }
    let (mut c, mut fc) = (a, fa);
    let mut d = b - a;
    let mut e = d;
    for _ in 0..500 {
        if fb.signum() == fc.signum() {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = 2.0 * f64::EPSILON * b.abs() + 0.5 * tol;
        let xm = 0.5 * (c - b);
        if xm.abs() <= tol1 || fb == 0.0 {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                let qa = fa / fc;
                let r = fb / fc;
                p = s * (2.0 * xm * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if p > 0.0 {
                q = -q;
            }
            p = p.abs();
            let min1 = 3.0 * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if 2.0 * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        if d.abs() > tol1 {
            b += d;
        } else {
            b += tol1.copysign(xm);
        }
        fb = f(b);
    }
    Ok(b)
}

/// Secant iteration in the complex plane, for zeros of analytic functions
/// started from two nearby guesses.
pub fn complex_secant<F: Fn(Complex64) -> Complex64>(
    f: F,
    z0: Complex64,
    z1: Complex64,
    tol: f64,
    max_iter: usize,
) -> Result<Complex64> {
    let (mut za, mut zb) = (z0, z1);
    let (mut fa, mut fb) = (f(za), f(zb));
    for _ in 0..max_iter {
        if fb.norm() == 0.0 {
            return Ok(zb);
        }
        let denom = fb - fa;
        if denom.norm() == 0.0 {
            break;
        }
        let step = fb * (zb - za) / denom;
        za = zb;
        fa = fb;
        zb -= step;
        fb = f(zb);
        if !zb.re.is_finite() || !zb.im.is_finite() {
            break;
        }
        if step.norm() <= tol * zb.norm().max(1.0) {
            return Ok(zb);
        }
    }
    Err(Error::BracketFailure(format!(
        "complex secant did not converge from {z0}"
    )))
}
