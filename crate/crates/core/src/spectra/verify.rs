use super::system::{SystemCatalogEntry, SystemKind};
use crate::energy_poly::{reciprocal_gamma_factor, EnergyPolynomial};
use crate::error::{Error, Result};
use crate::numerics::{complex_secant, find_root, Interval};
use crate::special::{c64, recip_gamma, ComplexValue};

/// Largest spacing in the continued argument s between two probes.
const MAX_STEP: f64 = 0.02;

/// Reciprocal-gamma amplitude factor at a real energy E < 0, with the
/// argument continued to iy = −s, s = √(−y²(E)). `None` where y² is not
/// negative or undefined.
pub fn continued_amplitude(system: &SystemCatalogEntry, energy: f64) -> Option<(f64, f64)> {
    let poly: EnergyPolynomial = system.polynomial_at(energy).ok()?;
    let y2 = system.mapping.y_squared(energy).ok()?;
    if !(y2 < 0.0) || !y2.is_finite() {
        return None;
    }
    let s = (-y2).sqrt();
    Some((s, reciprocal_gamma_factor(&poly, s)))
}

struct Scan<'a> {
    system: &'a SystemCatalogEntry,
    s_cap: f64,
    roots: Vec<f64>,
}

impl Scan<'_> {
    fn probe(&self, e: f64) -> Option<(f64, f64)> {
        continued_amplitude(self.system, e)
    }

    /// Refine from a valid probe toward the edge of the continued region.
    fn toward_boundary(&mut self, valid: f64, fv: (f64, f64), invalid: f64) -> Result<()> {
        if invalid.is_nan() {
            return Ok(());
        }
        let (mut good, mut bad) = (valid, invalid);
        let mut last = (valid, fv);
        for _ in 0..200 {
            let mid = 0.5 * (good + bad);
            if mid == good || mid == bad {
                break;
            }
            match self.probe(mid) {
                Some(v) => {
                    let (lo, flo, hi, fhi) = if last.0 < mid {
                        (last.0, last.1, mid, v)
                    } else {
                        (mid, v, last.0, last.1)
                    };
                    self.segment(lo, flo, hi, fhi, 0)?;
                    last = (mid, v);
                    good = mid;
                }
                None => bad = mid,
            }
        }
        Ok(())
    }

    fn segment(&mut self, lo: f64, flo: (f64, f64), hi: f64, fhi: (f64, f64), depth: u32) -> Result<()> {
        if flo.0 > self.s_cap && fhi.0 > self.s_cap {
            return Ok(());
        }
        let narrow = (hi - lo) <= 4.0 * f64::EPSILON * lo.abs().max(hi.abs());
        if (flo.0 - fhi.0).abs() > MAX_STEP && !narrow && depth < 200 {
            let mid = 0.5 * (lo + hi);
            if let Some(fm) = self.probe(mid) {
                self.segment(lo, flo, mid, fm, depth + 1)?;
                return self.segment(mid, fm, hi, fhi, depth + 1);
            }
            return Ok(());
        }
        if flo.1 == 0.0 {
            self.roots.push(lo);
        } else if flo.1 * fhi.1 < 0.0 {
            let g = |e: f64| self.probe(e).map_or(f64::NAN, |v| v.1);
            let root = if narrow {
                if flo.1.abs() < fhi.1.abs() {
                    lo
                } else {
                    hi
                }
            } else {
                find_root(g, Interval { lo, hi }, 0.0)?
            };
            self.roots.push(root);
        }
        Ok(())
    }
}

/// Real zeros of the continued amplitude on E < 0, ascending, found by a
/// scan that refines until the continued argument moves by at most 0.02
/// between probes, then polished with Brent's method.
pub fn amplitude_zeros(system: &SystemCatalogEntry, s_cap: f64) -> Result<Vec<f64>> {
    let mut scan = Scan {
        system,
        s_cap,
        roots: Vec::new(),
    };
    // Log-spaced seeds over 16 decades of |E|, deepest first.
    let seeds: Vec<f64> = (0..=640).map(|i| -(10f64).powf(8.0 - i as f64 / 40.0)).collect();
    let mut prev: Option<(f64, (f64, f64))> = None;
    let mut prev_e = f64::NAN;
    for &e in &seeds {
        let cur = scan.probe(e).map(|v| (e, v));
        match (prev, cur) {
            (Some((a, fa)), Some((b, fb))) => scan.segment(a, fa, b, fb, 0)?,
            (Some((a, fa)), None) => scan.toward_boundary(a, fa, e)?,
            (None, Some((b, fb))) => scan.toward_boundary(b, fb, prev_e)?,
            _ => {}
        }
        prev = cur;
        prev_e = e;
    }
    let mut roots = scan.roots;
    roots.sort_by(f64::total_cmp);
    roots.dedup();
    Ok(roots)
}

/// Bound energy number n located as a zero of the continued amplitude.
pub fn verify_bound_by_amplitude_zero(system: &SystemCatalogEntry, n: usize) -> Result<f64> {
    if let SystemKind::Resonance { alpha, beta } = system.kind() {
        if n > 0 {
            return Err(Error::IndexOutOfRange { index: n, limit: 0 });
        }
        let e = resonance_by_amplitude_zero(alpha, beta, 0)?;
        return Ok(e.re);
    }
    let offset = match system.polynomial_at(-1.0).ok().or_else(|| system.polynomial_at(1.0).ok()) {
        Some(EnergyPolynomial::MeixnerPollaczek(p)) => p.mu(),
        Some(EnergyPolynomial::ContinuousDualHahn(p)) => {
            [p.mu(), p.a(), p.b()].iter().map(|z| z.norm()).fold(0.0, f64::max)
        }
        None => 0.0,
    };
    let roots = amplitude_zeros(system, n as f64 + offset + 3.0)?;
    roots.get(n).copied().ok_or_else(|| {
        Error::BracketFailure(format!(
            "found {} amplitude zeros below threshold, wanted index {n}",
            roots.len()
        ))
    })
}

/// Zero number n of 1/Γ(α/k + iβ/α) in the complex k plane, returned as the
/// energy k²/2. The secant iteration starts from a point displaced from the
/// zero by a few percent.
pub fn resonance_by_amplitude_zero(alpha: f64, beta: f64, n: usize) -> Result<ComplexValue> {
    let iy = c64(0.0, beta / alpha);
    let f = |k: ComplexValue| recip_gamma(alpha / k + iy);
    let guess = -alpha / (c64(n as f64, 0.0) + iy);
    let z0 = guess * c64(1.04, 0.03);
    let z1 = guess * c64(0.97, -0.02);
    let k = complex_secant(f, z0, z1, 1e-15, 200)?;
    Ok(k * k * 0.5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::{bound_states, resonances};

    #[test]
    fn coulomb_ground_state() {
        let c = SystemCatalogEntry::coulomb(1.0, 0).unwrap();
        let e = verify_bound_by_amplitude_zero(&c, 0).unwrap();
        assert!((e + 0.5).abs() < 1e-10 * 0.5);
    }

    #[test]
    fn morse_excited_state() {
        let m = SystemCatalogEntry::morse(1.0, 1.0, 2.0).unwrap();
        let e = verify_bound_by_amplitude_zero(&m, 1).unwrap();
        assert!((e + 0.125).abs() < 1e-10 * 0.125);
        assert!(verify_bound_by_amplitude_zero(&m, 2).is_err());
    }

    #[test]
    fn log_cdh_ground_state() {
        let sys = SystemCatalogEntry::log_cdh(1.0, 1.0, -2.3, 1.0, 0.3).unwrap();
        let want = bound_states(&sys, 1).unwrap().bound[0];
        let got = verify_bound_by_amplitude_zero(&sys, 0).unwrap();
        assert!(((got - want) / want).abs() < 1e-10);
    }

    #[test]
    fn resonance_zeros() {
        let s = resonances(1.0, 0.9, 3).unwrap();
        let e0 = resonance_by_amplitude_zero(1.0, 0.9, 0).unwrap();
        assert!((e0.re - s.bound[0]).abs() < 1e-12 && e0.im.abs() < 1e-12);
        for n in 1..=3 {
            let e = resonance_by_amplitude_zero(1.0, 0.9, n).unwrap();
            assert!((e - s.resonances[n - 1]).norm() < 1e-12);
        }
    }

    #[test]
    fn catalog_levels_agree() {
        for sys in crate::spectra::catalog() {
            let spec = bound_states(&sys, 6).unwrap();
            for (n, want) in spec.bound.iter().enumerate() {
                let got = verify_bound_by_amplitude_zero(&sys, n).unwrap();
                assert!(((got - want) / want).abs() < 1e-10, "{} n={n}: {got} vs {want}", sys.name);
            }
        }
    }
}
