use super::params::{DiscreteDualHahnParams, DiscreteMeixnerParams};
use crate::error::{Error, Result};
use crate::special::{c64, ln_gamma_real, pochhammer_real, terminating_pfq};

/// Orthonormal Meixner value M_n^α(m; β) and its weight ρ_m^α(β).
pub fn discrete_meixner(params: &DiscreteMeixnerParams, n: usize, m: usize) -> Result<(f64, f64)> {
    let (alpha, beta) = (params.alpha(), params.beta());
    let (nf, mf) = (n as f64, m as f64);
    let norm: f64 = (0..n).map(|k| (alpha + k as f64) * beta / (k as f64 + 1.0)).product();
    let sum = terminating_pfq(
        &[c64(-nf, 0.0), c64(-mf, 0.0)],
        &[c64(alpha, 0.0)],
        c64(1.0 - 1.0 / beta, 0.0),
    )?;
    let value = norm.sqrt() * sum.re;
    Ok((value, meixner_weight(params, m)?))
}

/// ρ_m^α(β) = (1-β)^α (α)_m β^m / m!.
pub fn meixner_weight(params: &DiscreteMeixnerParams, m: usize) -> Result<f64> {
    let (alpha, beta) = (params.alpha(), params.beta());
    let mf = m as f64;
    let ln = alpha * (1.0 - beta).ln() + ln_gamma_real(alpha + mf)? - ln_gamma_real(alpha)?
        + mf * beta.ln()
        - ln_gamma_real(mf + 1.0)?;
    Ok(ln.exp())
}

/// Truncated Σ_m ρ_m M_n(m) M_n'(m) together with a bound on the omitted tail.
///
/// Terms are summed until the ratio-based geometric bound of the remainder
/// drops below `tail_tol`, or `max_terms` is reached.
pub fn meixner_orthogonality(
    params: &DiscreteMeixnerParams,
    n: usize,
    n2: usize,
    tail_tol: f64,
    max_terms: usize,
) -> Result<(f64, f64)> {
    let mut sum = 0.0;
    let mut prev = f64::NAN;
    let mut bound = f64::INFINITY;
    for m in 0..max_terms {
        let (v1, w) = discrete_meixner(params, n, m)?;
        let v2 = discrete_meixner(params, n2, m)?.0;
        let term = (w * v1 * v2).abs();
        sum += w * v1 * v2;
        if prev.is_finite() && prev > 0.0 && m > n + n2 + 2 {
            let ratio = term / prev;
            if ratio < 1.0 {
                bound = term * ratio / (1.0 - ratio);
                if bound < tail_tol {
                    return Ok((sum, bound));
                }
            }
        }
        prev = term;
    }
    Ok((sum, bound))
}

fn dual_hahn_check(params: &DiscreteDualHahnParams, index: usize) -> Result<()> {
    if index > params.size() {
        return Err(Error::IndexOutOfRange {
            index,
            limit: params.size(),
        });
    }
    Ok(())
}

/// Orthonormal dual Hahn value R_n^N(m; α, β) and the weight ρ^N(m; α, β).
pub fn discrete_dual_hahn(
    params: &DiscreteDualHahnParams,
    n: usize,
    m: usize,
) -> Result<(f64, f64)> {
    dual_hahn_check(params, n)?;
    dual_hahn_check(params, m)?;
    let big = params.size();
    let (alpha, beta) = (params.alpha(), params.beta());
    let (nf, mf, bf) = (n as f64, m as f64, big as f64);
    let prefactor = pochhammer_real(alpha + 1.0, n) * pochhammer_real(beta + 1.0, big - n)
        / (factorial(n) * factorial(big - n));
    let sum = terminating_pfq(
        &[c64(-nf, 0.0), c64(-mf, 0.0), c64(mf + alpha + beta + 1.0, 0.0)],
        &[c64(alpha + 1.0, 0.0), c64(-bf, 0.0)],
        c64(1.0, 0.0),
    )?;
    Ok((prefactor.abs().sqrt() * sum.re, dual_hahn_weight(params, m)?))
}

/// ρ^N(m; α, β), taken in absolute value (its sign is uniform when α, β < -N).
pub fn dual_hahn_weight(params: &DiscreteDualHahnParams, m: usize) -> Result<f64> {
    dual_hahn_check(params, m)?;
    let big = params.size();
    let (alpha, beta) = (params.alpha(), params.beta());
    let mf = m as f64;
    let top = factorial(big)
        * (2.0 * mf + alpha + beta + 1.0)
        * pochhammer_real(alpha + 1.0, m)
        * pochhammer_real((big - m) as f64 + 1.0, m);
    let bottom = pochhammer_real(mf + alpha + beta + 1.0, big + 1)
        * pochhammer_real(beta + 1.0, m)
        * factorial(m);
    Ok((top / bottom).abs())
}

fn factorial(n: usize) -> f64 {
    pochhammer_real(1.0, n)
}
