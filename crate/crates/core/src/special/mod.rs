//! Complex-argument special functions: log-gamma, Pochhammer symbols,
//! terminating hypergeometric sums, the Gauss sum at unit argument and
//! integer-order Bessel functions.

mod bessel;
mod dd;
mod gamma;
mod hypergeometric;

pub use bessel::bessel_j;
pub use gamma::{
    gamma_abs_arg, ln_gamma_real, log_gamma_complex, pochhammer, pochhammer_real, recip_gamma,
    recip_gamma_real, sin_pi, GammaPolar,
};
pub use hypergeometric::{gauss_2f1_unit, hyp2f1_series, terminating_pfq};

/// Complex scalar used throughout the crate.
pub type ComplexValue = num_complex::Complex64;

/// Shorthand constructor.
#[inline]
pub fn c64(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

/// Returns `Some(n)` when `z` is the non-positive integer `-n`.
pub(crate) fn nonpositive_integer(z: ComplexValue) -> Option<usize> {
    if z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round() && z.re > -(u32::MAX as f64) {
        Some((-z.re) as usize)
    } else {
        None
    }
}
