//! Scattering phase shifts and amplitudes, closed form and fitted from
//! polynomial tails.

mod closed;
mod fit;

pub use closed::{
    amplitude_closed, phase_distance_mod_pi, phase_shift_closed, phase_shift_sweep, reduce_mod_pi,
    PhaseSample,
};
pub use fit::{
    fit_system_phase, fit_tail_phase, weighted_polynomials, weighted_tail, AsymptoticModel, PhaseFit,
    TailWindow,
};
