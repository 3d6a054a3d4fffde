//! Bound-state spectra and resonance energies of the system catalog.

mod closed;
mod system;
mod verify;

pub use closed::{bound_states, resonances, threefold_spectrum, Spectrum};
pub use system::{catalog, EnergyMapping, PolyClass, SystemCatalogEntry, SystemKind};
pub use verify::{
    amplitude_zeros, continued_amplitude, resonance_by_amplitude_zero,
    verify_bound_by_amplitude_zero,
};
