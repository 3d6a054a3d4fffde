//! Energy-space orthogonal polynomials: Meixner–Pollaczek and continuous
//! dual Hahn (continuous spectrum), Meixner and dual Hahn (discrete), and the
//! extended Jacobi recursions.

mod asymptotic;
mod discrete;
mod generalized;
mod generating;
mod jacobi_ext;
mod oracle;
mod params;
mod recursion;
mod weight;

pub use asymptotic::{
    amplitude_factor, asymptotic_approximant, asymptotic_phase, asymptotic_weighted,
    phase_constant, phase_law, reciprocal_gamma_factor,
};
pub use discrete::{
    discrete_dual_hahn, discrete_meixner, dual_hahn_weight, meixner_orthogonality,
    meixner_weight,
};
pub use generalized::{generalized_orthogonality, GeneralizedOrthogonality};
pub use generating::{generating_check, GeneratingCheck};
pub use jacobi_ext::{extended_jacobi, jacobi_abc, ExtendedKind};
pub use oracle::eval_hypergeometric;
pub use params::{
    ContinuousDualHahnParams, DiscreteDualHahnParams, DiscreteMeixnerParams, DualHahnRegime,
    EnergyPolynomial, ExtendedJacobiParams, MeixnerPollaczekParams,
};
pub use recursion::{
    eval_at_variable, eval_recursion, recurrence_coefficients, recurrence_residual, second_kind,
};
pub use weight::{ln_weight, weight};
