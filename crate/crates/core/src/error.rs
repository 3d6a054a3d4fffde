use thiserror::Error;

/// Errors raised by the numerical and physical routines of this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma function pole at z = {re} + {im}i")]
    GammaPole { re: f64, im: f64 },

    #[error("denominator parameter {index} is a non-positive integer within the summation range")]
    DenominatorPole { index: usize },

    #[error("hypergeometric series does not terminate and diverges at unit argument: {0}")]
    Divergent(String),

    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("quadrature did not converge: estimate {estimate:e}, error {error:e} after {subdivisions} subdivisions")]
    QuadratureNonConvergence {
        estimate: f64,
        error: f64,
        subdivisions: usize,
    },

    #[error("no sign change on bracket [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("root bracket could not be established: {0}")]
    BracketFailure(String),

    #[error("matrix is not symmetric: max asymmetry {0:e}")]
    Asymmetric(f64),

    #[error("argument {x} outside the domain: {what}")]
    Domain { x: f64, what: String },

    #[error("ill-conditioned tail fit (normal-matrix condition {0:e})")]
    IllConditioned(f64),

    #[error("index {index} out of range (limit {limit})")]
    IndexOutOfRange { index: usize, limit: usize },

    #[error("invalid energy or momentum: {0}")]
    InvalidEnergy(String),

    #[error("grid point {x} too close to a singular endpoint")]
    SingularGrid { x: f64 },

    #[error("complex value {re} + {im}i expected to be real")]
    NotReal { re: f64, im: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
