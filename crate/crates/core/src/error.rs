use thiserror::Error;

/// Errors raised by the special-function kernel, the umbral engine, the closed
/// forms, the transforms and the quadrature oracle.
///
/// Numerical payloads are stored as `f64` regardless of the scalar type the
/// computation ran in.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("Gamma pole at z = {re} + {im}i")]
    Pole { re: f64, im: f64 },

    #[error("uncancelled pole in numerator factor {index} at s = {re} + {im}i")]
    FactorPole { index: usize, re: f64, im: f64 },

    #[error("series did not converge after {terms} terms (last |term| = {last_term:e})")]
    NonConvergence { terms: usize, last_term: f64 },

    #[error(
        "quadrature budget exhausted after {evaluations} evaluations \
         (partial value {value_re} + {value_im}i, error estimate {estimate:e})"
    )]
    QuadratureBudget {
        value_re: f64,
        value_im: f64,
        estimate: f64,
        evaluations: usize,
    },

    #[error("epsilon-ladder extrapolation diverged (residual {residual:e}, tolerance {tolerance:e})")]
    ExtrapolationDivergence { residual: f64, tolerance: f64 },

    #[error("Mellin strip violated: sigma = {sigma} not in ({lower}, {upper})")]
    StripViolation { sigma: f64, lower: f64, upper: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parameter(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }
}
