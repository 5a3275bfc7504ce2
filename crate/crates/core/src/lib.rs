//! Operational evaluation of definite integrals.
//!
//! Special functions are represented as umbral series over Gamma-ratio moment
//! sequences; integrals over dilation families and Mellin/Borel/Beta transforms
//! are evaluated termwise, and every closed form can be checked against an
//! independent adaptive-quadrature oracle.
//!
//! The numerical kernels are generic over [`Real`] (`f32`, `f64`). The aliases
//! at the crate root fix the scalar to `f64`.

// Negated comparisons reject NaN along with out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::excessive_precision)]

pub mod closedforms;
pub mod error;
pub mod oracle;
pub mod scalar;
pub mod series;
pub mod specfun;
pub mod transforms;
pub mod umbral;
pub mod verify;

pub use error::{Error, Result};
pub use scalar::Real;

pub type Complex64 = num_complex::Complex<f64>;
pub type GammaRatioSequence64 = umbral::GammaRatioSequence<f64>;
pub type UmbralSeries64 = umbral::UmbralSeries<f64>;
pub type MellinMultiplier64 = umbral::MellinMultiplier<f64>;
pub type PowerSeriesSpec64 = umbral::PowerSeriesSpec<f64>;
pub type CoefficientSeries64 = transforms::CoefficientSeries<f64>;
pub type QuadratureResult64 = oracle::QuadratureResult<f64>;
pub type SeriesTail64 = series::SeriesTail<f64>;
