//! Independent numerical ground truth.
//!
//! Adaptive Gauss-Kronrod quadrature on finite, half-line and whole-line
//! domains, epsilon-ladder regularization for conditionally convergent
//! integrals, tabulated cylinder functions for large arguments, and the
//! guarded series summation. Nothing here calls the umbral engine or the
//! closed forms.

mod cylinder;
mod domains;
mod quadrature;
mod regularize;

pub use cylinder::{pseudo_trig_roots, CylinderKind, CylinderTable};
pub use domains::{
    integrate_half_line, integrate_half_line_with, integrate_real_line, integrate_real_line_with,
    Damping,
};
pub use quadrature::{
    integrate_algebraic_weight, integrate_finite, integrate_finite_with, QuadOptions,
    QuadratureResult, DEFAULT_MAX_EVALS,
};
pub use regularize::{
    integrate_oscillatory_gaussian, integrate_oscillatory_gaussian_with, richardson, Extrapolation,
    RegularizationTrace,
};
pub use crate::series::{series_sum, SeriesControl, SeriesTail, Summed};
