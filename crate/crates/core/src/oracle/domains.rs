use num_complex::Complex;

use crate::error::Result;
use crate::scalar::Real;

use super::quadrature::{adaptive, QuadOptions, QuadratureResult};
use super::regularize::{damped_half_line, Extrapolation};

/// Treatment of the half-line integral.
#[derive(Debug, Clone, PartialEq)]
pub enum Damping<T> {
    /// Integrate directly after mapping onto a finite interval.
    None,
    /// `lim_{eps -> 0} int_0^inf f(x) exp(-eps x) dx` by ladder extrapolation.
    ExpExtrapolated(Extrapolation<T>),
}

/// `int_0^inf f(x) dx` for an integrand that decays at infinity.
///
/// `x = u / (1 - u)` maps the half-line onto `(0, 1)`. The half `u > 1/2` is
/// written in `w = 1 - u`, `x = (1 - w) / w`, so a singular factor at `u = 1`
/// is resolved in the exactly represented variable `w`.
pub fn integrate_half_line<T: Real, F: Fn(T) -> Complex<T>>(
    f: F,
    tol: T,
    damping: Damping<T>,
) -> Result<QuadratureResult<T>> {
    match damping {
        Damping::None => integrate_half_line_with(f, &QuadOptions::abs(tol)),
        Damping::ExpExtrapolated(cfg) => damped_half_line(&f, tol, &cfg),
    }
}

pub fn integrate_half_line_with<T: Real, F: Fn(T) -> Complex<T>>(
    f: F,
    opts: &QuadOptions<T>,
) -> Result<QuadratureResult<T>> {
    let half = T::lit(0.5);
    let near = |u: T| {
        let v = T::one() - u;
        f(u / v) / (v * v)
    };
    let far = |w: T| f((T::one() - w) / w) / (w * w);
    let split = QuadOptions {
        abs_tol: opts.abs_tol * half,
        ..opts.clone()
    };
    let a = adaptive(&near, &[T::zero(), half], &split)?;
    let b = adaptive(&far, &[T::zero(), half], &split)?;
    Ok(combine(a, b))
}

/// `int_{-inf}^{inf} f(x) dx`, folded onto the half-line as `f(x) + f(-x)`.
pub fn integrate_real_line<T: Real, F: Fn(T) -> Complex<T>>(f: F, tol: T) -> Result<QuadratureResult<T>> {
    integrate_real_line_with(f, &QuadOptions::abs(tol))
}

pub fn integrate_real_line_with<T: Real, F: Fn(T) -> Complex<T>>(
    f: F,
    opts: &QuadOptions<T>,
) -> Result<QuadratureResult<T>> {
    let mut r = integrate_half_line_with(|x| f(x) + f(-x), opts)?;
    r.evaluations *= 2;
    Ok(r)
}

pub(crate) fn combine<T: Real>(a: QuadratureResult<T>, b: QuadratureResult<T>) -> QuadratureResult<T> {
    QuadratureResult {
        value: a.value + b.value,
        abs_error_estimate: a.abs_error_estimate + b.abs_error_estimate,
        evaluations: a.evaluations + b.evaluations,
        converged: a.converged && b.converged,
        trace: None,
    }
}
