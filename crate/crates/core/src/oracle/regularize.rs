use num_complex::Complex;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;

use super::quadrature::{adaptive, QuadOptions, QuadratureResult};

/// Record of an epsilon-ladder regularization.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RegularizationTrace<T> {
    pub epsilons: Vec<T>,
    pub values: Vec<Complex<T>>,
    pub extrapolated: Complex<T>,
    /// `|E_k - E_(k-1)|` for `k = 1..n-1`, where `E_k` extrapolates from the
    /// first `k + 1` rungs.
    pub residuals: Vec<T>,
    /// `|E_(n-1) - E_(n-2)|`.
    pub residual: T,
}

/// Ladder and model for `lim_{eps -> 0} I(eps)`.
///
/// `I(eps)` is modelled as `I + sum_j c_j eps^j` plus, for every entry `p` of
/// `tail_powers`, a term `eps^p` (or `eps^p ln eps` when `p` is an integer).
/// An algebraic tail `x^-lambda` of the undamped integrand contributes
/// `p = lambda - 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Extrapolation<T> {
    pub epsilons: Vec<T>,
    pub tail_powers: Vec<T>,
    /// Damped integrals are truncated where the damping factor is `exp(-cutoff)`.
    pub cutoff: T,
    /// Spacing of the initial quadrature breakpoints in the damped variable.
    pub panel_width: T,
    /// Absolute tolerance for each rung.
    pub rung_tol: T,
}

impl<T: Real> Default for Extrapolation<T> {
    fn default() -> Self {
        Self {
            epsilons: [0.2, 0.1, 0.05, 0.025, 0.0125].iter().map(|&e| T::lit(e)).collect(),
            tail_powers: Vec::new(),
            cutoff: T::lit(40.0),
            panel_width: T::one(),
            rung_tol: T::lit(1e-11),
        }
    }
}

impl<T: Real> Extrapolation<T> {
    /// Geometric ladder `first * ratio^j`, `j < rungs`.
    pub fn geometric(first: T, ratio: T, rungs: usize) -> Self {
        let epsilons = (0..rungs).map(|j| first * ratio.powi(j as i32)).collect();
        Self {
            epsilons,
            ..Self::default()
        }
    }

    pub fn with_tail_powers(mut self, powers: Vec<T>) -> Self {
        self.tail_powers = powers;
        self
    }

    pub fn with_panel_width(mut self, width: T) -> Self {
        self.panel_width = width;
        self
    }

    pub fn with_rung_tol(mut self, tol: T) -> Self {
        self.rung_tol = tol;
        self
    }

    fn validate(&self) -> Result<()> {
        let n = self.epsilons.len();
        if n < 2 {
            return Err(Error::parameter("the epsilon ladder needs at least two rungs"));
        }
        if self.epsilons.iter().any(|&e| !(e > T::zero()))
            || self.epsilons.windows(2).any(|w| !(w[1] < w[0]))
        {
            return Err(Error::parameter("epsilons must be positive and strictly decreasing"));
        }
        if !(self.cutoff > T::zero() && self.panel_width > T::zero()) {
            return Err(Error::parameter("cutoff and panel width must be positive"));
        }
        Ok(())
    }

    /// Basis functions ordered by their size as `eps -> 0`; `1` comes first.
    fn basis(&self, n: usize) -> Vec<(T, bool)> {
        let mut terms: Vec<(T, bool)> = (1..n).map(|j| (T::count(j), false)).collect();
        for &p in &self.tail_powers {
            terms.push((p, p.is_integer()));
        }
        // Smaller power first; at equal power the logarithmic term dominates.
        terms.sort_by(|x, y| {
            x.0.partial_cmp(&y.0)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(y.1.cmp(&x.1))
        });
        let mut basis = vec![(T::zero(), false)];
        basis.extend(terms);
        basis.truncate(n);
        basis
    }
}

fn basis_value<T: Real>(eps: T, (p, log): (T, bool)) -> T {
    let v = eps.powf(p);
    if log {
        v * eps.ln()
    } else {
        v
    }
}

/// Solves `A x = rhs` by Gaussian elimination with partial pivoting.
fn solve<T: Real>(mut a: Vec<Vec<T>>, mut rhs: Vec<T>) -> Result<Vec<T>> {
    let n = rhs.len();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).unwrap_or(std::cmp::Ordering::Equal))
            .unwrap_or(col);
        if a[pivot][col] == T::zero() {
            return Err(Error::parameter("singular extrapolation basis"));
        }
        a.swap(col, pivot);
        rhs.swap(col, pivot);
        for row in col + 1..n {
            let factor = a[row][col] / a[col][col];
            for k in col..n {
                let v = a[col][k];
                a[row][k] -= factor * v;
            }
            let r = rhs[col];
            rhs[row] -= factor * r;
        }
    }
    let mut x = vec![T::zero(); n];
    for row in (0..n).rev() {
        let mut s = rhs[row];
        for k in row + 1..n {
            s -= a[row][k] * x[k];
        }
        x[row] = s / a[row][row];
    }
    Ok(x)
}

/// Weights `w` with `E = sum_i w_i I(eps_i)` for the model on these rungs.
fn extrapolation_weights<T: Real>(cfg: &Extrapolation<T>, eps: &[T]) -> Result<Vec<T>> {
    let n = eps.len();
    let basis = cfg.basis(n);
    // E = e_0^T A^-1 V, so w solves A^T w = e_0.
    let at: Vec<Vec<T>> = (0..n)
        .map(|j| eps.iter().map(|&e| basis_value(e, basis[j])).collect())
        .collect();
    let mut e0 = vec![T::zero(); n];
    e0[0] = T::one();
    solve(at, e0)
}

/// Extrapolates ladder values to `eps -> 0`, returning the trace and the
/// amplification `sum |w_i|` of per-rung errors.
pub fn richardson<T: Real>(
    cfg: &Extrapolation<T>,
    values: &[Complex<T>],
) -> Result<(RegularizationTrace<T>, T)> {
    cfg.validate()?;
    let n = cfg.epsilons.len();
    if values.len() != n {
        return Err(Error::parameter("one value per rung is required"));
    }
    let mut estimates = Vec::with_capacity(n);
    let mut amplification = T::one();
    for k in 1..n {
        let w = extrapolation_weights(cfg, &cfg.epsilons[..=k])?;
        let e = w
            .iter()
            .zip(values)
            .fold(Complex::<T>::zero(), |acc, (&wi, &v)| acc + v * wi);
        amplification = w.iter().fold(T::zero(), |acc, wi| acc + wi.abs());
        estimates.push(e);
    }
    let residuals: Vec<T> = estimates.windows(2).map(|w| (w[1] - w[0]).norm()).collect();
    let residual = residuals
        .last()
        .copied()
        .unwrap_or_else(|| (estimates[0] - values[0]).norm());
    let extrapolated = *estimates.last().unwrap_or(&values[0]);
    Ok((
        RegularizationTrace {
            epsilons: cfg.epsilons.clone(),
            values: values.to_vec(),
            extrapolated,
            residuals,
            residual,
        },
        amplification,
    ))
}

fn finish<T: Real>(
    cfg: &Extrapolation<T>,
    rungs: Vec<QuadratureResult<T>>,
    tol: T,
) -> Result<QuadratureResult<T>> {
    let values: Vec<_> = rungs.iter().map(|r| r.value).collect();
    let (trace, amplification) = richardson(cfg, &values)?;
    let quad_err = rungs
        .iter()
        .map(|r| r.abs_error_estimate)
        .fold(T::zero(), T::max);
    let estimate = trace.residual + amplification * quad_err;
    if trace.residual > tol {
        return Err(Error::ExtrapolationDivergence {
            residual: trace.residual.to_f64_lossy(),
            tolerance: tol.to_f64_lossy(),
        });
    }
    Ok(QuadratureResult {
        value: trace.extrapolated,
        abs_error_estimate: estimate,
        evaluations: rungs.iter().map(|r| r.evaluations).sum(),
        converged: estimate <= tol,
        trace: Some(trace),
    })
}

fn uniform_points<T: Real>(end: T, width: T) -> Vec<T> {
    let panels = (end / width).ceil().to_usize().unwrap_or(1).max(1);
    let step = end / T::count(panels);
    (0..=panels).map(|i| step * T::count(i)).collect()
}

/// `lim_{eps -> 0} int_0^inf f(x) exp(-eps x) dx` on the configured ladder.
pub(crate) fn damped_half_line<T: Real, F: Fn(T) -> Complex<T>>(
    f: &F,
    tol: T,
    cfg: &Extrapolation<T>,
) -> Result<QuadratureResult<T>> {
    cfg.validate()?;
    let mut rungs = Vec::with_capacity(cfg.epsilons.len());
    for &eps in &cfg.epsilons {
        let end = cfg.cutoff / eps;
        let points = uniform_points(end, cfg.panel_width);
        let g = |x: T| f(x) * (-eps * x).exp();
        rungs.push(adaptive(&g, &points, &QuadOptions::abs(cfg.rung_tol))?);
    }
    finish(cfg, rungs, tol)
}

/// `int_0^inf h(x) exp(i beta x^2) dx` as the `eps -> 0` limit of the
/// Gaussian-damped integrals with `exp(-(eps - i beta) x^2)`.
///
/// Breakpoints sit at `sqrt(k pi / beta)`, one per half-period of the phase.
pub fn integrate_oscillatory_gaussian<T: Real, H: Fn(T) -> Complex<T>>(
    h: H,
    beta: T,
    tol: T,
) -> Result<QuadratureResult<T>> {
    integrate_oscillatory_gaussian_with(h, beta, tol, &Extrapolation::default())
}

pub fn integrate_oscillatory_gaussian_with<T: Real, H: Fn(T) -> Complex<T>>(
    h: H,
    beta: T,
    tol: T,
    cfg: &Extrapolation<T>,
) -> Result<QuadratureResult<T>> {
    cfg.validate()?;
    if !(beta > T::zero()) {
        return Err(Error::domain(format!("beta must be positive, got {beta}")));
    }
    let mut rungs = Vec::with_capacity(cfg.epsilons.len());
    for &eps in &cfg.epsilons {
        let end = (cfg.cutoff / eps).sqrt();
        let phase_end = beta * end * end / T::PI();
        let count = phase_end.ceil().to_usize().unwrap_or(1).max(1);
        let mut points: Vec<T> = (0..count)
            .map(|k| (T::count(k) * T::PI() / beta).sqrt())
            .collect();
        points.push(end);
        let g = |x: T| h(x) * Complex::new(-eps * x * x, beta * x * x).exp();
        rungs.push(adaptive(&g, &points, &QuadOptions::abs(cfg.rung_tol))?);
    }
    finish(cfg, rungs, tol)
}
