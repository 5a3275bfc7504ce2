//! Guarded summation of infinite series.
//!
//! Every series in the crate stops when `|term| <= tol * |partial sum|` holds for
//! a run of consecutive terms, with a hard cap on the number of terms. An
//! optional ratio gate delays the stopping rule until the term magnitudes have
//! started to shrink, which protects series whose early terms are not monotone.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalar::Real;

/// Default hard cap on the number of terms.
pub const DEFAULT_TERM_CAP: usize = 10_000;

/// Stopping-rule configuration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl<T> {
    /// Relative size below which a term counts as negligible.
    pub tol: T,
    /// Maximum number of terms before giving up.
    pub cap: usize,
    /// How many consecutive negligible terms end the summation.
    pub consecutive: usize,
    /// When set, the stopping rule is armed only after some term ratio
    /// `|t_k / t_{k-1}|` falls below this value.
    pub ratio_gate: Option<T>,
}

impl<T: Real> Default for SeriesControl<T> {
    fn default() -> Self {
        Self {
            tol: T::epsilon(),
            cap: DEFAULT_TERM_CAP,
            consecutive: 3,
            ratio_gate: None,
        }
    }
}

impl<T: Real> SeriesControl<T> {
    pub fn with_tol(tol: T) -> Self {
        Self {
            tol,
            ..Self::default()
        }
    }

    pub fn cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn ratio_gate(mut self, gate: T) -> Self {
        self.ratio_gate = Some(gate);
        self
    }
}

/// Truncation metadata of a summed series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesTail<T> {
    pub terms_used: usize,
    pub last_term_magnitude: T,
    pub converged: bool,
}

/// A series value together with its truncation metadata.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Summed<V, T> {
    pub value: V,
    pub tail: SeriesTail<T>,
}

impl<V, T> Summed<V, T> {
    pub fn map<W>(self, f: impl FnOnce(V) -> W) -> Summed<W, T> {
        Summed {
            value: f(self.value),
            tail: self.tail,
        }
    }
}

/// Values a series can be summed over: real scalars and complex numbers.
pub trait SeriesValue<T: Real>: Copy + Zero + std::ops::AddAssign {
    fn magnitude(&self) -> T;
}

impl<T: Real> SeriesValue<T> for T {
    #[inline]
    fn magnitude(&self) -> T {
        self.abs()
    }
}

impl<T: Real> SeriesValue<T> for Complex<T> {
    #[inline]
    fn magnitude(&self) -> T {
        self.norm()
    }
}

/// Incremental form of the stopping rule, for callers that generate terms by
/// recurrence.
#[derive(Debug, Clone)]
pub struct Accumulator<V, T> {
    ctrl: SeriesControl<T>,
    sum: V,
    terms: usize,
    quiet_run: usize,
    previous: Option<T>,
    armed: bool,
    last: T,
}

impl<V: SeriesValue<T>, T: Real> Accumulator<V, T> {
    pub fn new(ctrl: SeriesControl<T>) -> Self {
        Self {
            armed: ctrl.ratio_gate.is_none(),
            ctrl,
            sum: V::zero(),
            terms: 0,
            quiet_run: 0,
            previous: None,
            last: T::zero(),
        }
    }

    /// Adds a term. Returns `Ok(true)` once the stopping rule is satisfied.
    pub fn push(&mut self, term: V) -> Result<bool> {
        let mag = term.magnitude();
        if !mag.is_finite() {
            return Err(Error::NonConvergence {
                terms: self.terms,
                last_term: mag.to_f64_lossy(),
            });
        }
        self.sum += term;
        self.terms += 1;
        self.last = mag;

        if !self.armed {
            if let (Some(gate), Some(prev)) = (self.ctrl.ratio_gate, self.previous) {
                if prev > T::zero() && mag / prev < gate {
                    self.armed = true;
                }
            }
        }
        self.previous = Some(mag);

        if self.armed && mag <= self.ctrl.tol * self.sum.magnitude() {
            self.quiet_run += 1;
        } else {
            self.quiet_run = 0;
        }
        if self.quiet_run >= self.ctrl.consecutive {
            return Ok(true);
        }
        if self.terms >= self.ctrl.cap {
            return Err(Error::NonConvergence {
                terms: self.terms,
                last_term: mag.to_f64_lossy(),
            });
        }
        Ok(false)
    }

    pub fn sum(&self) -> V {
        self.sum
    }

    pub fn finish(self) -> Summed<V, T> {
        Summed {
            value: self.sum,
            tail: SeriesTail {
                terms_used: self.terms,
                last_term_magnitude: self.last,
                converged: self.quiet_run >= self.ctrl.consecutive,
            },
        }
    }
}

/// Sums `term(0) + term(1) + ...` under the stopping rule.
pub fn series_sum<V, T, F>(mut term: F, ctrl: SeriesControl<T>) -> Result<Summed<V, T>>
where
    V: SeriesValue<T>,
    T: Real,
    F: FnMut(usize) -> V,
{
    let mut acc = Accumulator::new(ctrl);
    let mut k = 0;
    while !acc.push(term(k))? {
        k += 1;
    }
    Ok(acc.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_half() {
        let s = series_sum(|k| 0.5f64.powi(k as i32), SeriesControl::default()).unwrap();
        assert!((s.value - 2.0).abs() < 1e-15);
        assert!(s.tail.converged);
        assert!(s.tail.last_term_magnitude <= f64::EPSILON * s.value.abs());
    }

    #[test]
    fn alternating_factorial() {
        let mut t = 1.0f64;
        let s = series_sum(
            |k| {
                if k > 0 {
                    t *= -1.0 / k as f64;
                }
                t
            },
            SeriesControl::default(),
        )
        .unwrap();
        assert!((s.value - (-1.0f64).exp()).abs() < 4e-16);
    }

    #[test]
    fn cap_exceeded() {
        let err = series_sum(|k| 1.0 / (k as f64 + 1.0), SeriesControl::default().cap(500))
            .unwrap_err();
        assert!(matches!(err, Error::NonConvergence { terms: 500, .. }));
    }

    #[test]
    fn divergent_terms_rejected() {
        let err = series_sum(|k| 10f64.powi(k as i32 * 40), SeriesControl::default()).unwrap_err();
        assert!(matches!(err, Error::NonConvergence { .. }));
    }

    #[test]
    fn ratio_gate_waits_for_decay() {
        // Terms 0, 0, 0, 1, 1/2, 1/4, ... : without the gate the leading zeros
        // would end the summation immediately.
        let term = |k: usize| if k < 3 { 0.0 } else { 0.5f64.powi(k as i32 - 3) };
        let early = series_sum(term, SeriesControl::default()).unwrap();
        assert_eq!(early.value, 0.0);
        let gated = series_sum(term, SeriesControl::default().ratio_gate(0.9)).unwrap();
        assert!((gated.value - 2.0).abs() < 1e-15);
    }

    #[test]
    fn complex_terms() {
        let z = Complex::new(0.0, 0.5f64);
        let mut t = Complex::new(1.0, 0.0);
        let s = series_sum(
            |k| {
                if k > 0 {
                    t *= z;
                }
                t
            },
            SeriesControl::default(),
        )
        .unwrap();
        let expected = Complex::new(1.0, 0.0) / (Complex::new(1.0, 0.0) - z);
        assert!((s.value - expected).norm() < 1e-15);
    }
}
