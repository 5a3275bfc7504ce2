//! Borel transform pair and the Beta (Euler-kernel) transform, acting
//! termwise on coefficient series.

use num_complex::Complex;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{is_finite_c, re, Real};
use crate::series::{series_sum, SeriesControl, Summed};
use crate::specfun::{factorial, gamma, gamma_real};
use crate::umbral::{GammaFactor, GammaRatioSequence, PowerSeriesSpec, UmbralSeries};

/// Coefficient law `k -> c(k)`.
#[derive(Debug, Clone, PartialEq)]
pub enum CoefficientLaw<T> {
    Gamma(GammaRatioSequence<T>),
    /// Finitely many coefficients; the series is a polynomial.
    Explicit(Vec<Complex<T>>),
}

/// `g(x) = sum_k (+-1)^k c(k) (lambda x)^(m k + p)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSeries<T> {
    law: CoefficientLaw<T>,
    stride: usize,
    offset: T,
    alternating: bool,
    arg_scale: T,
}

/// Which variable of the hybrid polynomial is Borel transformed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BorelVariable {
    First,
    Second,
}

impl<T: Real> CoefficientSeries<T> {
    pub fn new(law: CoefficientLaw<T>, stride: usize, offset: T, alternating: bool) -> Result<Self> {
        if stride == 0 {
            return Err(Error::parameter("stride must be a positive integer"));
        }
        if !(offset >= T::zero()) {
            return Err(Error::parameter(format!("offset must be >= 0, got {offset}")));
        }
        if let CoefficientLaw::Explicit(c) = &law {
            if c.iter().any(|z| !is_finite_c(*z)) {
                return Err(Error::parameter("coefficients must be finite"));
            }
        }
        Ok(Self {
            law,
            stride,
            offset,
            alternating,
            arg_scale: T::one(),
        })
    }

    pub fn with_arg_scale(mut self, lambda: T) -> Self {
        self.arg_scale = lambda;
        self
    }

    /// `sum_k phi(k) (-x)^k / k!`, the shape of an umbral series with
    /// `p = s = 0`, `m = 1`, `a = 1`.
    pub fn from_umbral(f: &UmbralSeries<T>) -> Result<Self> {
        let spec = PowerSeriesSpec::from_umbral(f)?;
        Self::from_spec(&spec)
    }

    pub fn from_spec(spec: &PowerSeriesSpec<T>) -> Result<Self> {
        let law = match spec.terms {
            None => CoefficientLaw::Gamma(spec.alpha.clone()),
            Some(n) => CoefficientLaw::Explicit(
                (0..n).map(|k| spec.alpha.eval(re(T::count(k)))).collect::<Result<_>>()?,
            ),
        };
        Ok(Self::new(law, spec.stride, spec.offset, spec.alternating)?.with_arg_scale(spec.arg_scale))
    }

    /// `c_k^(m)(x) = sum_r (-1)^r x^(m r + k) / (m r + k)!`.
    pub fn pseudo_trig(k: usize, m: usize) -> Result<Self> {
        if m < 2 || k >= m {
            return Err(Error::parameter(format!("need 0 <= k < m and m >= 2, got k={k}, m={m}")));
        }
        let slope = Ratio::from_integer(m as u32);
        let law = GammaRatioSequence::unchecked(
            Complex::one(),
            vec![],
            vec![GammaFactor::new(T::count(k + 1), slope)],
        );
        Self::new(CoefficientLaw::Gamma(law), m, T::count(k), true)
    }

    /// `1 / (1 + x^m) = sum_r (-1)^r x^(m r)`, `|x| < 1`.
    pub fn geometric(m: usize) -> Result<Self> {
        Self::new(
            CoefficientLaw::Gamma(GammaRatioSequence::constant(T::one())),
            m,
            T::zero(),
            true,
        )
    }

    /// `sum_k phi(k) (-x)^k / (k!)^2`.
    pub fn borel_family(phi: &GammaRatioSequence<T>) -> Result<Self> {
        let law = phi
            .clone()
            .over_gamma(GammaFactor::unit(T::one()))
            .over_gamma(GammaFactor::unit(T::one()));
        Self::new(CoefficientLaw::Gamma(law), 1, T::zero(), true)
    }

    pub fn law(&self) -> &CoefficientLaw<T> {
        &self.law
    }

    pub fn stride(&self) -> usize {
        self.stride
    }

    pub fn offset(&self) -> T {
        self.offset
    }

    pub fn alternating(&self) -> bool {
        self.alternating
    }

    pub fn arg_scale(&self) -> T {
        self.arg_scale
    }

    /// Number of terms, `None` for an infinite series.
    pub fn len(&self) -> Option<usize> {
        match &self.law {
            CoefficientLaw::Gamma(_) => None,
            CoefficientLaw::Explicit(c) => Some(c.len()),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == Some(0)
    }

    /// `c(k)` without the alternating sign.
    pub fn coefficient(&self, k: usize) -> Result<Complex<T>> {
        match &self.law {
            CoefficientLaw::Gamma(g) => g.eval(re(T::count(k))),
            CoefficientLaw::Explicit(c) => Ok(c.get(k).copied().unwrap_or_else(Complex::zero)),
        }
    }

    /// Coefficient of `x^(m k + p)` including sign and `lambda^(m k + p)`.
    pub fn power_coefficient(&self, k: usize) -> Result<Complex<T>> {
        let sign = if self.alternating && k % 2 == 1 { -T::one() } else { T::one() };
        let e = self.exponent(k);
        Ok(self.coefficient(k)? * (sign * self.arg_scale.powf(e)))
    }

    pub fn exponent(&self, k: usize) -> T {
        T::count(self.stride * k) + self.offset
    }

    /// Radius of convergence in `x`, `+inf` for entire series.
    ///
    /// From Stirling, `c(k)` grows like `k!^(sum b_i - sum d_j)` times
    /// `prod b_i^(b_i k) / prod d_j^(d_j k)`.
    pub fn radius_hint(&self) -> T {
        let g = match &self.law {
            CoefficientLaw::Explicit(_) => return T::infinity(),
            CoefficientLaw::Gamma(g) => g,
        };
        let slope = |f: &GammaFactor<T>| f.slope_value();
        let net = g.numer().iter().map(slope).fold(T::zero(), |a, b| a + b)
            - g.denom().iter().map(slope).fold(T::zero(), |a, b| a + b);
        let tiny = T::lit(1e-12);
        if net < -tiny {
            return T::infinity();
        }
        if net > tiny {
            return T::zero();
        }
        let ln_growth = g.numer().iter().map(|f| slope(f) * slope(f).ln()).fold(T::zero(), |a, b| a + b)
            - g.denom().iter().map(|f| slope(f) * slope(f).ln()).fold(T::zero(), |a, b| a + b);
        let per_power = (-ln_growth / T::count(self.stride)).exp();
        per_power / self.arg_scale.abs()
    }

    pub fn eval(&self, x: Complex<T>, tol: T) -> Result<Complex<T>> {
        self.eval_summed(x, SeriesControl::with_tol(tol)).map(|s| s.value)
    }

    pub fn eval_summed(&self, x: Complex<T>, ctrl: SeriesControl<T>) -> Result<Summed<Complex<T>, T>> {
        let radius = self.radius_hint();
        if x.norm() >= radius {
            return Err(Error::domain(format!(
                "|x| = {} outside the radius of convergence {radius}",
                x.norm()
            )));
        }
        let z = x * self.arg_scale;
        let pow = |e: T| -> Result<Complex<T>> {
            if z == Complex::<T>::zero() {
                return Ok(if e == T::zero() { Complex::one() } else { Complex::zero() });
            }
            if z.im == T::zero() && z.re > T::zero() {
                return Ok(re(z.re.powf(e)));
            }
            if e.is_integer() {
                return Ok(z.powi(e.to_i32().unwrap_or(i32::MAX)));
            }
            Ok(z.powf(e))
        };
        let sign = |k: usize| if self.alternating && k % 2 == 1 { -T::one() } else { T::one() };
        if let Some(n) = self.len() {
            let mut v = Complex::<T>::zero();
            let mut last = T::zero();
            for k in 0..n {
                let t = self.coefficient(k)? * pow(self.exponent(k))? * sign(k);
                last = t.norm();
                v += t;
            }
            return Ok(Summed {
                value: v,
                tail: crate::series::SeriesTail {
                    terms_used: n.max(1),
                    last_term_magnitude: last,
                    converged: true,
                },
            });
        }
        let mut err = None;
        let out = series_sum(
            |k| match self.coefficient(k).and_then(|c| Ok(c * pow(self.exponent(k))? * sign(k))) {
                Ok(t) => t,
                Err(e) => {
                    err.get_or_insert(e);
                    Complex::new(T::nan(), T::nan())
                }
            },
            ctrl,
        );
        if let Some(e) = err {
            return Err(e);
        }
        out
    }

    /// The same series in the shape the Mellin-multiplier engine consumes.
    pub fn to_power_series(&self) -> Result<PowerSeriesSpec<T>> {
        match &self.law {
            CoefficientLaw::Gamma(g) => Ok(PowerSeriesSpec::new(g.clone(), self.stride, self.offset, self.alternating)?
                .with_arg_scale(self.arg_scale)),
            CoefficientLaw::Explicit(_) => Err(Error::parameter(
                "explicit coefficient lists have no Gamma-ratio law",
            )),
        }
    }

    fn map_power_factorial(&self, multiply: bool) -> Result<Self> {
        let law = match &self.law {
            CoefficientLaw::Gamma(g) => {
                let factor = GammaFactor::new(self.offset + T::one(), Ratio::from_integer(self.stride as u32));
                CoefficientLaw::Gamma(if multiply {
                    g.clone().times_gamma(factor)
                } else {
                    g.clone().over_gamma(factor)
                })
            }
            CoefficientLaw::Explicit(c) => {
                let mut out = Vec::with_capacity(c.len());
                for (k, &v) in c.iter().enumerate() {
                    let n = self.exponent(k);
                    let f = if n.is_integer() {
                        factorial::<T>(n.to_usize().unwrap_or(0))
                    } else {
                        gamma_real(n + T::one())?
                    };
                    out.push(if multiply { v * f } else { v / f });
                }
                CoefficientLaw::Explicit(out)
            }
        };
        Ok(Self { law, ..self.clone() })
    }
}

/// `L(x) = int_0^inf exp(-t) g(x t) dt`: the coefficient of `x^n` gains `n!`.
///
/// For a Gamma law the factor `Gamma(p + 1 + m k)` cancels against an equal
/// denominator factor, so a transform followed by its inverse is exact.
pub fn borel_transform<T: Real>(g: &CoefficientSeries<T>) -> Result<CoefficientSeries<T>> {
    g.map_power_factorial(true)
}

/// Inverse of [`borel_transform`]: the coefficient of `x^n` loses `n!`.
pub fn borel_inverse<T: Real>(l: &CoefficientSeries<T>) -> Result<CoefficientSeries<T>> {
    l.map_power_factorial(false)
}

/// Borel transform of the hybrid polynomial
/// `H~_n^(m)(x, y) = sum_k x^(n - m k) y^k / (k! ((n - m k)!)^2)`.
///
/// `First` integrates `exp(-t) H~(x t, y)` and gives `H_n^(m)(x, y) / n!`;
/// `Second` integrates `exp(-t) H~(x, y t)` and gives `e_n^(m)(x, y)`.
pub fn borel_hybrid_hermite<T: Real>(
    n: usize,
    m: usize,
    x: Complex<T>,
    y: Complex<T>,
    variable: BorelVariable,
) -> Result<Complex<T>> {
    if m < 2 {
        return Err(Error::parameter(format!("m must be >= 2, got {m}")));
    }
    if n > crate::specfun::MAX_DEGREE {
        return Err(Error::parameter(format!("degree {n} exceeds {}", crate::specfun::MAX_DEGREE)));
    }
    let top = n / m;
    let mut coeffs = Vec::with_capacity(top + 1);
    match variable {
        BorelVariable::First => {
            // Polynomial in x: the term k sits at x^(n - m k), y^k is a constant.
            for k in (0..=top).rev() {
                let j = n - m * k;
                let c = y.powu(k as u32) / (factorial::<T>(k) * factorial::<T>(j) * factorial::<T>(j));
                coeffs.push((j, c));
            }
            transform_polynomial(&coeffs, x)
        }
        BorelVariable::Second => {
            for k in 0..=top {
                let j = n - m * k;
                let c = x.powu(j as u32) / (factorial::<T>(k) * factorial::<T>(j) * factorial::<T>(j));
                coeffs.push((k, c));
            }
            transform_polynomial(&coeffs, y)
        }
    }
}

/// Borel transform of `sum c_i z^(e_i)` evaluated at `z`.
fn transform_polynomial<T: Real>(terms: &[(usize, Complex<T>)], z: Complex<T>) -> Result<Complex<T>> {
    let degree = terms.iter().map(|t| t.0).max().unwrap_or(0);
    let mut dense = vec![Complex::<T>::zero(); degree + 1];
    for &(e, c) in terms {
        dense[e] += c;
    }
    let series = CoefficientSeries::new(CoefficientLaw::Explicit(dense), 1, T::zero(), false)?;
    borel_transform(&series)?.eval(z, T::epsilon())
}

/// `I(x) = int_0^1 u^(alpha-1) (1-u)^(beta-1) f(u x) du` for
/// `f(x) = C sum_n phi(n) (-x)^n / n!`: the series with
/// `Psi(n) = B(alpha + n, beta) phi(n)`.
pub fn beta_transform<T: Real>(f: &UmbralSeries<T>, alpha: T, beta: T) -> Result<CoefficientSeries<T>> {
    if !(alpha > T::zero() && beta > T::zero()) {
        return Err(Error::domain(format!(
            "Beta transform needs alpha, beta > 0, got ({alpha}, {beta})"
        )));
    }
    if !f.is_basic() {
        return Err(Error::parameter("beta_transform needs p = 0, s = 0, m = 1, a = 1"));
    }
    let scale = f.overall_scale() * gamma(re(beta))?;
    let law = f
        .phi()
        .clone()
        .times_gamma(GammaFactor::unit(alpha))
        .over_gamma(GammaFactor::unit(alpha + beta))
        .over_gamma(GammaFactor::unit(T::one()))
        .scaled(scale);
    CoefficientSeries::new(CoefficientLaw::Gamma(law), 1, T::zero(), true)
}
