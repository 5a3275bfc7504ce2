use std::fmt;
use std::sync::Arc;

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{is_finite_c, re, Real};
use crate::series::{Accumulator, SeriesControl, Summed};
use crate::specfun::{gamma_real, ln_abs_gamma_real};

use super::sequence::{GammaFactor, GammaRatioSequence};
use super::series::{pow_principal, UmbralSeries};

type MultiplierFn<T> = dyn Fn(T) -> Result<Complex<T>> + Send + Sync;

/// A caller-supplied multiplier, for tests of the dilation engine.
#[derive(Clone)]
pub struct CustomMultiplier<T> {
    label: String,
    lower_bound: T,
    f: Arc<MultiplierFn<T>>,
}

impl<T: Real> CustomMultiplier<T> {
    pub fn from_fn(
        label: impl Into<String>,
        lower_bound: T,
        f: impl Fn(T) -> Result<Complex<T>> + Send + Sync + 'static,
    ) -> Self {
        Self {
            label: label.into(),
            lower_bound,
            f: Arc::new(f),
        }
    }

    /// Multiplier known only at the listed abscissae.
    pub fn tabulated(label: impl Into<String>, table: Vec<(T, Complex<T>)>) -> Self {
        let lower = table
            .iter()
            .map(|(a, _)| *a)
            .fold(T::infinity(), T::min);
        let lower_bound = lower - T::one();
        Self::from_fn(label, lower_bound, move |a| {
            table
                .iter()
                .find(|(t, _)| *t == a)
                .map(|(_, v)| *v)
                .ok_or_else(|| Error::domain(format!("multiplier not tabulated at {a}")))
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }
}

impl<T: fmt::Debug> fmt::Debug for CustomMultiplier<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Custom({:?}, a > {:?})", self.label, self.lower_bound)
    }
}

/// `F(a) = int w(t) g(t)^a dt` for a dilation family `int f(x g(t)) w(t) dt`.
///
/// | kind | kernel | `F(a)` | domain |
/// |---|---|---|---|
/// | `GaussianKernel` | `g = exp(-t^2)` on the real line | `sqrt(pi / a)` | `a > 0` |
/// | `LorentzPower` | `g = 1 / (1 + t^2)` on the real line | `sqrt(pi) Gamma(a - 1/2) / Gamma(a)` | `a > 1/2` |
/// | `BorelFactorial` | `w = exp(-t)`, `g = t` on `(0, inf)` | `Gamma(a + 1)` | `a > -1` |
/// | `BetaKernel` | `w = t^(alpha-1) (1-t)^(beta-1)`, `g = t` on `(0, 1)` | `B(alpha + a, beta)` | `a > -alpha` |
#[derive(Debug, Clone)]
pub enum MellinMultiplier<T> {
    GaussianKernel,
    LorentzPower,
    BorelFactorial,
    BetaKernel { alpha: T, beta: T },
    Custom(CustomMultiplier<T>),
}

impl<T: Real> MellinMultiplier<T> {
    pub fn beta_kernel(alpha: T, beta: T) -> Result<Self> {
        if !(alpha > T::zero() && beta > T::zero()) {
            return Err(Error::domain(format!(
                "Beta kernel needs alpha, beta > 0, got ({alpha}, {beta})"
            )));
        }
        Ok(Self::BetaKernel { alpha, beta })
    }

    pub fn name(&self) -> &str {
        match self {
            Self::GaussianKernel => "gaussian",
            Self::LorentzPower => "lorentz",
            Self::BorelFactorial => "borel",
            Self::BetaKernel { .. } => "beta",
            Self::Custom(c) => c.label(),
        }
    }

    /// `F` is defined for every real `a` strictly above this bound.
    pub fn lower_bound(&self) -> T {
        match self {
            Self::GaussianKernel => T::zero(),
            Self::LorentzPower => T::lit(0.5),
            Self::BorelFactorial => -T::one(),
            Self::BetaKernel { alpha, .. } => -*alpha,
            Self::Custom(c) => c.lower_bound,
        }
    }

    fn check(&self, a: T) -> Result<()> {
        if a > self.lower_bound() {
            Ok(())
        } else {
            Err(Error::domain(format!(
                "{} multiplier needs a > {}, got {a}",
                self.name(),
                self.lower_bound()
            )))
        }
    }

    pub fn eval(&self, a: T) -> Result<Complex<T>> {
        self.check(a)?;
        let half = T::lit(0.5);
        let v = match self {
            Self::GaussianKernel => (T::PI() / a).sqrt(),
            Self::LorentzPower => T::PI().sqrt() * gamma_real(a - half)? / gamma_real(a)?,
            Self::BorelFactorial => gamma_real(a + T::one())?,
            Self::BetaKernel { alpha, beta } => {
                crate::specfun::beta_real(*alpha + a, *beta)?
            }
            Self::Custom(c) => return (c.f)(a),
        };
        Ok(re(v))
    }

    /// `ln F(a)`; every built-in `F` is positive on its domain.
    pub fn ln_eval(&self, a: T) -> Result<Complex<T>> {
        self.check(a)?;
        let half = T::lit(0.5);
        let lg = |x: T| ln_abs_gamma_real(x).map(|(l, _)| l);
        let v = match self {
            Self::GaussianKernel => half * (T::PI().ln() - a.ln()),
            Self::LorentzPower => half * T::PI().ln() + lg(a - half)? - lg(a)?,
            Self::BorelFactorial => lg(a + T::one())?,
            Self::BetaKernel { alpha, beta } => {
                lg(*alpha + a)? + lg(*beta)? - lg(*alpha + *beta + a)?
            }
            Self::Custom(c) => return Ok((c.f)(a)?.ln()),
        };
        Ok(re(v))
    }
}

/// `f(x) = sum_k (+-1)^k alpha(k) (lambda x)^(m k + p)`.
///
/// `arg_scale` (`lambda`) carries geometric factors such as the `2^-(2k+n)` of
/// `J_n`, which a Gamma ratio cannot express. `terms` truncates the series to
/// a fixed number of terms (a polynomial or a monomial).
#[derive(Debug, Clone, PartialEq)]
pub struct PowerSeriesSpec<T> {
    pub alpha: GammaRatioSequence<T>,
    pub stride: usize,
    pub offset: T,
    pub alternating: bool,
    pub arg_scale: T,
    pub terms: Option<usize>,
}

impl<T: Real> PowerSeriesSpec<T> {
    pub fn new(alpha: GammaRatioSequence<T>, stride: usize, offset: T, alternating: bool) -> Result<Self> {
        if stride == 0 {
            return Err(Error::parameter("stride must be a positive integer"));
        }
        Ok(Self {
            alpha,
            stride,
            offset,
            alternating,
            arg_scale: T::one(),
            terms: None,
        })
    }

    pub fn with_arg_scale(mut self, lambda: T) -> Self {
        self.arg_scale = lambda;
        self
    }

    pub fn truncated(mut self, terms: usize) -> Self {
        self.terms = Some(terms);
        self
    }

    /// The single term `x^n`.
    pub fn monomial(n: T) -> Self {
        Self {
            alpha: GammaRatioSequence::constant(T::one()),
            stride: 1,
            offset: n,
            alternating: false,
            arg_scale: T::one(),
            terms: Some(1),
        }
    }

    /// `J_n(x) = sum_k (-1)^k (x/2)^(2k+n) / (k! Gamma(k + n + 1))`.
    pub fn bessel_j(n: T) -> Result<Self> {
        if !(n >= T::zero()) {
            return Err(Error::domain(format!("Bessel order must be >= 0, got {n}")));
        }
        let alpha = GammaRatioSequence::unchecked(
            Complex::one(),
            vec![],
            vec![GammaFactor::unit(T::one()), GammaFactor::unit(n + T::one())],
        );
        Ok(Self::new(alpha, 2, n, true)?.with_arg_scale(T::lit(0.5)))
    }

    /// `x^2 exp(-x^2) = sum_k (-1)^k x^(2k+2) / k!`.
    pub fn gaussian_moment() -> Self {
        let alpha = GammaRatioSequence::unchecked(Complex::one(), vec![], vec![GammaFactor::unit(T::one())]);
        Self {
            alpha,
            stride: 2,
            offset: T::lit(2.0),
            alternating: true,
            arg_scale: T::one(),
            terms: None,
        }
    }

    /// Rewrites `C x^p sum_k phi(k+s) (-a x^m)^k / k!` for real `a > 0`.
    pub fn from_umbral(f: &UmbralSeries<T>) -> Result<Self> {
        let a = f.arg_scale();
        if a.im != T::zero() || !(a.re > T::zero()) {
            return Err(Error::domain("from_umbral needs a real positive arg_scale"));
        }
        let m = f.arg_power();
        let lambda = a.re.powf(T::count(m).recip());
        let scale = f.overall_scale() / lambda.powf(f.prefactor_power());
        let alpha = f
            .phi()
            .shifted(f.shift())
            .over_gamma(GammaFactor::unit(T::one()))
            .scaled(scale);
        Ok(Self::new(alpha, m, f.prefactor_power(), true)?.with_arg_scale(lambda))
    }

    /// Signed coefficient of `(lambda x)^(m k + p)`.
    pub fn coefficient(&self, k: usize) -> Result<Complex<T>> {
        let a = self.alpha.eval(re(T::count(k)))?;
        Ok(if self.alternating && k % 2 == 1 { -a } else { a })
    }

    pub fn exponent(&self, k: usize) -> T {
        T::count(self.stride * k) + self.offset
    }
}

/// `I(x) = sum_k alpha(k) F(m k + p) x^(m k + p)`, the action of `F(x d/dx)`.
pub fn apply_mellin_multiplier<T: Real>(
    mult: &MellinMultiplier<T>,
    spec: &PowerSeriesSpec<T>,
    x: T,
    tol: T,
) -> Result<Complex<T>> {
    apply_mellin_multiplier_summed(mult, spec, x, SeriesControl::with_tol(tol)).map(|s| s.value)
}

/// [`apply_mellin_multiplier`] with the tail metadata.
pub fn apply_mellin_multiplier_summed<T: Real>(
    mult: &MellinMultiplier<T>,
    spec: &PowerSeriesSpec<T>,
    x: T,
    ctrl: SeriesControl<T>,
) -> Result<Summed<Complex<T>, T>> {
    // Exponents increase with k, so the k = 0 exponent decides the domain.
    mult.eval(spec.offset)?;
    let z = re(spec.arg_scale * x);
    let ln_z = if z == Complex::<T>::zero() { None } else { Some(z.ln()) };

    let term = |k: usize| -> Result<Complex<T>> {
        let e = spec.exponent(k);
        let direct = spec.coefficient(k)? * mult.eval(e)? * pow_principal(z, e)?;
        if is_finite_c(direct) && (direct != Complex::<T>::zero() || ln_z.is_none()) {
            return Ok(direct);
        }
        let Some(lz) = ln_z else { return Ok(direct) };
        let Some(la) = spec.alpha.ln_eval(re(T::count(k)))? else {
            return Ok(Complex::zero());
        };
        let sign = if spec.alternating && k % 2 == 1 { -T::one() } else { T::one() };
        Ok((la + mult.ln_eval(e)? + lz * e).exp() * sign)
    };

    if let Some(n) = spec.terms {
        let mut sum = Complex::<T>::zero();
        let mut last = T::zero();
        for k in 0..n {
            let t = term(k)?;
            last = t.norm();
            sum += t;
        }
        return Ok(Summed {
            value: sum,
            tail: crate::series::SeriesTail {
                terms_used: n.max(1),
                last_term_magnitude: last,
                converged: true,
            },
        });
    }

    let mut acc = Accumulator::new(ctrl);
    let mut k = 0;
    while !acc.push(term(k)?)? {
        k += 1;
    }
    Ok(acc.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn kinds() -> Vec<MellinMultiplier<f64>> {
        vec![
            MellinMultiplier::GaussianKernel,
            MellinMultiplier::LorentzPower,
            MellinMultiplier::BorelFactorial,
            MellinMultiplier::beta_kernel(2.0, 3.0).unwrap(),
            MellinMultiplier::Custom(CustomMultiplier::from_fn("square", 0.0, |a| {
                Ok(Complex::new(a * a, 0.0))
            })),
        ]
    }

    #[test]
    fn kernel_values() {
        let g = MellinMultiplier::<f64>::GaussianKernel.eval(1.0).unwrap();
        assert!((g.re - PI.sqrt()).abs() < 1e-15);
        let l = MellinMultiplier::<f64>::LorentzPower.eval(2.0).unwrap();
        assert!((l.re - PI / 2.0).abs() < 1e-15);
        let l = MellinMultiplier::<f64>::LorentzPower.eval(3.0).unwrap();
        assert!((l.re - 3.0 * PI / 8.0).abs() < 1e-15);
        let b = MellinMultiplier::<f64>::BorelFactorial.eval(4.0).unwrap();
        assert_eq!(b.re, 24.0);
        let beta = MellinMultiplier::beta_kernel(1.0f64, 1.0).unwrap().eval(1.0).unwrap();
        assert!((beta.re - 0.5).abs() < 1e-15);
    }

    #[test]
    fn domains() {
        assert!(MellinMultiplier::<f64>::GaussianKernel.eval(0.0).is_err());
        assert!(MellinMultiplier::<f64>::LorentzPower.eval(0.5).is_err());
        assert!(MellinMultiplier::<f64>::BorelFactorial.eval(-1.0).is_err());
        assert!(MellinMultiplier::beta_kernel(0.5f64, 1.0).unwrap().eval(-0.5).is_err());
        assert!(MellinMultiplier::beta_kernel(0.0f64, 1.0).is_err());
        let spec = PowerSeriesSpec::monomial(0.25);
        assert!(apply_mellin_multiplier(&MellinMultiplier::LorentzPower, &spec, 1.0, 1e-15).is_err());
    }

    #[test]
    fn monomial_eigenvalue() {
        for mult in kinds() {
            for n in [0.0, 0.5, 1.0, 2.0, 3.5] {
                if n <= mult.lower_bound() {
                    continue;
                }
                let x = 1.7;
                let got = apply_mellin_multiplier(&mult, &PowerSeriesSpec::monomial(n), x, 1e-15).unwrap();
                let want = mult.eval(n).unwrap() * x.powf(n);
                assert!((got - want).norm() <= 1e-15 * want.norm(), "{} n={n}", mult.name());
            }
        }
    }

    #[test]
    fn tabulated_custom() {
        let table = vec![(2.0, Complex::new(7.0, 0.0))];
        let mult = MellinMultiplier::Custom(CustomMultiplier::tabulated("t", table));
        let v = apply_mellin_multiplier(&mult, &PowerSeriesSpec::monomial(2.0), 3.0, 1e-15).unwrap();
        assert_eq!(v.re, 63.0);
        assert!(mult.eval(1.5).is_err());
    }

    #[test]
    fn lorentz_on_gaussian_moment_at_origin() {
        let spec = PowerSeriesSpec::<f64>::gaussian_moment();
        let v = apply_mellin_multiplier(&MellinMultiplier::LorentzPower, &spec, 0.0, 1e-15).unwrap();
        assert_eq!(v.re, 0.0);
    }

    #[test]
    fn from_umbral_reproduces_function() {
        let f = UmbralSeries::struve(0.5).unwrap();
        let spec = PowerSeriesSpec::from_umbral(&f).unwrap();
        let borel_free = MellinMultiplier::Custom(CustomMultiplier::from_fn("one", -10.0, |_| {
            Ok(Complex::new(1.0, 0.0))
        }));
        let x = 2.0;
        let direct = f.eval(Complex::new(x, 0.0), 1e-16).unwrap();
        let via_spec = apply_mellin_multiplier(&borel_free, &spec, x, 1e-16).unwrap();
        assert!((direct - via_spec).norm() < 1e-14);
    }

    #[test]
    fn borel_overflow_goes_through_logs() {
        // sum_k (-1)^k k! x^k / k! at x = 0.99 needs Gamma beyond f64 range.
        let spec = PowerSeriesSpec::new(
            GammaRatioSequence::unchecked(Complex::new(1.0, 0.0), vec![], vec![GammaFactor::unit(1.0)]),
            1,
            0.0,
            true,
        )
        .unwrap();
        let v = apply_mellin_multiplier(&MellinMultiplier::BorelFactorial, &spec, 0.99, 1e-15).unwrap();
        assert!((v.re - 1.0f64 / 1.99).abs() < 1e-12);
    }
}
