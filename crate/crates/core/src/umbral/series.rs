use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{is_finite_c, re, Real};
use crate::series::{Accumulator, SeriesControl, Summed};
use crate::specfun::ln_gamma;

use super::sequence::GammaRatioSequence;

/// `f(x) = C x^p sum_k phi(k + s) (-a x^m)^k / k!`.
///
/// With `phi` read as the umbral image `c^k phi(0) = phi(k)` this is
/// `C x^p c^s exp(-a c x^m) phi(0)`.
#[derive(Debug, Clone, PartialEq)]
pub struct UmbralSeries<T> {
    phi: GammaRatioSequence<T>,
    prefactor_power: T,
    shift: T,
    arg_power: usize,
    arg_scale: Complex<T>,
    overall_scale: Complex<T>,
}

impl<T: Real> UmbralSeries<T> {
    pub fn new(
        phi: GammaRatioSequence<T>,
        prefactor_power: T,
        shift: T,
        arg_power: usize,
        arg_scale: Complex<T>,
        overall_scale: Complex<T>,
    ) -> Result<Self> {
        if arg_power == 0 {
            return Err(Error::parameter("arg_power must be a positive integer"));
        }
        if !(shift >= T::zero()) {
            return Err(Error::parameter(format!("shift must be >= 0, got {shift}")));
        }
        if !prefactor_power.is_finite() || !is_finite_c(arg_scale) || !is_finite_c(overall_scale) {
            return Err(Error::parameter("series parameters must be finite"));
        }
        Ok(Self {
            phi,
            prefactor_power,
            shift,
            arg_power,
            arg_scale,
            overall_scale,
        })
    }

    /// `f(x) = sum_k phi(k) (-x)^k / k!`, the shape the master theorem acts on.
    pub fn basic(phi: GammaRatioSequence<T>) -> Self {
        Self {
            phi,
            prefactor_power: T::zero(),
            shift: T::zero(),
            arg_power: 1,
            arg_scale: Complex::one(),
            overall_scale: Complex::one(),
        }
    }

    /// `exp(-x)`.
    pub fn exponential() -> Self {
        Self::basic(GammaRatioSequence::constant(T::one()))
    }

    /// `1 / (1 + x)` for `|x| < 1`, continued by the master theorem.
    pub fn geometric() -> Self {
        Self::basic(GammaRatioSequence::factorial())
    }

    /// `exp(-x^2)`.
    pub fn gaussian() -> Self {
        Self {
            arg_power: 2,
            ..Self::exponential()
        }
    }

    /// `J_n(2x) = x^n sum_k (-x^2)^k / (k! Gamma(n + k + 1))`.
    pub fn bessel_j(n: T) -> Result<Self> {
        if !(n >= T::zero()) {
            return Err(Error::domain(format!("Bessel order must be >= 0, got {n}")));
        }
        Self::new(GammaRatioSequence::bessel(), n, n, 2, Complex::one(), Complex::one())
    }

    /// Struve `H_nu(x) = 2^-(nu+1) x^(nu+1) sum_k phi(k) (-x^2/4)^k / k!`.
    pub fn struve(nu: T) -> Result<Self> {
        let two = T::lit(2.0);
        Self::new(
            GammaRatioSequence::struve(nu)?,
            nu + T::one(),
            T::zero(),
            2,
            re(T::lit(0.25)),
            re(two.powf(-(nu + T::one()))),
        )
    }

    /// `x -> f(b x)`, folding `b^p` into `C` and `b^m` into `a`.
    pub fn dilated(&self, b: T) -> Result<Self> {
        if !(b > T::zero()) {
            return Err(Error::domain(format!("dilation must be positive, got {b}")));
        }
        Ok(Self {
            overall_scale: self.overall_scale * b.powf(self.prefactor_power),
            arg_scale: self.arg_scale * b.powi(self.arg_power as i32),
            ..self.clone()
        })
    }

    pub fn phi(&self) -> &GammaRatioSequence<T> {
        &self.phi
    }

    pub fn prefactor_power(&self) -> T {
        self.prefactor_power
    }

    pub fn shift(&self) -> T {
        self.shift
    }

    pub fn arg_power(&self) -> usize {
        self.arg_power
    }

    pub fn arg_scale(&self) -> Complex<T> {
        self.arg_scale
    }

    pub fn overall_scale(&self) -> Complex<T> {
        self.overall_scale
    }

    /// `true` for the `p = 0, s = 0, m = 1, a = 1` shape.
    pub fn is_basic(&self) -> bool {
        self.prefactor_power == T::zero()
            && self.shift == T::zero()
            && self.arg_power == 1
            && self.arg_scale == Complex::one()
    }

    /// Coefficient of `x^(m k + p)`: `C phi(k + s) (-a)^k / k!`.
    pub fn coefficient(&self, k: usize) -> Result<Complex<T>> {
        let mut w = self.overall_scale;
        for j in 1..=k {
            w = w * (-self.arg_scale) / T::count(j);
        }
        Ok(self.phi.eval(re(T::count(k) + self.shift))? * w)
    }

    pub fn eval(&self, x: Complex<T>, tol: T) -> Result<Complex<T>> {
        eval_umbral_series(self, x, tol)
    }
}

/// `x^p` on the principal branch, using real arithmetic where possible.
pub(crate) fn pow_principal<T: Real>(x: Complex<T>, p: T) -> Result<Complex<T>> {
    if x == Complex::<T>::zero() {
        return if p == T::zero() {
            Ok(Complex::one())
        } else if p > T::zero() {
            Ok(Complex::zero())
        } else {
            Err(Error::domain(format!("x^{p} is singular at x = 0")))
        };
    }
    if x.im == T::zero() {
        if x.re > T::zero() {
            return Ok(re(x.re.powf(p)));
        }
        if p.is_integer() {
            if let Some(n) = p.to_i32() {
                return Ok(re(x.re.powi(n)));
            }
        }
    }
    Ok(x.powf(p))
}

/// Sums the umbral series at `x` with relative stopping tolerance `tol`.
pub fn eval_umbral_series<T: Real>(f: &UmbralSeries<T>, x: Complex<T>, tol: T) -> Result<Complex<T>> {
    eval_umbral_series_summed(f, x, SeriesControl::with_tol(tol)).map(|s| s.value)
}

/// [`eval_umbral_series`] with the tail metadata.
///
/// Terms are formed directly while they stay finite and switch to log space
/// when `phi(k + s)` or `w^k / k!` leaves the floating range.
pub fn eval_umbral_series_summed<T: Real>(
    f: &UmbralSeries<T>,
    x: Complex<T>,
    ctrl: SeriesControl<T>,
) -> Result<Summed<Complex<T>, T>> {
    let prefactor = pow_principal(x, f.prefactor_power)? * f.overall_scale;
    let w = -f.arg_scale * pow_principal(x, T::count(f.arg_power))?;
    let ln_w = if w == Complex::<T>::zero() { None } else { Some(w.ln()) };

    let mut acc = Accumulator::new(ctrl);
    let mut power = Complex::<T>::one();
    let mut k = 0usize;
    loop {
        if k > 0 {
            power = power * w / T::count(k);
        }
        let s = re(T::count(k) + f.shift);
        let phi = f.phi.eval(s)?;
        let mut term = phi * power;
        let underflowed = power == Complex::<T>::zero() && w != Complex::<T>::zero();
        if !is_finite_c(term) || (underflowed && phi != Complex::<T>::zero()) {
            term = match (f.phi.ln_eval(s)?, ln_w) {
                (Some(lp), Some(lw)) => {
                    (lp + lw * T::count(k) - ln_gamma(re(T::count(k + 1)))?).exp()
                }
                _ => Complex::zero(),
            };
        }
        if acc.push(term)? {
            break;
        }
        k += 1;
    }
    Ok(acc.finish().map(|v| v * prefactor))
}
