use std::fmt;

use num_complex::Complex;
use num_rational::Ratio;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{is_finite_c, re, Real};
use crate::specfun::{factorial, gamma_ratio, ln_gamma};

/// Positive rational slope of a Gamma factor.
pub type Slope = Ratio<u32>;

/// One factor `Gamma(shift + slope * s)`.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaFactor<T> {
    pub shift: T,
    pub slope: Slope,
}

impl<T: Real> GammaFactor<T> {
    pub fn new(shift: T, slope: Slope) -> Self {
        Self { shift, slope }
    }

    /// `Gamma(shift + s)`.
    pub fn unit(shift: T) -> Self {
        Self::new(shift, Slope::one())
    }

    pub fn slope_value(&self) -> T {
        T::from_u32(*self.slope.numer()).unwrap_or_else(T::one)
            / T::from_u32(*self.slope.denom()).unwrap_or_else(T::one)
    }

    fn argument(&self, s: Complex<T>) -> Complex<T> {
        s * self.slope_value() + self.shift
    }

    /// Real part of the first pole of `Gamma(shift - slope * nu)` in `nu`.
    pub(crate) fn first_reflected_pole(&self) -> T {
        self.shift / self.slope_value()
    }
}

/// A moment sequence `phi(s) = scale * prod Gamma(a_i + b_i s) / prod Gamma(c_j + d_j s)`.
///
/// The Gamma-ratio form fixes the continuation of `phi` off the non-negative
/// integers, which is what the master theorem evaluates at `s = -nu`.
#[derive(Clone, PartialEq)]
pub struct GammaRatioSequence<T> {
    scale: Complex<T>,
    numer: Vec<GammaFactor<T>>,
    denom: Vec<GammaFactor<T>>,
}

impl<T: fmt::Debug> fmt::Debug for GammaRatioSequence<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:?} + {:?}i)", self.scale.re, self.scale.im)?;
        for g in &self.numer {
            write!(f, " Γ({:?} + {}s)", g.shift, g.slope)?;
        }
        if !self.denom.is_empty() {
            write!(f, " /")?;
            for g in &self.denom {
                write!(f, " Γ({:?} + {}s)", g.shift, g.slope)?;
            }
        }
        Ok(())
    }
}

/// Poles of `Gamma` are the non-positive integers on the real axis.
fn pole_index<T: Real>(z: Complex<T>) -> Option<usize> {
    if z.im == T::zero() && z.re.is_nonpositive_integer() {
        (-z.re).to_usize()
    } else {
        None
    }
}

impl<T: Real> GammaRatioSequence<T> {
    /// Builds a sequence, checking that slopes are positive and `phi(0)` is
    /// finite and non-zero.
    pub fn new(
        scale: Complex<T>,
        numer: Vec<GammaFactor<T>>,
        denom: Vec<GammaFactor<T>>,
    ) -> Result<Self> {
        if numer.iter().chain(&denom).any(|g| g.slope.numer() == &0) {
            return Err(Error::parameter("Gamma factor slopes must be positive"));
        }
        let seq = Self::unchecked(scale, numer, denom);
        let at_zero = seq.eval(Complex::<T>::zero())?;
        if !is_finite_c(at_zero) || at_zero == Complex::<T>::zero() {
            return Err(Error::parameter(format!(
                "phi(0) must be finite and non-zero, got {at_zero}"
            )));
        }
        Ok(seq)
    }

    pub(crate) fn unchecked(
        scale: Complex<T>,
        numer: Vec<GammaFactor<T>>,
        denom: Vec<GammaFactor<T>>,
    ) -> Self {
        let mut seq = Self { scale, numer, denom };
        seq.cancel_common();
        seq
    }

    /// `phi(s) = c` for every `s`.
    pub fn constant(c: T) -> Self {
        Self::unchecked(re(c), vec![], vec![])
    }

    /// Bessel moments `phi(s) = 1 / Gamma(1 + s)`.
    pub fn bessel() -> Self {
        Self::unchecked(Complex::<T>::one(), vec![], vec![GammaFactor::unit(T::one())])
    }

    /// `phi(s) = Gamma(1 + s)`, the moments of `1 / (1 + x)`.
    pub fn factorial() -> Self {
        Self::unchecked(Complex::<T>::one(), vec![GammaFactor::unit(T::one())], vec![])
    }

    /// Struve moments `Gamma(1 + s) / (Gamma(3/2 + s) Gamma(nu + 3/2 + s))`.
    pub fn struve(nu: T) -> Result<Self> {
        let three_halves = T::lit(1.5);
        Self::new(
            Complex::<T>::one(),
            vec![GammaFactor::unit(T::one())],
            vec![
                GammaFactor::unit(three_halves),
                GammaFactor::unit(nu + three_halves),
            ],
        )
    }

    pub fn scale(&self) -> Complex<T> {
        self.scale
    }

    pub fn numer(&self) -> &[GammaFactor<T>] {
        &self.numer
    }

    pub fn denom(&self) -> &[GammaFactor<T>] {
        &self.denom
    }

    /// Multiplies the sequence by a constant.
    pub fn scaled(mut self, c: Complex<T>) -> Self {
        self.scale *= c;
        self
    }

    /// Appends `Gamma(shift + slope s)` to the numerator, cancelling an equal
    /// denominator factor if present.
    pub fn times_gamma(mut self, factor: GammaFactor<T>) -> Self {
        self.numer.push(factor);
        self.cancel_common();
        self
    }

    /// Appends `Gamma(shift + slope s)` to the denominator, cancelling an equal
    /// numerator factor if present.
    pub fn over_gamma(mut self, factor: GammaFactor<T>) -> Self {
        self.denom.push(factor);
        self.cancel_common();
        self
    }

    /// `psi(s) = phi(s + offset)`.
    pub fn shifted(&self, offset: T) -> Self {
        let shift = |g: &GammaFactor<T>| GammaFactor::new(g.shift + g.slope_value() * offset, g.slope);
        Self {
            scale: self.scale,
            numer: self.numer.iter().map(shift).collect(),
            denom: self.denom.iter().map(shift).collect(),
        }
    }

    fn cancel_common(&mut self) {
        let mut i = 0;
        while i < self.numer.len() {
            if let Some(j) = self.denom.iter().position(|d| d == &self.numer[i]) {
                self.numer.remove(i);
                self.denom.remove(j);
            } else {
                i += 1;
            }
        }
    }

    /// `phi(s)`, continued off the integers through the Gamma functions.
    ///
    /// Poles are counted in numerator and denominator. More numerator poles is
    /// an error, more denominator poles gives an exact zero, and an equal
    /// count gives the limit approached along `s`, where a factor
    /// `Gamma(-p + slope * d)` behaves like `(-1)^p / (p! slope d)`.
    pub fn eval(&self, s: Complex<T>) -> Result<Complex<T>> {
        let num_args: Vec<_> = self.numer.iter().map(|g| g.argument(s)).collect();
        let den_args: Vec<_> = self.denom.iter().map(|g| g.argument(s)).collect();
        let num_poles: Vec<usize> = (0..num_args.len())
            .filter(|&i| pole_index(num_args[i]).is_some())
            .collect();
        let den_poles: Vec<usize> = (0..den_args.len())
            .filter(|&j| pole_index(den_args[j]).is_some())
            .collect();

        if num_poles.len() > den_poles.len() {
            let index = num_poles[0];
            return Err(Error::FactorPole {
                index,
                re: s.re.to_f64_lossy(),
                im: s.im.to_f64_lossy(),
            });
        }
        if num_poles.len() < den_poles.len() {
            return Ok(Complex::<T>::zero());
        }

        let finite_num: Vec<_> = (0..num_args.len())
            .filter(|i| !num_poles.contains(i))
            .map(|i| num_args[i])
            .collect();
        let finite_den: Vec<_> = (0..den_args.len())
            .filter(|j| !den_poles.contains(j))
            .map(|j| den_args[j])
            .collect();
        let mut value = gamma_ratio(&finite_num, &finite_den)? * self.scale;

        let residue = |arg: Complex<T>, g: &GammaFactor<T>| {
            let p = pole_index(arg).unwrap_or(0);
            let sign = if p.is_multiple_of(2) { T::one() } else { -T::one() };
            sign / (factorial::<T>(p) * g.slope_value())
        };
        for &i in &num_poles {
            value *= residue(num_args[i], &self.numer[i]);
        }
        for &j in &den_poles {
            value /= residue(den_args[j], &self.denom[j]);
        }
        Ok(value)
    }

    /// A complex logarithm of `phi(s)`, or `None` when `phi(s)` is exactly zero.
    pub(crate) fn ln_eval(&self, s: Complex<T>) -> Result<Option<Complex<T>>> {
        let args = self
            .numer
            .iter()
            .chain(&self.denom)
            .map(|g| g.argument(s));
        if args.clone().any(|z| pole_index(z).is_some()) {
            let v = self.eval(s)?;
            return Ok(if v == Complex::<T>::zero() { None } else { Some(v.ln()) });
        }
        if self.scale == Complex::<T>::zero() {
            return Ok(None);
        }
        let mut log = self.scale.ln();
        for g in &self.numer {
            log += ln_gamma(g.argument(s))?;
        }
        for g in &self.denom {
            log -= ln_gamma(g.argument(s))?;
        }
        Ok(Some(log))
    }

    /// Smallest `Re nu` at which `phi(-nu)` meets a numerator pole; the upper
    /// edge of the fundamental strip of the master theorem.
    pub(crate) fn strip_upper_bound(&self) -> T {
        self.numer
            .iter()
            .map(GammaFactor::first_reflected_pole)
            .fold(T::infinity(), T::min)
    }
}

/// Free-function form of [`GammaRatioSequence::eval`].
pub fn phi_eval<T: Real>(phi: &GammaRatioSequence<T>, s: Complex<T>) -> Result<Complex<T>> {
    phi.eval(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(x: f64) -> Complex<f64> {
        Complex::new(x, 0.0)
    }

    #[test]
    fn bessel_moments() {
        let phi = GammaRatioSequence::<f64>::bessel();
        assert!((phi_eval(&phi, c(3.0)).unwrap() - c(1.0 / 6.0)).norm() < 1e-16);
        // 1/Gamma(1+s) vanishes at s = -1, -2, ...
        assert_eq!(phi_eval(&phi, c(-2.0)).unwrap(), c(0.0));
    }

    #[test]
    fn struve_moments_at_minus_half() {
        let sqrt_pi = std::f64::consts::PI.sqrt();
        for nu in [0.0, 0.5, 1.0, 2.0, -0.3] {
            let phi = GammaRatioSequence::struve(nu).unwrap();
            let expected = sqrt_pi / crate::specfun::gamma_real(nu + 1.0).unwrap();
            let v = phi_eval(&phi, c(-0.5)).unwrap();
            assert!((v - c(expected)).norm() < 1e-14, "nu={nu}");
        }
    }

    #[test]
    fn factorial_moments_continue() {
        let phi = GammaRatioSequence::<f64>::factorial();
        let v = phi_eval(&phi, c(-0.5)).unwrap();
        assert!((v.re - std::f64::consts::PI.sqrt()).abs() < 1e-15);
        assert_eq!(
            phi_eval(&phi, c(-1.0)),
            Err(Error::FactorPole { index: 0, re: -1.0, im: 0.0 })
        );
    }

    #[test]
    fn cancelling_poles_take_the_limit() {
        // Gamma(1 + s) / Gamma(1 + 2s) at s = -1: residues 1 and 1/2 -> ratio
        // (-1)^0/(0! 1) / ((-1)^1/(1! 2)) = -2.
        let phi = GammaRatioSequence::unchecked(
            c(1.0),
            vec![GammaFactor::unit(1.0)],
            vec![GammaFactor::new(1.0, Slope::from_integer(2))],
        );
        let v = phi_eval(&phi, c(-1.0)).unwrap();
        assert!((v - c(-2.0)).norm() < 1e-15);
        // Limit checked against a nearby regular point.
        let near = phi_eval(&phi, c(-1.0 + 1e-7)).unwrap();
        assert!((near - v).norm() < 1e-5);
    }

    #[test]
    fn invariant_checks() {
        let bad_slope = GammaRatioSequence::new(
            c(1.0),
            vec![GammaFactor::new(1.0, Slope::new(0, 1))],
            vec![],
        );
        assert!(bad_slope.is_err());
        // phi(0) = 0 is rejected.
        assert!(GammaRatioSequence::struve(-1.5f64).is_err());
        assert!(GammaRatioSequence::new(c(0.0), vec![], vec![]).is_err());
    }

    #[test]
    fn times_and_over_cancel() {
        let phi = GammaRatioSequence::<f64>::bessel().times_gamma(GammaFactor::unit(1.0));
        assert!(phi.numer().is_empty() && phi.denom().is_empty());
        let back = phi.over_gamma(GammaFactor::unit(1.0));
        assert_eq!(back, GammaRatioSequence::bessel());
    }

    #[test]
    fn log_route_matches_direct() {
        let phi = GammaRatioSequence::struve(0.7f64).unwrap();
        for k in [0.0, 3.0, 40.0] {
            let direct = phi_eval(&phi, c(k)).unwrap();
            let logged = phi.ln_eval(c(k)).unwrap().unwrap().exp();
            assert!((direct - logged).norm() <= 1e-13 * direct.norm());
        }
    }
}
