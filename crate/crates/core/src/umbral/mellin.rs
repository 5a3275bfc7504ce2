use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{re, Real};
use crate::specfun::gamma;

use super::series::UmbralSeries;

fn strip_error<T: Real>(sigma: Complex<T>, lower: T, upper: T) -> Error {
    Error::StripViolation {
        sigma: sigma.re.to_f64_lossy(),
        lower: lower.to_f64_lossy(),
        upper: upper.to_f64_lossy(),
    }
}

/// Ramanujan master theorem: `int_0^inf x^(nu-1) sum_k phi(k) (-x)^k / k! dx
/// = C Gamma(nu) phi(-nu)`.
///
/// The strip is `0 < Re nu < min_i shift_i / slope_i` over the numerator
/// factors of `phi`; beyond the upper edge `phi(-nu)` meets its first pole and
/// the integral diverges at infinity.
pub fn mellin_master<T: Real>(f: &UmbralSeries<T>, nu: Complex<T>) -> Result<Complex<T>> {
    if !f.is_basic() {
        return Err(Error::parameter(
            "mellin_master needs p = 0, s = 0, m = 1, a = 1; use mellin_master_strided",
        ));
    }
    let upper = f.phi().strip_upper_bound();
    if !(nu.re > T::zero() && nu.re < upper) {
        return Err(strip_error(nu, T::zero(), upper));
    }
    Ok(f.overall_scale() * gamma(nu)? * f.phi().eval(-nu)?)
}

/// Mellin transform of a general umbral series.
///
/// With `sigma = (nu + p) / m` the substitution `u = a x^m` gives
/// `(C / m) a^(-sigma) Gamma(sigma) phi(s - sigma)`, valid for
/// `0 < Re sigma < min_i (shift_i + slope_i s) / slope_i`.
pub fn mellin_master_strided<T: Real>(f: &UmbralSeries<T>, nu: Complex<T>) -> Result<Complex<T>> {
    let m = T::count(f.arg_power());
    let sigma = (nu + f.prefactor_power()) / m;
    let upper = f.phi().shifted(f.shift()).strip_upper_bound();
    if !(sigma.re > T::zero() && sigma.re < upper) {
        return Err(strip_error(sigma, T::zero(), upper));
    }
    let a = f.arg_scale();
    if a.re <= T::zero() {
        return Err(Error::domain(format!(
            "arg_scale {a} must have positive real part for the Mellin integral to converge"
        )));
    }
    let phi = f.phi().eval(re(f.shift()) - sigma)?;
    Ok(f.overall_scale() / m * a.powc(-sigma) * gamma(sigma)? * phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::umbral::GammaRatioSequence;
    use std::f64::consts::PI;

    fn c(x: f64) -> Complex<f64> {
        Complex::new(x, 0.0)
    }

    #[test]
    fn exponential_and_geometric() {
        let e = UmbralSeries::<f64>::exponential();
        let v = mellin_master(&e, c(0.5)).unwrap();
        assert!((v.re - PI.sqrt()).abs() < 1e-15);
        let g = UmbralSeries::<f64>::geometric();
        let v = mellin_master(&g, c(0.5)).unwrap();
        assert!((v.re - PI).abs() < 1e-14);
        let v = mellin_master(&g, c(1.0 / 3.0)).unwrap();
        assert!((v.re - PI / (PI / 3.0).sin()).abs() < 1e-13);
    }

    #[test]
    fn strip_is_enforced() {
        let g = UmbralSeries::<f64>::geometric();
        assert!(matches!(
            mellin_master(&g, c(1.0)),
            Err(Error::StripViolation { .. })
        ));
        assert!(matches!(
            mellin_master(&g, c(-0.2)),
            Err(Error::StripViolation { .. })
        ));
        // phi = 1 has no numerator factor: only the lower edge applies.
        assert!(mellin_master(&UmbralSeries::<f64>::exponential(), c(7.5)).is_ok());
        let j = UmbralSeries::<f64>::bessel_j(0.0).unwrap();
        assert!(mellin_master(&j, c(0.5)).is_err());
    }

    #[test]
    fn gaussian_and_bessel() {
        let g = UmbralSeries::<f64>::gaussian();
        let v = mellin_master_strided(&g, c(1.0)).unwrap();
        assert!((v.re - PI.sqrt() / 2.0).abs() < 1e-15);
        let j = UmbralSeries::<f64>::bessel_j(0.0).unwrap();
        let v = mellin_master_strided(&j, c(1.0)).unwrap();
        assert!((v.re - 0.5).abs() < 1e-15);
    }

    #[test]
    fn struve_halfline() {
        for (nu, b) in [(-0.5, 1.0), (-0.5, 2.0), (-1.0, 3.0), (-1.3, 1.0)] {
            let f = UmbralSeries::struve(nu).unwrap().dilated(b).unwrap();
            let v = mellin_master_strided(&f, c(1.0)).unwrap();
            let expected = -1.0 / (b * (PI * nu / 2.0).tan());
            assert!((v.re - expected).abs() < 1e-14, "nu={nu} b={b}: {v}");
        }
        let f = UmbralSeries::struve(-1.0f64).unwrap();
        assert_eq!(mellin_master_strided(&f, c(1.0)).unwrap(), c(0.0));
        let f = UmbralSeries::struve(0.5f64).unwrap();
        assert!(mellin_master_strided(&f, c(1.0)).is_err());
    }

    #[test]
    fn struve_moment() {
        for nu in [0.0, 0.5, 1.0, 2.0] {
            let f = UmbralSeries::struve(nu).unwrap();
            let half = mellin_master_strided(&f, c(-nu)).unwrap();
            let expected = PI / (2f64.powf(nu) * crate::specfun::gamma_real(1.0 + nu).unwrap());
            assert!((2.0 * half.re - expected).abs() < 1e-14);
        }
    }

    #[test]
    fn factor_pole_surfaces() {
        // phi(s) = Gamma(1 + s) Gamma(2 + s): strip upper edge at 1.
        let phi = GammaRatioSequence::new(
            c(1.0),
            vec![super::super::GammaFactor::unit(1.0), super::super::GammaFactor::unit(2.0)],
            vec![],
        )
        .unwrap();
        let f = UmbralSeries::basic(phi);
        assert!(mellin_master(&f, c(0.5)).is_ok());
        assert!(mellin_master(&f, c(1.5)).is_err());
    }
}
