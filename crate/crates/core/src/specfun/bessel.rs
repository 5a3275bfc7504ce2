//! Bessel functions of the first kind, modified Bessel functions and the
//! function `b_nu`, all by power series.

use num_complex::Complex;
use num_traits::{One, Zero};

use super::gamma::{factorial, gamma_ratio, recip_gamma, recip_gamma_real};
use crate::error::{Error, Result};
use crate::scalar::{re, Real};
use crate::series::{Accumulator, SeriesControl, Summed};

fn integer_order<T: Real>(nu: T) -> Option<i64> {
    if nu.is_integer() {
        nu.to_i64()
    } else {
        None
    }
}

fn parity<T: Real>(n: i64) -> T {
    if n.rem_euclid(2) == 0 {
        T::one()
    } else {
        -T::one()
    }
}

/// `J_nu(x)` by its power series, to the default tolerance.
pub fn bessel_j<T: Real>(nu: T, x: T) -> Result<T> {
    bessel_j_series(nu, x, SeriesControl::default()).map(|s| s.value)
}

/// `J_nu(x) = sum_k (-1)^k (x/2)^(2k+nu) / (k! Gamma(k+nu+1))`.
///
/// Integer orders accept any real `x` and satisfy `J_{-n} = (-1)^n J_n`;
/// non-integer orders require `x >= 0`.
pub fn bessel_j_series<T: Real>(nu: T, x: T, ctrl: SeriesControl<T>) -> Result<Summed<T, T>> {
    cylinder_series(nu, x, -T::one(), ctrl)
}

/// `I_mu(x)` by its power series, to the default tolerance.
pub fn bessel_i<T: Real>(mu: T, x: T) -> Result<T> {
    bessel_i_series(mu, x, SeriesControl::default()).map(|s| s.value)
}

/// `I_mu(x) = sum_k (x/2)^(2k+mu) / (k! Gamma(k+mu+1))`.
pub fn bessel_i_series<T: Real>(mu: T, x: T, ctrl: SeriesControl<T>) -> Result<Summed<T, T>> {
    cylinder_series(mu, x, T::one(), ctrl)
}

/// Shared series for `J` (`sign = -1`) and `I` (`sign = +1`).
fn cylinder_series<T: Real>(
    nu: T,
    x: T,
    sign: T,
    ctrl: SeriesControl<T>,
) -> Result<Summed<T, T>> {
    if nu.is_nan() || x.is_nan() {
        return Err(Error::parameter("NaN argument to Bessel series"));
    }
    let int_order = integer_order(nu);
    if let Some(n) = int_order {
        if n < 0 {
            // J_{-n} = (-1)^n J_n, I_{-n} = I_n
            let s = cylinder_series(-nu, x, sign, ctrl)?;
            let factor = if sign < T::zero() { parity::<T>(n) } else { T::one() };
            return Ok(s.map(|v| v * factor));
        }
        if x < T::zero() {
            let s = cylinder_series(nu, -x, sign, ctrl)?;
            return Ok(s.map(|v| v * parity::<T>(n)));
        }
    } else if x < T::zero() {
        return Err(Error::domain(format!(
            "non-integer order {nu} needs a non-negative argument, got {x}"
        )));
    }
    if x == T::zero() {
        let value = if nu == T::zero() {
            T::one()
        } else if nu > T::zero() {
            T::zero()
        } else {
            return Err(Error::domain(format!("order {nu} is singular at the origin")));
        };
        return Ok(exact(value));
    }

    let half = x * T::lit(0.5);
    let q = sign * half * half;
    let mut term = half.powf(nu) * recip_gamma_real(nu + T::one());
    let mut acc = Accumulator::new(ctrl);
    let mut k = 0usize;
    loop {
        if acc.push(term)? {
            break;
        }
        let kk = T::count(k + 1);
        term = term * q / (kk * (kk + nu));
        k += 1;
    }
    Ok(acc.finish())
}

fn exact<V, T: Real>(value: V) -> Summed<V, T> {
    Summed {
        value,
        tail: crate::series::SeriesTail {
            terms_used: 1,
            last_term_magnitude: T::zero(),
            converged: true,
        },
    }
}

/// `I_mu(z)` for complex `z` on the principal branch of `(z/2)^mu`.
pub fn bessel_i_complex<T: Real>(mu: T, z: Complex<T>) -> Result<Complex<T>> {
    bessel_i_complex_series(mu, z, SeriesControl::default()).map(|s| s.value)
}

pub fn bessel_i_complex_series<T: Real>(
    mu: T,
    z: Complex<T>,
    ctrl: SeriesControl<T>,
) -> Result<Summed<Complex<T>, T>> {
    if let Some(n) = integer_order(mu) {
        if n < 0 {
            return bessel_i_complex_series(-mu, z, ctrl);
        }
    }
    if z == Complex::<T>::zero() {
        let value = if mu == T::zero() {
            Complex::<T>::one()
        } else if mu > T::zero() {
            Complex::<T>::zero()
        } else {
            return Err(Error::domain(format!("order {mu} is singular at the origin")));
        };
        return Ok(exact(value));
    }
    let half = z * T::lit(0.5);
    let q = half * half;
    let lead = if let Some(n) = integer_order(mu) {
        half.powi(n as i32)
    } else {
        (half.ln() * mu).exp()
    };
    let mut term = lead * recip_gamma(re(mu + T::one()));
    let mut acc = Accumulator::new(ctrl);
    let mut k = 0usize;
    loop {
        if acc.push(term)? {
            break;
        }
        let kk = T::count(k + 1);
        term = term * q / (kk * (kk + mu));
        k += 1;
    }
    Ok(acc.finish())
}

/// Evaluation route for [`b_nu`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BnuMethod {
    /// `sum_k Gamma(nu+k+1) / Gamma(2nu+k+1) x^k / k!`
    Series,
    /// `(sqrt(pi)/2) x^(1/2-nu) e^(x/2) [I_{nu-1/2}(x/2) + I_{nu+1/2}(x/2)]`
    BesselClosedForm,
}

/// `b_nu(x)`, a confluent series whose coefficients are the Gamma ratio
/// `Gamma(nu+k+1)/Gamma(2nu+k+1)`.
pub fn b_nu<T: Real>(nu: T, x: Complex<T>, method: BnuMethod) -> Result<Complex<T>> {
    match method {
        BnuMethod::Series => b_nu_series(nu, x, SeriesControl::default()).map(|s| s.value),
        BnuMethod::BesselClosedForm => b_nu_closed_form(nu, x),
    }
}

/// Coefficient `Gamma(nu+k+1) / Gamma(2nu+k+1)` continued in `nu`.
///
/// When both Gammas sit at poles the value is the limit along `nu`, where the
/// denominator argument moves twice as fast as the numerator argument:
/// `Gamma(-p + d) / Gamma(-q + 2d) -> 2 (-1)^(p-q) q! / p!`.
fn b_nu_coefficient<T: Real>(nu: T, k: usize) -> Result<T> {
    let a = nu + T::count(k) + T::one();
    let b = nu + nu + T::count(k) + T::one();
    match (a.is_nonpositive_integer(), b.is_nonpositive_integer()) {
        (true, true) => {
            let p = (-a).to_usize().unwrap_or(0);
            let q = (-b).to_usize().unwrap_or(0);
            let sign = if (p + q).is_multiple_of(2) { T::one() } else { -T::one() };
            Ok(T::lit(2.0) * sign * factorial::<T>(q) / factorial::<T>(p))
        }
        (true, false) => Err(Error::Pole {
            re: a.to_f64_lossy(),
            im: 0.0,
        }),
        (false, true) => Ok(T::zero()),
        (false, false) => gamma_ratio(&[re(a)], &[re(b)]).map(|z| z.re),
    }
}

pub fn b_nu_series<T: Real>(
    nu: T,
    x: Complex<T>,
    ctrl: SeriesControl<T>,
) -> Result<Summed<Complex<T>, T>> {
    // Leading coefficients can vanish structurally (denominator poles only);
    // they are skipped so that the stopping rule does not fire on them.
    let mut k = 0usize;
    let mut power = Complex::<T>::one(); // x^k / k!
    let mut coef = b_nu_coefficient(nu, 0)?;
    while coef == T::zero() && (nu + nu + T::count(k) + T::one()) <= T::zero() {
        k += 1;
        power = power * x / T::count(k);
        coef = b_nu_coefficient(nu, k)?;
    }
    let mut acc = Accumulator::new(ctrl);
    loop {
        if acc.push(power * coef)? {
            break;
        }
        let a = nu + T::count(k) + T::one();
        let b = nu + nu + T::count(k) + T::one();
        k += 1;
        power = power * x / T::count(k);
        coef = if a > T::zero() && b > T::zero() {
            coef * a / b
        } else {
            b_nu_coefficient(nu, k)?
        };
    }
    Ok(acc.finish())
}

/// Modified-Bessel closed form of `b_nu`, principal branch; requires `x != 0`.
pub fn b_nu_closed_form<T: Real>(nu: T, x: Complex<T>) -> Result<Complex<T>> {
    if x == Complex::<T>::zero() {
        return Err(Error::domain("the closed form of b_nu is not defined at x = 0"));
    }
    let half = T::lit(0.5);
    let z = x * half;
    let lower = bessel_i_complex(nu - half, z)?;
    let upper = bessel_i_complex(nu + half, z)?;
    let power = (x.ln() * (half - nu)).exp();
    Ok(power * z.exp() * (lower + upper) * (T::PI().sqrt() * half))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn j_trivial_values() {
        assert_eq!(bessel_j(0.0f64, 0.0).unwrap(), 1.0);
        assert_eq!(bessel_j(1.0f64, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn j0_at_two_matches_direct_summation() {
        // Oracle: the defining series summed term by term with explicit
        // factorials, to a fixed depth well past double precision.
        let mut oracle = 0.0f64;
        let mut fact = 1.0f64;
        for k in 0..40 {
            if k > 0 {
                fact *= k as f64;
            }
            oracle += (-1f64).powi(k) / (fact * fact);
        }
        let j = bessel_j(0.0f64, 2.0).unwrap();
        assert!((j - oracle).abs() < 4e-16);
        assert!((j - 0.223_890_779_141_235_67).abs() < 4e-16);
    }

    #[test]
    fn j_negative_integer_order_reflection() {
        for n in 1..6 {
            let pos = bessel_j(n as f64, 1.7).unwrap();
            let neg = bessel_j(-(n as f64), 1.7).unwrap();
            assert!((neg - (-1f64).powi(n) * pos).abs() < 4e-16);
        }
        // odd order is odd in x
        assert!((bessel_j(1.0, -1.3f64).unwrap() + bessel_j(1.0, 1.3f64).unwrap()).abs() < 4e-16);
        assert!(bessel_j(0.5f64, -1.0).is_err());
    }

    #[test]
    fn i_half_integer_orders() {
        let x = 1.0f64;
        let k = (2.0 / (PI * x)).sqrt();
        assert!((bessel_i(0.5, x).unwrap() - k * x.sinh()).abs() < 1e-15);
        assert!((bessel_i(-0.5, x).unwrap() - k * x.cosh()).abs() < 1e-15);
        assert_eq!(bessel_i(0.0f64, 0.0).unwrap(), 1.0);
    }

    #[test]
    fn complex_i_matches_real_i() {
        for mu in [0.0, 0.5, 1.5, 2.0, -0.5] {
            for x in [0.3f64, 1.0, 2.5] {
                let r = bessel_i(mu, x).unwrap();
                let c = bessel_i_complex(mu, Complex::new(x, 0.0)).unwrap();
                assert!((c.re - r).abs() < 1e-14 * r.abs().max(1.0) && c.im.abs() < 1e-15);
            }
        }
    }

    #[test]
    fn b_nu_trivial_values() {
        let one = b_nu(0.0f64, Complex::new(0.0, 0.0), BnuMethod::Series).unwrap();
        assert_eq!(one, Complex::new(1.0, 0.0));
        let e = b_nu(0.0f64, Complex::new(1.3, 0.0), BnuMethod::Series).unwrap();
        assert!((e.re - 1.3f64.exp()).abs() < 1e-14);
    }

    #[test]
    fn b_nu_one_one_direct_sum() {
        // Gamma(k+2)/Gamma(k+3)/k! = 1 / ((k+2) k!)
        let mut oracle = 0.0f64;
        let mut fact = 1.0;
        for k in 0..30 {
            if k > 0 {
                fact *= k as f64;
            }
            oracle += 1.0 / ((k as f64 + 2.0) * fact);
        }
        let b = b_nu(1.0f64, Complex::new(1.0, 0.0), BnuMethod::Series).unwrap();
        assert!((b.re - oracle).abs() < 1e-15);
        // closed form of the same value: 1 (e - 1 - 1) ... = sum 1/((k+2)k!) = 1
        assert!((b.re - 1.0).abs() < 1e-15);
    }

    #[test]
    fn b_nu_methods_agree_including_negative_argument() {
        for nu in [0.0f64, 0.5, 1.0, 1.5, 2.0] {
            for x in [-4.5f64, -1.0, 0.25, 3.0] {
                let z = Complex::new(x, 0.0);
                let s = b_nu(nu, z, BnuMethod::Series).unwrap();
                let c = b_nu(nu, z, BnuMethod::BesselClosedForm).unwrap();
                assert!((s - c).norm() <= 1e-12 * s.norm(), "nu={nu} x={x}: {s} vs {c}");
            }
        }
    }

    #[test]
    fn b_nu_continues_through_double_poles() {
        // nu = -1: both Gammas hit poles at k = 0; the limit in nu is finite.
        for x in [0.5f64, 2.0] {
            let z = Complex::new(x, 0.0);
            let s = b_nu(-1.0f64, z, BnuMethod::Series).unwrap();
            let c = b_nu(-1.0f64, z, BnuMethod::BesselClosedForm).unwrap();
            assert!((s - c).norm() < 1e-12 * c.norm().max(1.0), "{s} vs {c}");
        }
        // nu = -3/2: three structural zeros before the first live term.
        let z = Complex::new(0.7f64, 0.0);
        let s = b_nu(-1.5f64, z, BnuMethod::Series).unwrap();
        let c = b_nu(-1.5f64, z, BnuMethod::BesselClosedForm).unwrap();
        assert!((s - c).norm() < 1e-12 * c.norm().max(1.0), "{s} vs {c}");
    }

    #[test]
    fn b_nu_closed_form_rejects_origin() {
        assert!(b_nu(1.0f64, Complex::new(0.0, 0.0), BnuMethod::BesselClosedForm).is_err());
    }
}
