use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{re, Real};
use crate::series::{series_sum, Accumulator, SeriesControl, Summed};
use crate::specfun::{
    b_nu, bessel_j, cos_pi, factorial, gamma_real, hermite_tricomi, hyper_pfq, sin_pi, BnuMethod,
};

/// `B_nu(alpha, beta) = int_0^inf x J_(2 nu)(alpha x) exp(i beta x^2) dx`
/// through the `b_nu` series.
pub fn fresnel_bessel<T: Real>(nu: T, alpha: T, beta: T) -> Result<Complex<T>> {
    fresnel_bessel_with(nu, alpha, beta, BnuMethod::Series)
}

/// [`fresnel_bessel`] with an explicit evaluation route for `b_nu`.
///
/// `(1/2) (alpha/2)^(2 nu) (i/beta)^(nu+1) b_nu(-i alpha^2 / (4 beta))`, with
/// `(i/beta)^(nu+1) = exp((nu+1)(ln(1/beta) + i pi/2))`.
pub fn fresnel_bessel_with<T: Real>(nu: T, alpha: T, beta: T, method: BnuMethod) -> Result<Complex<T>> {
    check_fresnel(nu, alpha, beta)?;
    let half = T::lit(0.5);
    let q = alpha * alpha / (T::lit(4.0) * beta);
    let b = b_nu(nu, Complex::new(T::zero(), -q), method)?;
    let e = nu + T::one();
    let branch = Complex::from_polar((-e * beta.ln()).exp(), e * T::FRAC_PI_2());
    let scale = if nu == T::zero() {
        T::one()
    } else {
        (alpha * half).powf(nu + nu)
    };
    Ok(branch * b * (half * scale))
}

/// `(i / (2 beta)) exp(-i alpha^2 / (4 beta))`, the order-zero case.
pub fn fresnel_bessel_order_zero<T: Real>(alpha: T, beta: T) -> Result<Complex<T>> {
    check_fresnel(T::zero(), alpha, beta)?;
    let q = alpha * alpha / (T::lit(4.0) * beta);
    let phase = Complex::new(q.sin(), q.cos());
    Ok(phase / (beta + beta))
}

fn check_fresnel<T: Real>(nu: T, alpha: T, beta: T) -> Result<()> {
    if !(nu >= T::zero()) {
        return Err(Error::domain(format!("order nu must be >= 0, got {nu}")));
    }
    if !(alpha > T::zero() && beta > T::zero()) {
        return Err(Error::domain(format!(
            "alpha and beta must be positive, got ({alpha}, {beta})"
        )));
    }
    if !(alpha * alpha < T::lit(4.0) * beta) {
        return Err(Error::domain(format!(
            "need alpha^2 < 4 beta, got alpha = {alpha}, beta = {beta}"
        )));
    }
    Ok(())
}

/// `int_0^inf H_nu(b x) dx = -1 / (b tan(pi nu / 2))` for `-2 < nu < 0`.
///
/// Exactly zero at `nu = -1`.
pub fn struve_halfline_integral<T: Real>(nu: T, b: T) -> Result<T> {
    if !(nu > -T::lit(2.0) && nu < T::zero()) {
        return Err(Error::domain(format!("need -2 < nu < 0, got {nu}")));
    }
    if !(b > T::zero()) {
        return Err(Error::domain(format!("need b > 0, got {b}")));
    }
    let h = nu * T::lit(0.5);
    // Adding zero turns -0 into +0 at the tangent pole.
    Ok(-cos_pi(h) / (b * sin_pi(h)) + T::zero())
}

/// `int_{-inf}^{inf} x^-(nu+1) H_nu(x) dx = pi / (2^nu Gamma(1 + nu))`.
///
/// The integrand is the even continuation of its series, so the value is
/// twice the half-line integral. Convergence at infinity needs `nu > -1/2`.
pub fn struve_moment_integral<T: Real>(nu: T) -> Result<T> {
    if !(nu > -T::lit(0.5)) {
        return Err(Error::domain(format!("need nu > -1/2, got {nu}")));
    }
    Ok(T::PI() / (T::lit(2.0).powf(nu) * gamma_real(T::one() + nu)?))
}

/// Evaluation route for [`bessel_generating_function`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratingMethod {
    /// `sum_n t^n / n! J_(m n)(2 x)`.
    Direct,
    /// Hermite-based Tricomi function `C_0^(m)(x^2, (-x)^m t)`.
    Tricomi,
}

/// `G(x, t | m) = sum_n t^n / n! J_(m n)(2 x)`.
pub fn bessel_generating_function<T: Real>(x: T, t: T, m: usize, method: GeneratingMethod) -> Result<T> {
    if m < 2 {
        return Err(Error::parameter(format!("order m must be at least 2, got {m}")));
    }
    match method {
        GeneratingMethod::Direct => {
            let ctrl = SeriesControl::default().ratio_gate(T::lit(0.9));
            let mut weight = T::one();
            let mut err = None;
            let s = series_sum(
                |n| {
                    if n > 0 {
                        weight = weight * t / T::count(n);
                    }
                    if weight == T::zero() {
                        return T::zero();
                    }
                    match bessel_j(T::count(m * n), x + x) {
                        Ok(j) => weight * j,
                        Err(e) => {
                            err.get_or_insert(e);
                            T::nan()
                        }
                    }
                },
                ctrl,
            );
            match err {
                Some(e) => Err(e),
                None => s.map(|s| s.value),
            }
        }
        GeneratingMethod::Tricomi => {
            let y = (-x).powi(m as i32) * t;
            hermite_tricomi(0, m, re(x * x), re(y)).map(|z| z.re)
        }
    }
}

/// `int_{-inf}^{inf} J_n(x exp(-t^2)) dt` as
/// `sqrt(pi) sum_k (-1)^k / (k! (k+n)!) (x/2)^(2k+n) / sqrt(2k+n)`, integer `n > 0`.
pub fn bessel_gauss_dilation<T: Real>(n: usize, x: T, tol: T) -> Result<T> {
    bessel_gauss_dilation_summed(n, x, SeriesControl::with_tol(tol)).map(|s| s.value)
}

pub fn bessel_gauss_dilation_summed<T: Real>(n: usize, x: T, ctrl: SeriesControl<T>) -> Result<Summed<T, T>> {
    if n == 0 {
        return Err(Error::domain("order n must be a positive integer"));
    }
    let half = x * T::lit(0.5);
    if half == T::zero() {
        return Ok(Summed {
            value: T::zero(),
            tail: crate::series::SeriesTail {
                terms_used: 1,
                last_term_magnitude: T::zero(),
                converged: true,
            },
        });
    }
    let q = -(half * half);
    // (-1)^k (x/2)^(2k+n) / (k! (k+n)!)
    let mut w = half.powi(n as i32) / factorial::<T>(n);
    let mut acc = Accumulator::new(ctrl);
    let mut k = 0usize;
    loop {
        let term = w / T::count(2 * k + n).sqrt();
        if acc.push(term)? {
            break;
        }
        k += 1;
        w = w * q / (T::count(k) * T::count(k + n));
    }
    Ok(acc.finish().map(|v| v * T::PI().sqrt()))
}

/// Evaluation route for [`lorentz_gauss_integral`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LorentzGaussMethod {
    /// `sqrt(pi) sum_k (-x^2)^k / k! Gamma(2k + 3/2) / Gamma(2k + 2)`.
    Series,
    /// `(pi/2) 2F2(3/4, 5/4; 1, 3/2; -x^2)`.
    Hypergeometric,
    /// The misprinted series with `2k + 2` in place of `Gamma(2k + 2)`.
    /// Equals `pi/4` at `x = 0` and diverges elsewhere.
    PaperLiteral,
}

/// `int_{-inf}^{inf} exp(-x^2 / (1+t^2)^2) / (1+t^2)^2 dt`.
pub fn lorentz_gauss_integral<T: Real>(x: T, method: LorentzGaussMethod) -> Result<T> {
    let y = -(x * x);
    let sqrt_pi = T::PI().sqrt();
    match method {
        LorentzGaussMethod::Hypergeometric => {
            let a = [re(T::lit(0.75)), re(T::lit(1.25))];
            let b = [re(T::one()), re(T::lit(1.5))];
            Ok(hyper_pfq(&a, &b, re(y))?.re * T::FRAC_PI_2())
        }
        LorentzGaussMethod::Series => {
            // r_k = Gamma(2k+3/2)/Gamma(2k+2); r_(k+1) = r_k (2k+3/2)(2k+5/2)/((2k+2)(2k+3))
            let mut w = sqrt_pi * T::lit(0.5); // Gamma(3/2) / Gamma(2)
            let mut k = 0usize;
            let s = series_sum(
                |_| {
                    let t = w;
                    let kk = T::count(2 * k);
                    k += 1;
                    w = w * y / T::count(k) * (kk + T::lit(1.5)) * (kk + T::lit(2.5))
                        / ((kk + T::lit(2.0)) * (kk + T::lit(3.0)));
                    t
                },
                SeriesControl::default(),
            )?;
            Ok(s.value * sqrt_pi)
        }
        LorentzGaussMethod::PaperLiteral => {
            // r_k = Gamma(2k+3/2)/(2k+2)
            let mut w = sqrt_pi * T::lit(0.25);
            let mut k = 0usize;
            let s = series_sum(
                |_| {
                    let t = w;
                    let kk = T::count(2 * k);
                    k += 1;
                    w = w * y / T::count(k) * (kk + T::lit(1.5)) * (kk + T::lit(2.5)) * (kk + T::lit(2.0))
                        / (kk + T::lit(4.0));
                    t
                },
                SeriesControl::default().cap(400),
            )?;
            Ok(s.value * sqrt_pi)
        }
    }
}

