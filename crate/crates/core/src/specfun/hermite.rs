//! Higher-order Hermite polynomials, their hybrid and truncated relatives, and
//! the Hermite-based Tricomi functions.

use num_complex::Complex;
use num_traits::{One, Zero};

use super::gamma::factorial;
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::series::{Accumulator, SeriesControl, Summed};

/// Largest degree accepted by the finite sums (factorials stay finite in f64).
pub const MAX_DEGREE: usize = 170;

fn check_args(n: usize, m: usize) -> Result<()> {
    if m < 2 {
        return Err(Error::parameter(format!("order m must be at least 2, got {m}")));
    }
    if n > MAX_DEGREE {
        return Err(Error::parameter(format!(
            "degree {n} exceeds the supported maximum {MAX_DEGREE}"
        )));
    }
    Ok(())
}

/// `H_n^(m)(u, v) = n! sum_{k <= n/m} u^(n-mk) v^k / ((n-mk)! k!)`.
pub fn hermite_higher<T: Real>(n: usize, m: usize, u: Complex<T>, v: Complex<T>) -> Result<Complex<T>> {
    check_args(n, m)?;
    // n! / ((n-mk)! k!) built up factor by factor.
    let mut coef = T::one();
    let mut sum = Complex::<T>::zero();
    for k in 0..=n / m {
        let j = n - m * k;
        sum += u.powi(j as i32) * v.powi(k as i32) * coef;
        if j >= m {
            for i in 0..m {
                coef *= T::count(j - i);
            }
            coef /= T::count(k + 1);
        }
    }
    Ok(sum)
}

/// Hybrid polynomials `sum_k x^(n-mk) y^k / (k! ((n-mk)!)^2)`.
pub fn hermite_hybrid<T: Real>(n: usize, m: usize, x: Complex<T>, y: Complex<T>) -> Result<Complex<T>> {
    check_args(n, m)?;
    Ok((0..=n / m).fold(Complex::<T>::zero(), |acc, k| {
        let j = n - m * k;
        let fj: T = factorial(j);
        acc + x.powi(j as i32) * y.powi(k as i32) / (factorial::<T>(k) * fj * fj)
    }))
}

/// Truncated polynomials `e_n^(m)(x, y) = sum_k x^(n-mk) y^k / ((n-mk)!)^2`.
pub fn truncated_e<T: Real>(n: usize, m: usize, x: Complex<T>, y: Complex<T>) -> Result<Complex<T>> {
    check_args(n, m)?;
    Ok((0..=n / m).fold(Complex::<T>::zero(), |acc, k| {
        let j = n - m * k;
        let fj: T = factorial(j);
        acc + x.powi(j as i32) * y.powi(k as i32) / (fj * fj)
    }))
}

/// Hermite-based Tricomi function to the default tolerance.
pub fn hermite_tricomi<T: Real>(n: usize, m: usize, x: Complex<T>, y: Complex<T>) -> Result<Complex<T>> {
    hermite_tricomi_series(n, m, x, y, SeriesControl::default()).map(|s| s.value)
}

/// `sum_k (-1)^k / (k! (n+k)!) H_k^(m)(x, y)`.
///
/// `H_k^(m)` grows like `k!`, so the summand is rewritten as
/// `(-1)^k / (n+k)! * sum_j x^(k-mj)/(k-mj)! * y^j/j!` and built from cached
/// scaled powers. The stopping rule is armed once the term ratio drops below
/// 0.9.
pub fn hermite_tricomi_series<T: Real>(
    n: usize,
    m: usize,
    x: Complex<T>,
    y: Complex<T>,
    ctrl: SeriesControl<T>,
) -> Result<Summed<Complex<T>, T>> {
    check_args(0, m)?;
    let ctrl = SeriesControl {
        ratio_gate: ctrl.ratio_gate.or(Some(T::lit(0.9))),
        ..ctrl
    };
    let mut xs: Vec<Complex<T>> = vec![Complex::<T>::one()]; // x^i / i!
    let mut ys: Vec<Complex<T>> = vec![Complex::<T>::one()]; // y^j / j!
    let mut recip_fact = T::one() / factorial::<T>(n); // 1 / (n+k)!
    let mut acc = Accumulator::new(ctrl);
    let mut k = 0usize;
    loop {
        while xs.len() <= k {
            let i = xs.len();
            let next = xs[i - 1] * x / T::count(i);
            xs.push(next);
        }
        while ys.len() <= k / m {
            let j = ys.len();
            let next = ys[j - 1] * y / T::count(j);
            ys.push(next);
        }
        let inner = (0..=k / m).fold(Complex::<T>::zero(), |s, j| s + xs[k - m * j] * ys[j]);
        let sign = if k.is_multiple_of(2) { T::one() } else { -T::one() };
        if acc.push(inner * (sign * recip_fact))? {
            break;
        }
        k += 1;
        recip_fact /= T::count(n + k);
    }
    Ok(acc.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex<f64> {
        Complex::new(re, im)
    }

    #[test]
    fn low_degrees() {
        let (u, v) = (c(0.7, -0.2), c(-1.1, 0.4));
        for m in 2..6 {
            assert_eq!(hermite_higher(0, m, u, v).unwrap(), c(1.0, 0.0));
            assert_eq!(hermite_higher(1, m, u, v).unwrap(), u);
        }
        let h22 = hermite_higher(2, 2, u, v).unwrap();
        assert!((h22 - (u * u + v * 2.0)).norm() < 1e-15);
        // H_3^(3) = u^3 + 6 v
        let h33 = hermite_higher(3, 3, u, v).unwrap();
        assert!((h33 - (u * u * u + v * 6.0)).norm() < 1e-15);
        assert!(hermite_higher(3, 1, u, v).is_err());
    }

    #[test]
    fn hybrid_and_truncated_hand_expansions() {
        let (x, y) = (c(1.3, 0.0), c(-0.6, 0.0));
        assert_eq!(hermite_hybrid(0, 3, x, y).unwrap(), c(1.0, 0.0));
        let h = hermite_hybrid(2, 2, x, y).unwrap();
        assert!((h - (x * x / 4.0 + y)).norm() < 1e-15);
        let e = truncated_e(2, 2, x, y).unwrap();
        assert!((e - (x * x / 4.0 + y)).norm() < 1e-15);
        // n = 4, m = 2: x^4/576 + x^2 y/4 + y^2/2 (hybrid); x^4/576 + x^2 y/4 + y^2 (truncated)
        let h4 = hermite_hybrid(4, 2, x, y).unwrap();
        let e4 = truncated_e(4, 2, x, y).unwrap();
        let x2 = x * x;
        assert!((h4 - (x2 * x2 / 576.0 + x2 * y / 4.0 + y * y / 2.0)).norm() < 1e-15);
        assert!((e4 - (x2 * x2 / 576.0 + x2 * y / 4.0 + y * y)).norm() < 1e-15);
    }

    #[test]
    fn tricomi_at_origin_is_one() {
        for m in 2..5 {
            let v = hermite_tricomi(0, m, c(0.0, 0.0), c(0.0, 0.0)).unwrap();
            assert_eq!(v, c(1.0, 0.0));
        }
    }

    #[test]
    fn tricomi_reduces_to_j0() {
        // H_k^(m)(u, 0) = u^k, so C_0(x^2, 0) = sum (-x^2)^k/(k!)^2 = J_0(2x)
        let v = hermite_tricomi(0, 2, c(1.0, 0.0), c(0.0, 0.0)).unwrap();
        let j0 = crate::specfun::bessel_j(0.0f64, 2.0).unwrap();
        assert!((v.re - j0).abs() < 1e-15 && v.im == 0.0);
    }

    #[test]
    fn tricomi_double_summation_oracle() {
        // Brute force: explicit H_k^(2)(1, 1) from the finite sum with
        // factorials, then sum (-1)^k H_k / (k! (k+1)!).
        let fact = |n: usize| (1..=n).fold(1.0f64, |a, i| a * i as f64);
        let mut oracle = 0.0;
        for k in 0..60usize {
            let hk: f64 = (0..=k / 2)
                .map(|j| fact(k) / (fact(k - 2 * j) * fact(j)))
                .sum();
            oracle += (-1f64).powi(k as i32) * hk / (fact(k) * fact(k + 1));
        }
        let v = hermite_tricomi(1, 2, c(1.0, 0.0), c(1.0, 0.0)).unwrap();
        assert!((v.re - oracle).abs() < 1e-15, "{} vs {oracle}", v.re);
    }
}
