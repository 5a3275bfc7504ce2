use num_complex::Complex;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::series::{Accumulator, SeriesControl, Summed};

fn is_nonpositive_integer<T: Real>(z: Complex<T>) -> bool {
    z.im == T::zero() && z.re.is_nonpositive_integer()
}

/// Generalized hypergeometric function `pFq(a; b; y)` to the default tolerance.
pub fn hyper_pfq<T: Real>(a: &[Complex<T>], b: &[Complex<T>], y: Complex<T>) -> Result<Complex<T>> {
    hyper_pfq_series(a, b, y, SeriesControl::default()).map(|s| s.value)
}

/// `sum_k prod (a_i)_k / prod (b_j)_k * y^k / k!`.
///
/// Terms are generated by the ratio `prod (a_i + k) / prod (b_j + k) * y / (k+1)`.
/// A non-positive integer among the `a_i` terminates the series.
pub fn hyper_pfq_series<T: Real>(
    a: &[Complex<T>],
    b: &[Complex<T>],
    y: Complex<T>,
    ctrl: SeriesControl<T>,
) -> Result<Summed<Complex<T>, T>> {
    if let Some(bad) = b.iter().find(|z| is_nonpositive_integer(**z)) {
        return Err(Error::parameter(format!(
            "lower parameter {} is a non-positive integer",
            bad.re
        )));
    }
    let terminating = a.iter().any(|z| is_nonpositive_integer(*z));
    if !terminating {
        if a.len() > b.len() + 1 && y != Complex::<T>::zero() {
            return Err(Error::domain(format!(
                "{}F{} diverges for every non-zero argument",
                a.len(),
                b.len()
            )));
        }
        if a.len() == b.len() + 1 && y.norm() >= T::one() {
            return Err(Error::domain(format!(
                "{}F{} series needs |y| < 1, got {}",
                a.len(),
                b.len(),
                y.norm()
            )));
        }
    }

    let mut term = Complex::<T>::one();
    let mut acc = Accumulator::new(ctrl);
    let mut k = 0usize;
    loop {
        if acc.push(term)? {
            break;
        }
        let kk = T::count(k);
        let num = a.iter().fold(Complex::<T>::one(), |p, ai| p * (*ai + kk));
        let den = b.iter().fold(Complex::<T>::one(), |p, bj| p * (*bj + kk));
        term = term * num / den * y / (kk + T::one());
        k += 1;
    }
    Ok(acc.finish())
}
