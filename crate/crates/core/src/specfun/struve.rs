//! Struve function of the first kind.

use super::gamma::recip_gamma_real;
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::series::{Accumulator, SeriesControl, SeriesTail, Summed};

/// `H_nu(x)` to the default tolerance.
pub fn struve_h<T: Real>(nu: T, x: T) -> Result<T> {
    struve_h_series(nu, x, SeriesControl::default()).map(|s| s.value)
}

/// `H_nu(x) = sum_k (-1)^k (x/2)^(2k+nu+1) / (Gamma(k+3/2) Gamma(k+nu+3/2))`.
///
/// Terms whose denominator Gamma sits at a pole are exactly zero and are
/// skipped. Negative `x` is accepted for integer `nu` only, where
/// `H_nu(-x) = (-1)^(nu+1) H_nu(x)`.
pub fn struve_h_series<T: Real>(nu: T, x: T, ctrl: SeriesControl<T>) -> Result<Summed<T, T>> {
    if nu.is_nan() || x.is_nan() {
        return Err(Error::parameter("NaN argument to Struve series"));
    }
    if x < T::zero() {
        if !nu.is_integer() {
            return Err(Error::domain(format!(
                "non-integer order {nu} needs a non-negative argument, got {x}"
            )));
        }
        let s = struve_h_series(nu, -x, ctrl)?;
        let odd = ((nu + T::one()).to_i64().unwrap_or(0)).rem_euclid(2) == 1;
        return Ok(s.map(|v| if odd { -v } else { v }));
    }

    let three_halves = T::lit(1.5);
    let shift = nu + three_halves;
    // First index whose second Gamma is finite.
    let first = if shift.is_nonpositive_integer() {
        (-shift).to_usize().unwrap_or(0) + 1
    } else {
        0
    };

    let exponent = nu + T::one() + T::count(2 * first);
    if x == T::zero() {
        let value = if exponent > T::zero() {
            T::zero()
        } else if exponent == T::zero() {
            sign_of::<T>(first)
                * recip_gamma_real(T::count(first) + three_halves)
                * recip_gamma_real(T::count(first) + shift)
        } else {
            return Err(Error::domain(format!("order {nu} is singular at the origin")));
        };
        return Ok(Summed {
            value,
            tail: SeriesTail {
                terms_used: 1,
                last_term_magnitude: T::zero(),
                converged: true,
            },
        });
    }

    let half = x * T::lit(0.5);
    let q = -(half * half);
    let mut term = sign_of::<T>(first)
        * half.powf(exponent)
        * recip_gamma_real(T::count(first) + three_halves)
        * recip_gamma_real(T::count(first) + shift);
    let mut acc = Accumulator::new(ctrl);
    let mut k = first;
    loop {
        if acc.push(term)? {
            break;
        }
        let kk = T::count(k);
        term = term * q / ((kk + three_halves) * (kk + shift));
        k += 1;
    }
    Ok(acc.finish())
}

fn sign_of<T: Real>(k: usize) -> T {
    if k.is_multiple_of(2) {
        T::one()
    } else {
        -T::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn origin() {
        assert_eq!(struve_h(0.0f64, 0.0).unwrap(), 0.0);
        assert!((struve_h(-1.0f64, 0.0).unwrap() - 2.0 / PI).abs() < 4e-16);
        assert!(struve_h(-2.3f64, 0.0).is_err());
        assert_eq!(struve_h(-2.5f64, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn half_integer_reductions() {
        // H_{1/2}(x) = sqrt(2/(pi x)) (1 - cos x), H_{-1/2}(x) = sqrt(2/(pi x)) sin x
        let x = 2.0f64;
        let expected = (2.0 / (PI * x)).sqrt() * (1.0 - x.cos());
        assert!((struve_h(0.5, x).unwrap() - expected).abs() < 1e-15);
        let expected = (2.0 / PI).sqrt() * 1f64.sin();
        assert!((struve_h(-0.5, 1.0f64).unwrap() - expected).abs() < 1e-15);
    }

    #[test]
    fn pole_terms_are_skipped() {
        // H_{-3/2}(x) = -J_{3/2}(x) = -sqrt(2/(pi x)) (sin x / x - cos x)
        for x in [0.5f64, 1.0, 3.0] {
            let j32 = (2.0 / (PI * x)).sqrt() * (x.sin() / x - x.cos());
            assert!((struve_h(-1.5, x).unwrap() + j32).abs() < 1e-14, "x={x}");
        }
        // H_{-5/2}(x) = J_{5/2}(x)
        let x = 1.2f64;
        let j52 = (2.0 / (PI * x)).sqrt() * ((3.0 / (x * x) - 1.0) * x.sin() - 3.0 * x.cos() / x);
        assert!((struve_h(-2.5, x).unwrap() - j52).abs() < 1e-14);
    }

    #[test]
    fn integer_order_parity() {
        let a = struve_h(0.0, 1.3f64).unwrap();
        assert!((struve_h(0.0, -1.3f64).unwrap() + a).abs() < 4e-16);
        let b = struve_h(1.0, 1.3f64).unwrap();
        assert!((struve_h(1.0, -1.3f64).unwrap() - b).abs() < 4e-16);
    }

    #[test]
    fn reference_values() {
        // mpmath struveh
        assert!((struve_h(0.0, 2.0f64).unwrap() - 0.790_858_849_508_095_9).abs() < 4e-15);
        assert!((struve_h(1.0, 5.0f64).unwrap() - 0.807_811_945_794_064_4).abs() < 2e-15);
    }
}
