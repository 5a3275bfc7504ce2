use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::series::{Accumulator, SeriesControl, Summed};

/// Pseudo-trigonometric function `c_k^(m)(x) = sum_r (-1)^r x^(mr+k) / (mr+k)!`.
///
/// For `m = 2`, `c_0` is the cosine and `c_1` the sine.
pub fn pseudo_trig<T: Real>(k: usize, m: usize, x: T) -> Result<T> {
    pseudo_trig_series(k, m, x, SeriesControl::default()).map(|s| s.value)
}

pub fn pseudo_trig_series<T: Real>(
    k: usize,
    m: usize,
    x: T,
    ctrl: SeriesControl<T>,
) -> Result<Summed<T, T>> {
    if m < 2 || k >= m {
        return Err(Error::parameter(format!(
            "pseudo-trigonometric index needs 0 <= k < m and m >= 2, got k={k}, m={m}"
        )));
    }
    let xm = x.powi(m as i32);
    let mut term = x.powi(k as i32) / super::gamma::factorial::<T>(k);
    let mut acc = Accumulator::new(ctrl);
    let mut r = 0usize;
    loop {
        if acc.push(term)? {
            break;
        }
        let base = m * r + k;
        let denom = (1..=m).fold(T::one(), |d, i| d * T::count(base + i));
        term = -term * xm / denom;
        r += 1;
    }
    Ok(acc.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn second_order_is_cos_and_sin() {
        assert!((pseudo_trig(0, 2, 1.0f64).unwrap() - 1f64.cos()).abs() < 4e-16);
        assert_eq!(pseudo_trig(1, 2, 0.0f64).unwrap(), 0.0);
        for i in -30..=30 {
            let x = i as f64 * 0.1;
            assert!((pseudo_trig(0, 2, x).unwrap() - x.cos()).abs() < 1e-12);
            assert!((pseudo_trig(1, 2, x).unwrap() - x.sin()).abs() < 1e-12);
        }
    }

    #[test]
    fn third_order_direct_sum() {
        let mut oracle = 0.0f64;
        let mut fact = 1.0f64;
        for r in 0..12 {
            if r > 0 {
                for i in 3 * r - 2..=3 * r {
                    fact *= i as f64;
                }
            }
            oracle += (-1f64).powi(r) / fact;
        }
        assert!((pseudo_trig(0, 3, 1.0f64).unwrap() - oracle).abs() < 4e-16);
    }

    #[test]
    fn index_validation() {
        assert!(pseudo_trig(2, 2, 1.0f64).is_err());
        assert!(pseudo_trig(0, 1, 1.0f64).is_err());
    }
}
