use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::specfun::recip_gamma_real;

/// Cylinder function with a tabulated continuation to large arguments.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CylinderKind {
    BesselJ,
    StruveH,
}

const ORIGIN_TERMS: usize = 48;
const TAYLOR_ORDER: usize = 28;

/// Values of `J_nu` or `H_nu` on `[0, x_max]`.
///
/// Below `x0` the defining power series is summed directly. Beyond it the
/// function is continued as the solution of
/// `x^2 y'' + x y' + (x^2 - nu^2) y = c x^(nu+1)` by Taylor steps of width
/// `h`, with `c = 0` for `J_nu` and `c = 2^(1-nu) / (sqrt(pi) Gamma(nu + 1/2))`
/// for `H_nu`. The table shares no code with the closed forms.
#[derive(Debug, Clone)]
pub struct CylinderTable<T> {
    kind: CylinderKind,
    nu: T,
    x0: T,
    h: T,
    nodes: Vec<[T; TAYLOR_ORDER]>,
}

impl<T: Real> CylinderTable<T> {
    pub fn bessel_j(nu: T, x_max: T) -> Result<Self> {
        Self::build(CylinderKind::BesselJ, nu, x_max)
    }

    pub fn struve_h(nu: T, x_max: T) -> Result<Self> {
        Self::build(CylinderKind::StruveH, nu, x_max)
    }

    pub fn build(kind: CylinderKind, nu: T, x_max: T) -> Result<Self> {
        if !nu.is_finite() || !x_max.is_finite() {
            return Err(Error::parameter("table order and range must be finite"));
        }
        let x0 = T::lit(4.0);
        let h = T::lit(0.5);
        let mut table = Self {
            kind,
            nu,
            x0,
            h,
            nodes: Vec::new(),
        };
        if x_max <= x0 {
            return Ok(table);
        }
        let count = ((x_max - x0) / h).ceil().to_usize().unwrap_or(0) + 2;
        let c = match kind {
            CylinderKind::BesselJ => T::zero(),
            CylinderKind::StruveH => {
                T::lit(2.0).powf(T::one() - nu) * recip_gamma_real(nu + T::lit(0.5)) / T::PI().sqrt()
            }
        };
        let (mut y, mut dy) = table.series(x0);
        table.nodes.reserve(count);
        for i in 0..count {
            let xi = x0 + h * T::count(i);
            let a = taylor(nu, c, xi, y, dy);
            let (mut ny, mut ndy) = (T::zero(), T::zero());
            for n in (0..TAYLOR_ORDER).rev() {
                ny = ny * h + a[n];
                if n > 0 {
                    ndy = ndy * h + T::count(n) * a[n];
                }
            }
            y = ny;
            dy = ndy;
            table.nodes.push(a);
        }
        Ok(table)
    }

    pub fn kind(&self) -> CylinderKind {
        self.kind
    }

    pub fn order(&self) -> T {
        self.nu
    }

    /// Largest argument the table covers.
    pub fn x_max(&self) -> T {
        if self.nodes.is_empty() {
            self.x0
        } else {
            self.x0 + self.h * (T::count(self.nodes.len() - 1) + T::lit(0.5))
        }
    }

    /// Value at `x >= 0`; NaN outside the tabulated range.
    pub fn eval(&self, x: T) -> T {
        if !(x >= T::zero()) {
            return T::nan();
        }
        if x < self.x0 {
            return self.series(x).0;
        }
        let i = ((x - self.x0) / self.h + T::lit(0.5)).floor().to_usize().unwrap_or(usize::MAX);
        let Some(a) = self.nodes.get(i) else {
            return T::nan();
        };
        let t = x - (self.x0 + self.h * T::count(i));
        a.iter().rev().fold(T::zero(), |acc, &c| acc * t + c)
    }

    /// Power series value and derivative at `0 < x <= x0` (value only at 0).
    fn series(&self, x: T) -> (T, T) {
        let half_x = x * T::lit(0.5);
        let (lead, g1): (T, fn(usize) -> T) = match self.kind {
            CylinderKind::BesselJ => (self.nu, |k| T::count(k) + T::one()),
            CylinderKind::StruveH => (self.nu + T::one(), |k| T::count(k) + T::lit(1.5)),
        };
        let g2_shift = match self.kind {
            CylinderKind::BesselJ => self.nu + T::one(),
            CylinderKind::StruveH => self.nu + T::lit(1.5),
        };
        let (mut y, mut dy) = (T::zero(), T::zero());
        for k in 0..ORIGIN_TERMS {
            let inv = recip_gamma_real(g1(k)) * recip_gamma_real(T::count(k) + g2_shift);
            if inv == T::zero() {
                continue;
            }
            let e = lead + T::count(2 * k);
            let sign = if k % 2 == 0 { T::one() } else { -T::one() };
            let p = if e == T::zero() { T::one() } else { half_x.powf(e) };
            let term = sign * inv * p;
            y += term;
            if x > T::zero() {
                dy += term * e / x;
            }
        }
        (y, dy)
    }
}

/// Taylor coefficients about `x0` from the value and slope there.
fn taylor<T: Real>(nu: T, c: T, x0: T, y: T, dy: T) -> [T; TAYLOR_ORDER] {
    let mut a = [T::zero(); TAYLOR_ORDER];
    a[0] = y;
    a[1] = dy;
    let p = nu + T::one();
    let mut r = c * x0.powf(p);
    let x0sq = x0 * x0;
    let nu_sq = nu * nu;
    for n in 0..TAYLOR_ORDER - 2 {
        let nf = T::count(n);
        let am1 = if n >= 1 { a[n - 1] } else { T::zero() };
        let am2 = if n >= 2 { a[n - 2] } else { T::zero() };
        let num = r
            - x0 * (nf + T::one()) * (T::lit(2.0) * nf + T::one()) * a[n + 1]
            - (nf * nf + x0sq - nu_sq) * a[n]
            - T::lit(2.0) * x0 * am1
            - am2;
        a[n + 2] = num / (x0sq * (nf + T::lit(2.0)) * (nf + T::one()));
        r = r * (p - nf) / ((nf + T::one()) * x0);
    }
    a
}

/// `c_k^(m)(y) = sum_r (-1)^r y^(m r + k) / (m r + k)!` through the roots of
/// `z^m = -1`: `(1/m) Re sum_j z_j^(-k) exp(z_j y)`.
pub fn pseudo_trig_roots<T: Real>(k: usize, m: usize, y: T) -> T {
    let mf = T::count(m);
    let mut sum = Complex::<T>::new(T::zero(), T::zero());
    for j in 0..m {
        let angle = T::PI() * T::count(2 * j + 1) / mf;
        let z = Complex::new(angle.cos(), angle.sin());
        sum += (z * y).exp() * Complex::new(T::zero(), -angle * T::count(k)).exp();
    }
    sum.re / mf
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bessel_far_field() {
        let cases: [(f64, f64, f64); _] = [
            (0.0, 100.0, 0.019_985_850_304_223_122),
            (0.0, 1000.0, 0.024_786_686_152_420_175),
            (1.0, 5000.0, -0.009_117_405_713_646_16),
            (2.5, 333.3, -0.012_923_125_100_418_193),
        ];
        for (nu, x, want) in cases {
            let t = CylinderTable::bessel_j(nu, x + 1.0).unwrap();
            let got = t.eval(x);
            assert!((got - want).abs() < 1e-12, "J_{nu}({x}) = {got}, want {want}");
        }
    }

    #[test]
    fn struve_far_field() {
        let cases: [(f64, f64, f64); _] = [
            (0.0, 100.0, -0.070_878_751_689_647_34),
            (-1.0, 50.0, 0.056_541_324_422_139_444),
            (-1.0, 2000.0, 0.007_094_090_808_848_243),
            (-0.5, 777.0, -0.024_489_253_867_598_28),
            (0.5, 4000.0, 0.021_824_427_175_042_75),
            (1.0, 60.0, 0.728_666_073_805_573_6),
        ];
        for (nu, x, want) in cases {
            let t = CylinderTable::struve_h(nu, x + 1.0).unwrap();
            let got = t.eval(x);
            assert!((got - want).abs() < 1e-12, "H_{nu}({x}) = {got}, want {want}");
        }
    }

    #[test]
    fn near_field_and_range() {
        let t = CylinderTable::bessel_j(0.0f64, 10.0).unwrap();
        assert_eq!(t.eval(0.0), 1.0);
        assert!((t.eval(2.0) - 0.223_890_779_141_235_67).abs() < 1e-15);
        assert!(t.eval(-1.0).is_nan());
        assert!(t.eval(1e6).is_nan());
        assert!(t.x_max() >= 10.0);
    }

    #[test]
    fn pseudo_trig_roots_match_series() {
        let y = 1.3f64;
        for m in 2..5 {
            for k in 0..m {
                let mut s = 0.0f64;
                for r in 0..25 {
                    let n = m * r + k;
                    let fact: f64 = (1..=n).map(|i| i as f64).product();
                    s += if r % 2 == 0 { 1.0 } else { -1.0 } * y.powi(n as i32) / fact;
                }
                assert!((pseudo_trig_roots(k, m, y) - s).abs() < 1e-15, "k={k} m={m}");
            }
        }
        assert!((pseudo_trig_roots(0, 2, 0.7f64) - 0.7f64.cos()).abs() < 1e-15);
    }
}
