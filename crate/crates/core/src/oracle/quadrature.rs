use num_complex::Complex;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{is_finite_c, Real};

use super::regularize::RegularizationTrace;

/// Outcome of an oracle integration.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadratureResult<T> {
    pub value: Complex<T>,
    pub abs_error_estimate: T,
    pub evaluations: usize,
    pub converged: bool,
    pub trace: Option<RegularizationTrace<T>>,
}

/// Accuracy and budget for adaptive integration.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadOptions<T> {
    pub abs_tol: T,
    pub rel_tol: T,
    pub max_evals: usize,
    /// Interior points where the integrand is known to be non-smooth.
    pub breakpoints: Vec<T>,
    /// Return a non-converged result instead of [`Error::QuadratureBudget`].
    pub allow_partial: bool,
}

pub const DEFAULT_MAX_EVALS: usize = 2_000_000;

impl<T: Real> QuadOptions<T> {
    pub fn abs(tol: T) -> Self {
        Self {
            abs_tol: tol,
            rel_tol: T::zero(),
            max_evals: DEFAULT_MAX_EVALS,
            breakpoints: Vec::new(),
            allow_partial: false,
        }
    }

    pub fn rel(mut self, rel_tol: T) -> Self {
        self.rel_tol = rel_tol;
        self
    }

    pub fn budget(mut self, max_evals: usize) -> Self {
        self.max_evals = max_evals;
        self
    }

    pub fn breakpoints(mut self, points: Vec<T>) -> Self {
        self.breakpoints = points;
        self
    }

    pub fn partial(mut self) -> Self {
        self.allow_partial = true;
        self
    }

    pub(crate) fn target(&self, value: Complex<T>) -> T {
        self.abs_tol.max(self.rel_tol * value.norm())
    }
}

const XGK: [f64; 11] = [
    0.995_657_163_025_808_1,
    0.973_906_528_517_171_7,
    0.930_157_491_355_708_2,
    0.865_063_366_688_984_5,
    0.780_817_726_586_416_9,
    0.679_409_568_299_024_4,
    0.562_757_134_668_604_7,
    0.433_395_394_129_247_2,
    0.294_392_862_701_460_2,
    0.148_874_338_981_631_22,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874,
    0.032_558_162_307_964_725,
    0.054_755_896_574_351_995,
    0.075_039_674_810_919_96,
    0.093_125_454_583_697_6,
    0.109_387_158_802_297_64,
    0.123_491_976_262_065_84,
    0.134_709_217_311_473_34,
    0.142_775_938_577_060_09,
    0.147_739_104_901_338_49,
    0.149_445_554_002_916_9,
];

// Gauss weights for XGK[1], XGK[3], ..., XGK[9].
const WG: [f64; 5] = [
    0.066_671_344_308_688_14,
    0.149_451_349_150_580_6,
    0.219_086_362_515_982_04,
    0.269_266_719_309_996_35,
    0.295_524_224_714_752_87,
];

#[derive(Debug, Clone, Copy)]
struct Panel<T> {
    a: T,
    b: T,
    value: Complex<T>,
    error: T,
    refinable: bool,
}

fn not_finite<T: Real>(x: T) -> Error {
    Error::domain(format!("integrand is not finite at x = {x}"))
}

/// One 21-point Kronrod panel with the 10-point Gauss error estimate.
fn kronrod21<T: Real, F: Fn(T) -> Complex<T>>(f: &F, a: T, b: T) -> Result<Panel<T>> {
    let half = T::lit(0.5);
    let center = (a + b) * half;
    let hl = (b - a) * half;
    let mut fv = [Complex::<T>::zero(); 21];
    for (i, &x) in XGK.iter().enumerate() {
        if i == 10 {
            fv[20] = f(center);
            if !is_finite_c(fv[20]) {
                return Err(not_finite(center));
            }
        } else {
            let d = hl * T::lit(x);
            let (xl, xr) = (center - d, center + d);
            fv[2 * i] = f(xl);
            fv[2 * i + 1] = f(xr);
            if !is_finite_c(fv[2 * i]) {
                return Err(not_finite(xl));
            }
            if !is_finite_c(fv[2 * i + 1]) {
                return Err(not_finite(xr));
            }
        }
    }
    let mut resk = fv[20] * T::lit(WGK[10]);
    let mut resg = Complex::<T>::zero();
    for i in 0..10 {
        let pair = fv[2 * i] + fv[2 * i + 1];
        resk += pair * T::lit(WGK[i]);
        if i % 2 == 1 {
            resg += pair * T::lit(WG[i / 2]);
        }
    }
    let mean = resk * half;
    let eps = T::epsilon();
    let part = |g: fn(Complex<T>) -> T| {
        let mut abs = T::lit(WGK[10]) * g(fv[20]).abs();
        let mut asc = T::lit(WGK[10]) * (g(fv[20]) - g(mean)).abs();
        for i in 0..10 {
            let w = T::lit(WGK[i]);
            abs += w * (g(fv[2 * i]).abs() + g(fv[2 * i + 1]).abs());
            asc += w * ((g(fv[2 * i]) - g(mean)).abs() + (g(fv[2 * i + 1]) - g(mean)).abs());
        }
        let abs = abs * hl.abs();
        let asc = asc * hl.abs();
        let mut err = ((g(resk) - g(resg)) * hl).abs();
        if asc != T::zero() && err != T::zero() {
            err = asc * T::one().min((T::lit(200.0) * err / asc).powf(T::lit(1.5)));
        }
        if abs > T::min_positive_value() / (T::lit(50.0) * eps) {
            err = err.max(T::lit(50.0) * eps * abs);
        }
        err
    };
    let error = part(|z| z.re) + part(|z| z.im);
    let width_floor = T::lit(100.0) * eps * a.abs().max(b.abs()).max(T::min_positive_value());
    Ok(Panel {
        a,
        b,
        value: resk * hl,
        error,
        refinable: (b - a) * half > width_floor,
    })
}

/// Globally adaptive bisection over the given ordered breakpoints.
pub(crate) fn adaptive<T: Real, F: Fn(T) -> Complex<T>>(
    f: &F,
    points: &[T],
    opts: &QuadOptions<T>,
) -> Result<QuadratureResult<T>> {
    let mut panels = Vec::with_capacity(points.len() * 2);
    for w in points.windows(2) {
        if w[1] > w[0] {
            panels.push(kronrod21(f, w[0], w[1])?);
        }
    }
    let mut evals = 21 * panels.len();
    let total = |ps: &[Panel<T>]| {
        ps.iter().fold((Complex::<T>::zero(), T::zero()), |(v, e), p| (v + p.value, e + p.error))
    };
    let (mut value, mut error) = total(&panels);
    let mut iterations = 0usize;
    while error > opts.target(value) && evals + 42 <= opts.max_evals {
        let worst = panels
            .iter()
            .enumerate()
            .filter(|(_, p)| p.refinable)
            .max_by(|x, y| x.1.error.partial_cmp(&y.1.error).unwrap_or(std::cmp::Ordering::Equal))
            .map(|(i, _)| i);
        let Some(i) = worst else { break };
        let p = panels.swap_remove(i);
        let mid = (p.a + p.b) * T::lit(0.5);
        let left = kronrod21(f, p.a, mid)?;
        let right = kronrod21(f, mid, p.b)?;
        evals += 42;
        panels.push(left);
        panels.push(right);
        iterations += 1;
        // Re-summing occasionally keeps the running totals free of drift.
        if iterations.is_multiple_of(64) {
            (value, error) = total(&panels);
        } else {
            value = value - p.value + left.value + right.value;
            error = error - p.error + left.error + right.error;
        }
    }
    (value, error) = total(&panels);
    let converged = error <= opts.target(value);
    if !converged && !opts.allow_partial {
        return Err(Error::QuadratureBudget {
            value_re: value.re.to_f64_lossy(),
            value_im: value.im.to_f64_lossy(),
            estimate: error.to_f64_lossy(),
            evaluations: evals,
        });
    }
    Ok(QuadratureResult {
        value,
        abs_error_estimate: error,
        evaluations: evals,
        converged,
        trace: None,
    })
}

fn check_interval<T: Real>(a: T, b: T) -> Result<()> {
    if a.is_finite() && b.is_finite() && a < b {
        Ok(())
    } else {
        Err(Error::domain(format!("integration interval ({a}, {b}) must be finite with a < b")))
    }
}

/// `int_a^b f(x) dx` to absolute tolerance `tol`.
pub fn integrate_finite<T: Real, F: Fn(T) -> Complex<T>>(
    f: F,
    a: T,
    b: T,
    tol: T,
) -> Result<QuadratureResult<T>> {
    integrate_finite_with(f, a, b, &QuadOptions::abs(tol))
}

pub fn integrate_finite_with<T: Real, F: Fn(T) -> Complex<T>>(
    f: F,
    a: T,
    b: T,
    opts: &QuadOptions<T>,
) -> Result<QuadratureResult<T>> {
    check_interval(a, b)?;
    let mut points = vec![a];
    let mut inner: Vec<T> = opts.breakpoints.iter().copied().filter(|&x| x > a && x < b).collect();
    inner.sort_by(|x, y| x.partial_cmp(y).unwrap_or(std::cmp::Ordering::Equal));
    points.extend(inner);
    points.push(b);
    adaptive(&f, &points, opts)
}

/// `int_a^b (x - a)^p (b - x)^q g(x) dx` with `p, q > -1`.
///
/// Each half is written in the distance to its endpoint, `d = s^2`, so the
/// algebraic factors are evaluated exactly and a square-root singularity
/// becomes smooth. `g` receives `x` together with `x - a` and `b - x`.
pub fn integrate_algebraic_weight<T: Real, G: Fn(T, T, T) -> Complex<T>>(
    g: G,
    a: T,
    b: T,
    p: T,
    q: T,
    opts: &QuadOptions<T>,
) -> Result<QuadratureResult<T>> {
    check_interval(a, b)?;
    if !(p > -T::one() && q > -T::one()) {
        return Err(Error::domain(format!(
            "endpoint exponents must exceed -1, got ({p}, {q})"
        )));
    }
    let two = T::lit(2.0);
    let len = b - a;
    let half = len / two;
    let root = half.sqrt();
    let weight = |d: T, e: T| d.powf(p) * e.powf(q);
    // Left half: x = a + s^2, dx = 2 s ds.
    let left = |s: T| {
        let d = s * s;
        let e = len - d;
        g(a + d, d, e) * (weight(d, e) * two * s)
    };
    // Right half: x = b - s^2.
    let right = |s: T| {
        let e = s * s;
        let d = len - e;
        g(b - e, d, e) * (weight(d, e) * two * s)
    };
    let half_opts = QuadOptions {
        abs_tol: opts.abs_tol / two,
        breakpoints: Vec::new(),
        ..opts.clone()
    };
    let l = adaptive(&left, &[T::zero(), root], &half_opts)?;
    let r = adaptive(&right, &[T::zero(), root], &half_opts)?;
    Ok(QuadratureResult {
        value: l.value + r.value,
        abs_error_estimate: l.abs_error_estimate + r.abs_error_estimate,
        evaluations: l.evaluations + r.evaluations,
        converged: l.converged && r.converged,
        trace: None,
    })
}
