//! Series-side evaluations against independent quadrature of the defining
//! integrals.

use std::f64::consts::PI;

use num_complex::Complex64;
use opint::oracle::{
    integrate_algebraic_weight, integrate_finite, integrate_half_line, integrate_oscillatory_gaussian,
    integrate_real_line, CylinderTable, Damping, QuadOptions,
};
use opint::transforms::{beta_transform, borel_transform, CoefficientSeries};
use opint::umbral::{apply_mellin_multiplier, mellin_master, GammaRatioSequence, MellinMultiplier, PowerSeriesSpec, UmbralSeries};

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn rel(a: Complex64, b: Complex64) -> f64 {
    (a - b).norm() / b.norm()
}

#[test]
fn gaussian_kernel_on_bessel() {
    for n in [1usize, 2, 3] {
        let spec = PowerSeriesSpec::bessel_j(n as f64).unwrap();
        for x in [0.5f64, 1.0, 2.0, 4.0] {
            let series = apply_mellin_multiplier(&MellinMultiplier::GaussianKernel, &spec, x, 1e-16).unwrap();
            let table = CylinderTable::bessel_j(n as f64, x + 1.0).unwrap();
            let q = integrate_real_line(|t: f64| c(table.eval(x * (-t * t).exp())), 1e-12).unwrap();
            assert!(rel(series, q.value) <= 1e-7, "n={n} x={x}");
        }
    }
}

#[test]
fn lorentz_kernel_on_gaussian_moment() {
    let spec = PowerSeriesSpec::gaussian_moment();
    for x in [0.5f64, 1.0, 2.0, 3.0] {
        let series = apply_mellin_multiplier(&MellinMultiplier::LorentzPower, &spec, x, 1e-16).unwrap();
        let f = |t: f64| {
            let y = x / (1.0 + t * t);
            c(y * y * (-y * y).exp())
        };
        let q = integrate_real_line(f, 1e-12).unwrap();
        assert!(rel(series, q.value) <= 1e-7, "x={x}");
    }
}

#[test]
fn borel_kernel_on_cosine() {
    let spec = CoefficientSeries::<f64>::pseudo_trig(0, 2).unwrap().to_power_series().unwrap();
    for x in [0.2f64, 0.5, 0.8] {
        let series = apply_mellin_multiplier(&MellinMultiplier::BorelFactorial, &spec, x, 1e-16).unwrap();
        let q = integrate_half_line(|t: f64| c((-t).exp() * (x * t).cos()), 1e-12, Damping::None).unwrap();
        assert!(rel(series, q.value) <= 1e-7, "x={x}");
    }
}

#[test]
fn beta_kernel_on_exponential() {
    let spec = PowerSeriesSpec::from_umbral(&UmbralSeries::exponential()).unwrap();
    for (a, b) in [(1.0f64, 1.0f64), (2.0, 3.0), (0.5, 0.5)] {
        let kind = MellinMultiplier::beta_kernel(a, b).unwrap();
        for x in [0.5f64, 1.0, 3.0] {
            let series = apply_mellin_multiplier(&kind, &spec, x, 1e-16).unwrap();
            let q = integrate_algebraic_weight(|u, _, _| c((-u * x).exp()), 0.0, 1.0, a - 1.0, b - 1.0, &QuadOptions::abs(1e-12))
                .unwrap();
            assert!(rel(series, q.value) <= 1e-7, "({a},{b}) x={x}");
        }
    }
}

#[test]
fn master_theorem_against_mellin_quadrature() {
    for nu in [0.25f64, 0.5, 0.75] {
        let e = mellin_master(&UmbralSeries::exponential(), c(nu)).unwrap();
        let q = integrate_half_line(|x: f64| c(x.powf(nu - 1.0) * (-x).exp()), 1e-12, Damping::None).unwrap();
        assert!(rel(e, q.value) <= 1e-8);
        let g = mellin_master(&UmbralSeries::geometric(), c(nu)).unwrap();
        let q = integrate_half_line(|x: f64| c(x.powf(nu - 1.0) / (1.0 + x)), 1e-12, Damping::None).unwrap();
        assert!(rel(g, q.value) <= 1e-8);
        assert!((g.re - PI / (PI * nu).sin()).abs() < 1e-13);
    }
}

#[test]
fn borel_transform_against_quadrature() {
    let cos = CoefficientSeries::<f64>::pseudo_trig(0, 2).unwrap();
    let c3 = CoefficientSeries::<f64>::pseudo_trig(0, 3).unwrap();
    for x in [0.2f64, 0.5, 0.8] {
        let l = borel_transform(&cos).unwrap().eval(c(x), 1e-16).unwrap();
        let q = integrate_half_line(|t: f64| c((-t).exp() * (x * t).cos()), 1e-12, Damping::None).unwrap();
        assert!(rel(l, q.value) <= 1e-8);
        assert!((l.re - 1.0 / (1.0 + x * x)).abs() < 1e-12);

        let l = borel_transform(&c3).unwrap().eval(c(x), 1e-16).unwrap();
        let end = 50.0 / (1.0 - 0.5 * x);
        let q = integrate_finite(|t: f64| c((-t).exp() * opint::oracle::pseudo_trig_roots(0, 3, x * t)), 0.0, end, 1e-12).unwrap();
        assert!(rel(l, q.value) <= 1e-8);
        assert!((l.re - 1.0 / (1.0 + x * x * x)).abs() < 1e-12);
    }
    let family = CoefficientSeries::borel_family(&GammaRatioSequence::<f64>::bessel()).unwrap();
    let l = borel_transform(&family).unwrap();
    for x in [0.25f64, 0.5, 1.0, 2.0] {
        let v = l.eval(c(x), 1e-16).unwrap();
        let j0 = CylinderTable::bessel_j(0.0, 2.0 * x.sqrt() + 1.0).unwrap().eval(2.0 * x.sqrt());
        assert!((v.re - j0).abs() <= 1e-12, "x={x}");
    }
}

#[test]
fn beta_transform_against_quadrature_on_a_grid() {
    let f = UmbralSeries::exponential();
    for (a, b) in [(1.0f64, 1.0f64), (2.0, 3.0), (0.5, 0.5)] {
        let s = beta_transform(&f, a, b).unwrap();
        for i in 0..=12 {
            let x = 0.25 * i as f64;
            let v = s.eval(c(x), 1e-16).unwrap();
            let q = integrate_algebraic_weight(|u, _, _| c((-u * x).exp()), 0.0, 1.0, a - 1.0, b - 1.0, &QuadOptions::abs(1e-12))
                .unwrap();
            assert!(rel(v, q.value) <= 1e-8, "({a},{b}) x={x}");
        }
    }
}

#[test]
fn error_estimates_are_honest_on_known_fixtures() {
    let mut checks: Vec<(f64, f64)> = Vec::new();
    let mut push = |q: opint::QuadratureResult64, exact: Complex64| {
        checks.push(((q.value - exact).norm(), q.abs_error_estimate));
    };
    let tol = 1e-10;
    push(integrate_finite(|u: f64| c(u), 0.0, 1.0, tol).unwrap(), c(0.5));
    push(integrate_finite(|u: f64| c(u.powf(-0.5)), 0.0, 1.0, tol).unwrap(), c(2.0));
    push(integrate_finite(|u: f64| c(u * (1.0 - u) * (1.0 - u)), 0.0, 1.0, tol).unwrap(), c(1.0 / 12.0));
    push(integrate_half_line(|x: f64| c((-x).exp()), tol, Damping::None).unwrap(), c(1.0));
    push(integrate_half_line(|x: f64| c(x.powf(-0.5) / (1.0 + x)), tol, Damping::None).unwrap(), c(PI));
    push(integrate_real_line(|t: f64| c((-t * t).exp()), tol).unwrap(), c(PI.sqrt()));
    push(integrate_real_line(|t: f64| c(1.0 / ((1.0 + t * t) * (1.0 + t * t))), tol).unwrap(), c(PI / 2.0));
    push(integrate_real_line(|t: f64| c((1.0 + t * t).powi(-3)), tol).unwrap(), c(3.0 * PI / 8.0));
    push(integrate_oscillatory_gaussian(|x: f64| c(x), 1.0, 1e-4).unwrap(), Complex64::new(0.0, 0.5));
    push(integrate_oscillatory_gaussian(|x: f64| c(x), 2.0, 1e-4).unwrap(), Complex64::new(0.0, 0.25));
    let honest = checks.iter().filter(|(err, est)| *err <= 3.0 * est.max(f64::EPSILON)).count();
    assert!(honest as f64 >= 0.95 * checks.len() as f64, "{checks:?}");
}

#[test]
fn ladder_residuals_shrink_on_gaussian_fixtures() {
    for beta in [1.0f64, 2.0] {
        let q = integrate_oscillatory_gaussian(|x: f64| c(x), beta, 1e-4).unwrap();
        let r = &q.trace.as_ref().unwrap().residuals;
        let n = r.len();
        assert!(n >= 3);
        assert!(r[n - 3] > r[n - 2] && r[n - 2] > r[n - 1], "{r:?}");
    }
}
