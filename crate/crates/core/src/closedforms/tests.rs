use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex;

use super::*;
use crate::specfun::BnuMethod;

#[test]
fn order_zero_fresnel_bessel() {
    let v = fresnel_bessel_order_zero(1.0f64, 1.0).unwrap();
    let want = Complex::new(0.0, 0.5) * Complex::new(0.0, -0.25).exp();
    assert!((v - want).norm() < 1e-16);
    assert!((v.re - 0.123_701_979_627_261_47).abs() < 1e-16 && (v.im - 0.484_456_210_855_322_37).abs() < 1e-16);
    for (a, b) in [(1.0f64, 1.0), (0.5, 2.0), (2.0, 5.0)] {
        let general = fresnel_bessel(0.0, a, b).unwrap();
        let special = fresnel_bessel_order_zero(a, b).unwrap();
        assert!((general - special).norm() <= 1e-12 * special.norm(), "({a}, {b})");
    }
}

#[test]
fn fresnel_bessel_domain() {
    assert!(fresnel_bessel(0.0f64, 2.0, 1.0).is_err());
    assert!(fresnel_bessel(-0.5f64, 1.0, 1.0).is_err());
    assert!(fresnel_bessel(0.0f64, 1.0, 0.0).is_err());
}

#[test]
fn fresnel_bessel_methods_agree() {
    for nu in [0.5f64, 1.0, 1.5] {
        let s = fresnel_bessel_with(nu, 1.0, 2.0, BnuMethod::Series).unwrap();
        let c = fresnel_bessel_with(nu, 1.0, 2.0, BnuMethod::BesselClosedForm).unwrap();
        assert!((s - c).norm() <= 1e-12 * s.norm());
    }
}

#[test]
fn fresnel_bessel_small_order_limit() {
    let target = fresnel_bessel_order_zero(1.0f64, 1.0).unwrap();
    let d: Vec<f64> = [0.1, 0.01, 0.001]
        .iter()
        .map(|&nu| (fresnel_bessel(nu, 1.0, 1.0).unwrap() - target).norm())
        .collect();
    assert!(d[0] > d[1] && d[1] > d[2] && d[2] < 1e-3);
}

#[test]
fn struve_halfline_values() {
    assert!((struve_halfline_integral(-0.5f64, 1.0).unwrap() - 1.0).abs() < 1e-15);
    assert!((struve_halfline_integral(-0.5f64, 2.0).unwrap() - 0.5).abs() < 1e-15);
    let z = struve_halfline_integral(-1.0f64, 3.0).unwrap();
    assert_eq!(z, 0.0);
    assert!(z.is_sign_positive());
    assert!((struve_halfline_integral(-1.5f64, 1.0).unwrap() + 1.0).abs() < 1e-15);
    assert!(struve_halfline_integral(0.0f64, 1.0).is_err());
    assert!(struve_halfline_integral(-2.0f64, 1.0).is_err());
    assert!(struve_halfline_integral(-1.0f64, 0.0).is_err());
}

#[test]
fn struve_moment_values() {
    assert!((struve_moment_integral(0.0f64).unwrap() - PI).abs() < 1e-15);
    assert!((struve_moment_integral(0.5f64).unwrap() - (2.0 * PI).sqrt()).abs() < 1e-15);
    assert!((struve_moment_integral(1.0f64).unwrap() - PI / 2.0).abs() < 1e-15);
    assert!(struve_moment_integral(-0.5f64).is_err());
}

#[test]
fn generating_function_edges_and_agreement() {
    let j0 = crate::specfun::bessel_j(0.0f64, 2.0).unwrap();
    for m in [2, 3] {
        let v = bessel_generating_function(1.0f64, 0.0, m, GeneratingMethod::Direct).unwrap();
        assert!((v - j0).abs() < 1e-15);
        let v = bessel_generating_function(0.0f64, 0.7, m, GeneratingMethod::Direct).unwrap();
        assert_eq!(v, 1.0);
    }
    let d = bessel_generating_function(1.0f64, 0.5, 2, GeneratingMethod::Direct).unwrap();
    let t = bessel_generating_function(1.0f64, 0.5, 2, GeneratingMethod::Tricomi).unwrap();
    assert!((d - t).abs() <= 1e-12 * d.abs());
    assert!(bessel_generating_function(1.0f64, 0.5, 1, GeneratingMethod::Direct).is_err());
}

#[test]
fn gauss_dilation_series() {
    assert_eq!(bessel_gauss_dilation(1, 0.0f64, 1e-16).unwrap(), 0.0);
    // Leading terms at n = 1, x = 1, summed by hand.
    let mut want = 0.0;
    let mut w = 0.5f64;
    for k in 0..20 {
        want += w / ((2 * k + 1) as f64).sqrt();
        w *= -0.25 / (((k + 1) * (k + 2)) as f64);
    }
    want *= PI.sqrt();
    let s = bessel_gauss_dilation_summed(1, 1.0f64, crate::series::SeriesControl::default()).unwrap();
    assert!(s.tail.converged);
    assert!((s.value - want).abs() < 1e-15);
    assert!(bessel_gauss_dilation(0, 1.0f64, 1e-16).is_err());
}

#[test]
fn lorentz_gauss_methods() {
    let h = lorentz_gauss_integral(0.0f64, LorentzGaussMethod::Hypergeometric).unwrap();
    let s = lorentz_gauss_integral(0.0f64, LorentzGaussMethod::Series).unwrap();
    assert!((h - PI / 2.0).abs() < 1e-15 && (s - PI / 2.0).abs() < 1e-15);
    for x in [0.5f64, 1.0, 2.0, 3.0] {
        let h = lorentz_gauss_integral(x, LorentzGaussMethod::Hypergeometric).unwrap();
        let s = lorentz_gauss_integral(x, LorentzGaussMethod::Series).unwrap();
        assert!((h - s).abs() <= 1e-9 * h.abs(), "x={x}: {h} vs {s}");
    }
}

#[test]
fn misprinted_series_gives_quarter_pi() {
    let v = lorentz_gauss_integral(0.0f64, LorentzGaussMethod::PaperLiteral).unwrap();
    assert!((v - PI / 4.0).abs() < 1e-15);
    assert!((v - PI / 2.0).abs() > 0.5);
    assert!(lorentz_gauss_integral(1.0f64, LorentzGaussMethod::PaperLiteral).is_err());
}

#[test]
fn catalog_shape() {
    let cat = catalog();
    let ids: Vec<_> = cat.iter().map(|d| d.id).collect();
    for want in ["eq08_fresnel_bessel", "eq12_struve_halfline", "eq30_lorentz_gauss"] {
        assert!(ids.contains(&want));
    }
    let mut sorted = ids.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), ids.len());
    for d in &cat {
        assert!(!d.parameter_domain.is_empty(), "{}", d.id);
        for (name, _) in &d.default_grid {
            assert!(d.parameter_names().contains(name), "{} {}", d.id, name);
        }
    }
}

#[test]
fn domain_checks_report_reasons() {
    let d = find_identity("eq08_fresnel_bessel").unwrap();
    let point: BTreeMap<String, f64> = [("alpha".to_string(), 2.0), ("beta".to_string(), 1.0)].into();
    let err = d.check_point(&point).unwrap_err();
    assert!(err.contains("alpha^2 < 4 beta"), "{err}");
    let d = find_identity("eq12_struve_halfline").unwrap();
    let point: BTreeMap<String, f64> = [("nu".to_string(), 0.5), ("b".to_string(), 1.0)].into();
    assert!(d.check_point(&point).unwrap_err().contains("nu < 0"));
    let point: BTreeMap<String, f64> = [("nu".to_string(), -0.5)].into();
    assert!(d.check_point(&point).unwrap_err().contains("missing"));
    let d = find_identity("eq28_bessel_gauss_dilation").unwrap();
    let point: BTreeMap<String, f64> = [("n".to_string(), 1.5), ("x".to_string(), 1.0)].into();
    assert!(d.check_point(&point).unwrap_err().contains("integer"));
}
