//! `opint eval`: named functions and integrals with their achieved accuracy.

use anyhow::{bail, Context, Result};
use num_complex::Complex64;
use opint::closedforms::{self, GeneratingMethod, LorentzGaussMethod};
use opint::series::SeriesControl;
use opint::specfun::{self, BnuMethod};

pub struct FunctionEntry {
    pub name: &'static str,
    pub args: &'static str,
    pub summary: &'static str,
}

pub const FUNCTIONS: &[FunctionEntry] = &[
    FunctionEntry { name: "gamma", args: "x", summary: "Gamma(x)" },
    FunctionEntry { name: "lngamma", args: "x", summary: "ln |Gamma(x)|" },
    FunctionEntry { name: "beta", args: "a b", summary: "B(a, b)" },
    FunctionEntry { name: "bessel_j", args: "nu x", summary: "J_nu(x)" },
    FunctionEntry { name: "bessel_i", args: "mu x", summary: "I_mu(x)" },
    FunctionEntry { name: "struve_h", args: "nu x", summary: "H_nu(x)" },
    FunctionEntry { name: "b_nu", args: "nu x [series|bessel]", summary: "b_nu(x)" },
    FunctionEntry { name: "hermite", args: "n m u v", summary: "H_n^(m)(u, v)" },
    FunctionEntry { name: "tricomi", args: "n m x y", summary: "Hermite-based Tricomi C_n^(m)(x, y)" },
    FunctionEntry { name: "pseudo_trig", args: "k m x", summary: "c_k^(m)(x)" },
    FunctionEntry { name: "fresnel_bessel", args: "nu alpha beta", summary: "int_0^inf x J_2nu(alpha x) exp(i beta x^2) dx" },
    FunctionEntry { name: "struve_halfline", args: "nu b", summary: "int_0^inf H_nu(b x) dx" },
    FunctionEntry { name: "struve_moment", args: "nu", summary: "int_-inf^inf x^-(nu+1) H_nu(x) dx" },
    FunctionEntry { name: "generating_function", args: "x t m [direct|tricomi]", summary: "sum_n t^n/n! J_mn(2x)" },
    FunctionEntry { name: "gauss_dilation", args: "n x", summary: "int_-inf^inf J_n(x exp(-t^2)) dt" },
    FunctionEntry { name: "lorentz_gauss", args: "x [hypergeometric|series|paper-literal]", summary: "int_-inf^inf exp(-x^2/(1+t^2)^2)/(1+t^2)^2 dt" },
];

/// A value and the relative accuracy reached by its evaluation.
pub struct Evaluated {
    pub value: Complex64,
    pub achieved_tol: f64,
}

impl Evaluated {
    fn exact(value: f64) -> Self {
        Self::complex(Complex64::new(value, 0.0))
    }

    fn complex(value: Complex64) -> Self {
        Self { value, achieved_tol: f64::EPSILON }
    }

    fn series(value: f64, last_term: f64) -> Self {
        let rel = if value == 0.0 { last_term } else { last_term / value.abs() };
        Self { value: Complex64::new(value, 0.0), achieved_tol: rel.max(f64::EPSILON) }
    }
}

fn num(args: &[String], i: usize, name: &str) -> Result<f64> {
    let s = args.get(i).with_context(|| format!("missing argument <{name}>"))?;
    s.parse::<f64>().with_context(|| format!("argument <{name}> = {s:?} is not a number"))
}

fn int(args: &[String], i: usize, name: &str) -> Result<usize> {
    let s = args.get(i).with_context(|| format!("missing argument <{name}>"))?;
    s.parse::<usize>().with_context(|| format!("argument <{name}> = {s:?} is not a non-negative integer"))
}

fn arity(args: &[String], min: usize, max: usize, usage: &str) -> Result<()> {
    if args.len() < min || args.len() > max {
        bail!("expected arguments: {usage}");
    }
    Ok(())
}

pub fn evaluate(name: &str, args: &[String]) -> Result<Evaluated> {
    let entry = FUNCTIONS
        .iter()
        .find(|f| f.name == name)
        .with_context(|| format!("unknown function {name:?}; run `opint list` for the catalog"))?;
    let n_required = entry.args.split_whitespace().filter(|a| !a.starts_with('[')).count();
    let n_all = entry.args.split_whitespace().count();
    arity(args, n_required, n_all, entry.args)?;
    let ctrl = SeriesControl::default();
    let out = match name {
        "gamma" => Evaluated::exact(specfun::gamma_real(num(args, 0, "x")?)?),
        "lngamma" => Evaluated::exact(specfun::ln_abs_gamma_real(num(args, 0, "x")?)?.0),
        "beta" => Evaluated::exact(specfun::beta_real(num(args, 0, "a")?, num(args, 1, "b")?)?),
        "bessel_j" => {
            let s = specfun::bessel_j_series(num(args, 0, "nu")?, num(args, 1, "x")?, ctrl)?;
            Evaluated::series(s.value, s.tail.last_term_magnitude)
        }
        "bessel_i" => {
            let s = specfun::bessel_i_series(num(args, 0, "mu")?, num(args, 1, "x")?, ctrl)?;
            Evaluated::series(s.value, s.tail.last_term_magnitude)
        }
        "struve_h" => {
            let s = specfun::struve_h_series(num(args, 0, "nu")?, num(args, 1, "x")?, ctrl)?;
            Evaluated::series(s.value, s.tail.last_term_magnitude)
        }
        "b_nu" => {
            let (nu, x) = (num(args, 0, "nu")?, num(args, 1, "x")?);
            let method = match args.get(2).map(String::as_str) {
                None | Some("series") => BnuMethod::Series,
                Some("bessel") => BnuMethod::BesselClosedForm,
                Some(m) => bail!("unknown method {m:?}; expected series or bessel"),
            };
            Evaluated::complex(specfun::b_nu(nu, Complex64::new(x, 0.0), method)?)
        }
        "hermite" => {
            let (n, m) = (int(args, 0, "n")?, int(args, 1, "m")?);
            let (u, v) = (num(args, 2, "u")?, num(args, 3, "v")?);
            Evaluated::complex(specfun::hermite_higher(n, m, Complex64::new(u, 0.0), Complex64::new(v, 0.0))?)
        }
        "tricomi" => {
            let (n, m) = (int(args, 0, "n")?, int(args, 1, "m")?);
            let (x, y) = (num(args, 2, "x")?, num(args, 3, "y")?);
            let s = specfun::hermite_tricomi_series(n, m, Complex64::new(x, 0.0), Complex64::new(y, 0.0), ctrl)?;
            let mut e = Evaluated::series(s.value.re, s.tail.last_term_magnitude);
            e.value = s.value;
            e
        }
        "pseudo_trig" => {
            let (k, m, x) = (int(args, 0, "k")?, int(args, 1, "m")?, num(args, 2, "x")?);
            let s = specfun::pseudo_trig_series(k, m, x, ctrl)?;
            Evaluated::series(s.value, s.tail.last_term_magnitude)
        }
        "fresnel_bessel" => {
            let (nu, a, b) = (num(args, 0, "nu")?, num(args, 1, "alpha")?, num(args, 2, "beta")?);
            Evaluated::complex(closedforms::fresnel_bessel(nu, a, b)?)
        }
        "struve_halfline" => {
            Evaluated::exact(closedforms::struve_halfline_integral(num(args, 0, "nu")?, num(args, 1, "b")?)?)
        }
        "struve_moment" => Evaluated::exact(closedforms::struve_moment_integral(num(args, 0, "nu")?)?),
        "generating_function" => {
            let (x, t, m) = (num(args, 0, "x")?, num(args, 1, "t")?, int(args, 2, "m")?);
            let method = match args.get(3).map(String::as_str) {
                None | Some("direct") => GeneratingMethod::Direct,
                Some("tricomi") => GeneratingMethod::Tricomi,
                Some(m) => bail!("unknown method {m:?}; expected direct or tricomi"),
            };
            Evaluated::exact(closedforms::bessel_generating_function(x, t, m, method)?)
        }
        "gauss_dilation" => {
            let (n, x) = (int(args, 0, "n")?, num(args, 1, "x")?);
            let s = closedforms::bessel_gauss_dilation_summed(n, x, ctrl)?;
            Evaluated::series(s.value, s.tail.last_term_magnitude)
        }
        "lorentz_gauss" => {
            let x = num(args, 0, "x")?;
            let method = match args.get(1).map(String::as_str) {
                None | Some("hypergeometric") => LorentzGaussMethod::Hypergeometric,
                Some("series") => LorentzGaussMethod::Series,
                Some("paper-literal") => LorentzGaussMethod::PaperLiteral,
                Some(m) => bail!("unknown method {m:?}; expected hypergeometric, series or paper-literal"),
            };
            Evaluated::exact(closedforms::lorentz_gauss_integral(x, method)?)
        }
        _ => unreachable!("every cataloged function has an evaluator"),
    };
    Ok(out)
}
