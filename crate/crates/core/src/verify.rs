//! Closed form against oracle over parameter grids, with machine-readable
//! reports.
//!
//! The oracle side of every identity integrates the defining integrand with
//! the [`crate::oracle`] routines and evaluates Bessel, Struve and
//! pseudo-trigonometric integrands through the oracle's own tables; nothing on
//! that side calls the umbral engine or the closed forms.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_complex::Complex;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::closedforms::{
    self, find_identity, GeneratingMethod, IdentityDescriptor, LorentzGaussMethod,
};
use crate::error::{Error, Result};
use crate::oracle::{
    integrate_algebraic_weight, integrate_finite_with, integrate_half_line, integrate_half_line_with,
    integrate_oscillatory_gaussian_with, integrate_real_line_with, series_sum, CylinderTable, Damping,
    Extrapolation, QuadOptions, SeriesControl,
};
use crate::specfun::{b_nu, BnuMethod};
use crate::transforms::{beta_transform, borel_hybrid_hermite, borel_transform, BorelVariable, CoefficientSeries};
use crate::umbral::{mellin_master, GammaRatioSequence, UmbralSeries};

/// Values below this magnitude are compared absolutely.
pub const ABSOLUTE_FLOOR: f64 = 1e-12;

/// Requested accuracy of non-regularized oracle quadrature.
const QUAD_TOL: f64 = 1e-13;

/// Residual bound handed to the regularized oracles. Their error estimate is
/// conservative, so the pass decision rests on the value comparison.
const LADDER_GUARD: f64 = 1e-3;

/// One axis of a grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridAxis {
    pub name: String,
    pub values: Vec<f64>,
}

impl FromStr for GridAxis {
    type Err = String;

    /// `name=v1,v2,...` or `name=min:max:count`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let (name, spec) = s
            .split_once('=')
            .ok_or_else(|| format!("grid axis {s:?} must look like name=v1,v2 or name=min:max:n"))?;
        let name = name.trim();
        if name.is_empty() {
            return Err(format!("grid axis {s:?} has no parameter name"));
        }
        let num = |t: &str| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| format!("cannot parse {t:?} as a number in grid axis {s:?}"))
        };
        let values = if spec.contains(':') {
            let parts: Vec<&str> = spec.split(':').collect();
            if parts.len() != 3 {
                return Err(format!("range {spec:?} must be min:max:count"));
            }
            let (lo, hi) = (num(parts[0])?, num(parts[1])?);
            let n: usize = parts[2]
                .trim()
                .parse()
                .map_err(|_| format!("count {:?} must be a positive integer", parts[2]))?;
            match n {
                0 => return Err(format!("range {spec:?} needs a positive count")),
                1 => vec![lo],
                _ => (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect(),
            }
        } else {
            spec.split(',').map(num).collect::<std::result::Result<Vec<_>, _>>()?
        };
        if values.is_empty() {
            return Err(format!("grid axis {s:?} has no values"));
        }
        Ok(Self {
            name: name.to_string(),
            values,
        })
    }
}

/// Per-parameter value lists; points are their Cartesian product.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub axes: Vec<GridAxis>,
}

impl GridSpec {
    pub fn parse<S: AsRef<str>>(specs: &[S]) -> std::result::Result<Self, String> {
        let mut grid = Self::default();
        for s in specs {
            // Several axes may share one argument, separated by ';' or spaces.
            for part in s.as_ref().split([';', ' ']).filter(|p| !p.trim().is_empty()) {
                let axis: GridAxis = part.parse()?;
                grid.axes.retain(|a| a.name != axis.name);
                grid.axes.push(axis);
            }
        }
        Ok(grid)
    }

    /// The descriptor's default grid with these axes substituted.
    pub fn resolve(&self, desc: &IdentityDescriptor) -> std::result::Result<Self, String> {
        let names = desc.parameter_names();
        if let Some(a) = self.axes.iter().find(|a| !names.contains(&a.name.as_str())) {
            return Err(format!(
                "{} has no parameter {:?}; parameters are {}",
                desc.id,
                a.name,
                names.join(", ")
            ));
        }
        let mut axes = Vec::new();
        for name in names {
            let axis = match self.axes.iter().find(|a| a.name == name) {
                Some(a) => a.clone(),
                None => match desc.default_grid.iter().find(|(n, _)| *n == name) {
                    Some((n, v)) => GridAxis {
                        name: n.to_string(),
                        values: v.clone(),
                    },
                    None => return Err(format!("{}: no values for parameter {name}", desc.id)),
                },
            };
            axes.push(axis);
        }
        Ok(Self { axes })
    }

    /// Points in lexicographic order of the axes, first axis slowest.
    pub fn points(&self) -> Vec<BTreeMap<String, f64>> {
        let mut out = vec![BTreeMap::new()];
        for axis in &self.axes {
            out = out
                .into_iter()
                .flat_map(|p| {
                    axis.values.iter().map(move |&v| {
                        let mut q = p.clone();
                        q.insert(axis.name.clone(), v);
                        q
                    })
                })
                .collect();
        }
        out
    }
}

/// Complex value as `{"re": ..., "im": ...}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ComplexValue {
    pub re: f64,
    pub im: f64,
}

impl From<Complex<f64>> for ComplexValue {
    fn from(z: Complex<f64>) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<ComplexValue> for Complex<f64> {
    fn from(z: ComplexValue) -> Self {
        Complex::new(z.re, z.im)
    }
}

impl fmt::Display for ComplexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im == 0.0 {
            write!(f, "{}", self.re)
        } else if self.im < 0.0 {
            write!(f, "{}-{}i", self.re, -self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    /// Both sides evaluated and disagree.
    Fail,
    /// One side could not be evaluated.
    Error,
    /// The grid point lies outside the identity's domain.
    Rejected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Comparison {
    Relative,
    Absolute,
}

/// One verified grid point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub identity_id: String,
    pub paper_equation: String,
    pub variant: Option<String>,
    pub point: BTreeMap<String, f64>,
    pub closed_form_value: Option<ComplexValue>,
    pub oracle_value: Option<ComplexValue>,
    /// Relative error, or the absolute error when `comparison` is absolute.
    pub relative_error: Option<f64>,
    pub comparison: Comparison,
    pub tolerance: f64,
    pub pass: bool,
    pub status: Status,
    pub oracle_cost: usize,
    pub oracle_error_estimate: Option<f64>,
    pub timing_ms: f64,
    pub reason: Option<String>,
}

/// Cost and value of an oracle evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleValue {
    pub value: Complex<f64>,
    pub cost: usize,
    pub error_estimate: f64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct VerifyOptions {
    /// Overrides the catalog tolerance.
    pub tol: Option<f64>,
    pub variant: Option<String>,
}

/// `(relative or absolute error, comparison, pass)`.
pub fn compare(closed: Complex<f64>, oracle: Complex<f64>, tol: f64) -> (f64, Comparison, bool) {
    let diff = (closed - oracle).norm();
    if closed.norm() < ABSOLUTE_FLOOR {
        (diff, Comparison::Absolute, diff <= tol)
    } else {
        let rel = diff / closed.norm();
        (rel, Comparison::Relative, rel <= tol)
    }
}

fn param(point: &BTreeMap<String, f64>, name: &str) -> Result<f64> {
    point
        .get(name)
        .copied()
        .ok_or_else(|| Error::parameter(format!("missing parameter {name}")))
}

fn uparam(point: &BTreeMap<String, f64>, name: &str) -> Result<usize> {
    let v = param(point, name)?;
    if v < 0.0 || v.fract() != 0.0 {
        return Err(Error::parameter(format!("{name} must be a non-negative integer, got {v}")));
    }
    Ok(v as usize)
}

fn real(x: f64) -> Complex<f64> {
    Complex::new(x, 0.0)
}

fn check_variant(desc: &IdentityDescriptor, variant: Option<&str>) -> Result<()> {
    match variant {
        None | Some("default") => Ok(()),
        Some(v) if desc.variants.contains(&v) => Ok(()),
        Some(v) => Err(Error::parameter(format!(
            "{} has no variant {v:?}; available: {}",
            desc.id,
            if desc.variants.is_empty() { "none".to_string() } else { desc.variants.join(", ") }
        ))),
    }
}

/// The evaluated side of an identity.
pub fn closed_value(id: &str, point: &BTreeMap<String, f64>, variant: Option<&str>) -> Result<Complex<f64>> {
    let desc = find_identity(id).ok_or_else(|| Error::parameter(format!("unknown identity {id:?}")))?;
    check_variant(&desc, variant)?;
    let p = |n: &str| param(point, n);
    match id {
        "eq02_master_exp" => mellin_master(&UmbralSeries::exponential(), real(p("nu")?)),
        "eq02_master_rational" => mellin_master(&UmbralSeries::geometric(), real(p("nu")?)),
        "eq07_fresnel_bessel" => closedforms::fresnel_bessel(p("nu")?, p("alpha")?, p("beta")?),
        "eq08_fresnel_bessel" => closedforms::fresnel_bessel_order_zero(p("alpha")?, p("beta")?),
        "eq07_b_nu" => b_nu(p("nu")?, real(p("x")?), BnuMethod::BesselClosedForm),
        "eq12_struve_halfline" => closedforms::struve_halfline_integral(p("nu")?, p("b")?).map(real),
        "eq13_struve_moment" => closedforms::struve_moment_integral(p("nu")?).map(real),
        "eq19_generating_function" => {
            closedforms::bessel_generating_function(p("x")?, p("t")?, uparam(point, "m")?, GeneratingMethod::Tricomi)
                .map(real)
        }
        "eq28_bessel_gauss_dilation" => {
            closedforms::bessel_gauss_dilation(uparam(point, "n")?, p("x")?, f64::EPSILON).map(real)
        }
        "eq30_lorentz_gauss" => {
            let method = match variant {
                Some("series") => LorentzGaussMethod::Series,
                Some("paper-literal") => LorentzGaussMethod::PaperLiteral,
                _ => LorentzGaussMethod::Hypergeometric,
            };
            closedforms::lorentz_gauss_integral(p("x")?, method).map(real)
        }
        "eq33_borel_bessel_family" => {
            let g = CoefficientSeries::borel_family(&GammaRatioSequence::bessel())?;
            borel_transform(&g)?.eval(real(p("x")?), f64::EPSILON)
        }
        "eq34_borel_hybrid" => {
            let variable = match uparam(point, "variable")? {
                1 => BorelVariable::First,
                _ => BorelVariable::Second,
            };
            borel_hybrid_hermite(uparam(point, "n")?, uparam(point, "m")?, real(p("x")?), real(p("y")?), variable)
        }
        "eq35_borel_pseudo_trig" => {
            let g = CoefficientSeries::pseudo_trig(0, uparam(point, "m")?)?;
            borel_transform(&g)?.eval(real(p("x")?), f64::EPSILON)
        }
        "eq38_beta_transform" => {
            let f = beta_kernel_function(uparam(point, "f")?);
            beta_transform(&f, p("alpha")?, p("beta")?)?.eval(real(p("x")?), f64::EPSILON)
        }
        _ => Err(Error::parameter(format!("no evaluator for {id:?}"))),
    }
}

fn beta_kernel_function(which: usize) -> UmbralSeries<f64> {
    match which {
        0 => UmbralSeries::exponential(),
        _ => UmbralSeries::basic(GammaRatioSequence::bessel()),
    }
}

fn quad(q: crate::oracle::QuadratureResult<f64>) -> OracleValue {
    OracleValue {
        value: q.value,
        cost: q.evaluations,
        error_estimate: q.abs_error_estimate,
    }
}

fn quad_opts() -> QuadOptions<f64> {
    QuadOptions::abs(QUAD_TOL).rel(QUAD_TOL)
}

/// Ladder for `int_0^inf H_nu(b x) dx`: the non-oscillating Struve tail
/// `(x/2)^(nu-1-2k) / Gamma(nu + 1/2 - k)` contributes `eps^(2k - nu)`.
fn struve_halfline_ladder(nu: f64, b: f64) -> Extrapolation<f64> {
    let tails = (0..3)
        .filter(|&k| {
            let a = nu + 0.5 - k as f64;
            !(a <= 0.0 && a.fract() == 0.0)
        })
        .map(|k| 2.0 * k as f64 - nu)
        .collect();
    Extrapolation::geometric(0.2, 0.5, 7)
        .with_tail_powers(tails)
        .with_panel_width(PI / b)
}

fn ladder_table(cfg: &Extrapolation<f64>, scale: f64, nu: f64) -> Result<CylinderTable<f64>> {
    let eps_min = cfg.epsilons.iter().copied().fold(f64::INFINITY, f64::min);
    CylinderTable::struve_h(nu, scale * cfg.cutoff / eps_min + 10.0)
}

/// The defining side of an identity, computed independently.
pub fn oracle_value(id: &str, point: &BTreeMap<String, f64>) -> Result<OracleValue> {
    find_identity(id).ok_or_else(|| Error::parameter(format!("unknown identity {id:?}")))?;
    let p = |n: &str| param(point, n);
    match id {
        "eq02_master_exp" => {
            let nu = p("nu")?;
            integrate_half_line_with(|x: f64| real(x.powf(nu - 1.0) * (-x).exp()), &quad_opts()).map(quad)
        }
        "eq02_master_rational" => {
            let nu = p("nu")?;
            integrate_half_line_with(|x: f64| real(x.powf(nu - 1.0) / (1.0 + x)), &quad_opts()).map(quad)
        }
        "eq07_fresnel_bessel" | "eq08_fresnel_bessel" => {
            let nu = if id == "eq08_fresnel_bessel" { 0.0 } else { p("nu")? };
            let (alpha, beta) = (p("alpha")?, p("beta")?);
            // Two rungs beyond the default ladder: the damped integral is
            // analytic in eps, and the extra rungs take the Bessel orders
            // above zero from 1e-6 to 1e-10.
            let cfg = Extrapolation::<f64>::geometric(0.2, 0.5, 7);
            let eps_min = cfg.epsilons.iter().copied().fold(f64::INFINITY, f64::min);
            let table = CylinderTable::bessel_j(2.0 * nu, alpha * ((cfg.cutoff / eps_min).sqrt() + 1.0))?;
            let h = |x: f64| real(x * table.eval(alpha * x));
            integrate_oscillatory_gaussian_with(h, beta, LADDER_GUARD, &cfg).map(quad)
        }
        "eq07_b_nu" => {
            let s = crate::specfun::b_nu_series(p("nu")?, real(p("x")?), SeriesControl::default())?;
            Ok(OracleValue {
                value: s.value,
                cost: s.tail.terms_used,
                error_estimate: s.tail.last_term_magnitude,
            })
        }
        "eq12_struve_halfline" => {
            let (nu, b) = (p("nu")?, p("b")?);
            let cfg = struve_halfline_ladder(nu, b);
            let table = ladder_table(&cfg, b, nu)?;
            integrate_half_line(|x: f64| real(table.eval(b * x)), LADDER_GUARD, Damping::ExpExtrapolated(cfg))
                .map(quad)
        }
        "eq13_struve_moment" => {
            let nu = p("nu")?;
            // Tail x^-2 and x^-4 of the non-oscillating part.
            let cfg = Extrapolation::geometric(0.2, 0.5, 7)
                .with_tail_powers(vec![1.0, 3.0])
                .with_panel_width(PI);
            let table = ladder_table(&cfg, 1.0, nu)?;
            let f = |x: f64| real(x.powf(-nu - 1.0) * table.eval(x));
            integrate_half_line(f, LADDER_GUARD, Damping::ExpExtrapolated(cfg)).map(|q| {
                let mut v = quad(q);
                v.value *= 2.0;
                v.error_estimate *= 2.0;
                v
            })
        }
        "eq19_generating_function" => {
            let (x, t, m) = (p("x")?, p("t")?, uparam(point, "m")?);
            let mut cost = 0usize;
            let mut weight = 1.0f64;
            let mut failure = None;
            let s = series_sum(
                |n| {
                    if n > 0 {
                        weight *= t / n as f64;
                    }
                    if weight == 0.0 {
                        return 0.0;
                    }
                    cost += 1;
                    match CylinderTable::bessel_j((m * n) as f64, 2.0 * x + 1.0) {
                        Ok(tab) => weight * tab.eval(2.0 * x),
                        Err(e) => {
                            failure.get_or_insert(e);
                            f64::NAN
                        }
                    }
                },
                SeriesControl::default().ratio_gate(0.9),
            );
            if let Some(e) = failure {
                return Err(e);
            }
            let s = s?;
            Ok(OracleValue {
                value: real(s.value),
                cost,
                error_estimate: s.tail.last_term_magnitude,
            })
        }
        "eq28_bessel_gauss_dilation" => {
            let (n, x) = (uparam(point, "n")?, p("x")?);
            let table = CylinderTable::bessel_j(n as f64, x.abs() + 1.0)?;
            let f = |t: f64| real(table.eval(x * (-t * t).exp()));
            integrate_real_line_with(f, &quad_opts()).map(quad)
        }
        "eq30_lorentz_gauss" => {
            let x = p("x")?;
            let f = |t: f64| {
                let w = 1.0 / (1.0 + t * t);
                real((-x * x * w * w).exp() * w * w)
            };
            integrate_real_line_with(f, &quad_opts()).map(quad)
        }
        "eq33_borel_bessel_family" => {
            let x = p("x")?;
            // g(y) = sum (-y)^k / (k!)^3, summed directly.
            let g = |y: f64| {
                let mut term = 1.0f64;
                let mut sum = 0.0f64;
                let mut k = 0usize;
                loop {
                    sum += term;
                    k += 1;
                    let kf = k as f64;
                    term *= -y / (kf * kf * kf);
                    if term.abs() <= f64::EPSILON * sum.abs().max(1e-300) && kf * kf * kf > y {
                        break;
                    }
                }
                sum
            };
            let end = 80.0;
            integrate_finite_with(|t: f64| real((-t).exp() * g(x * t)), 0.0, end, &quad_opts()).map(quad)
        }
        "eq34_borel_hybrid" => {
            let (n, m, x, y) = (uparam(point, "n")?, uparam(point, "m")?, p("x")?, p("y")?);
            let first = uparam(point, "variable")? == 1;
            // Hybrid polynomial summed term by term.
            let hybrid = |u: f64, v: f64| {
                (0..=n / m).fold(0.0, |acc, k| {
                    let j = n - m * k;
                    let fj = (1..=j).fold(1.0, |a, i| a * i as f64);
                    let fk = (1..=k).fold(1.0, |a, i| a * i as f64);
                    acc + u.powi(j as i32) * v.powi(k as i32) / (fk * fj * fj)
                })
            };
            let f = |t: f64| {
                let v = if first { hybrid(x * t, y) } else { hybrid(x, y * t) };
                real(v * (-t).exp())
            };
            integrate_half_line_with(f, &quad_opts()).map(quad)
        }
        "eq35_borel_pseudo_trig" => {
            let (m, x) = (uparam(point, "m")?, p("x")?);
            // exp(-t) c_0^(m)(x t) decays at least like exp(-(1 - x cos(pi/m)) t).
            let rate = 1.0 - x * (PI / m as f64).cos();
            let end = 50.0 / rate;
            let f = |t: f64| real((-t).exp() * crate::oracle::pseudo_trig_roots(0, m, x * t));
            integrate_finite_with(f, 0.0, end, &quad_opts()).map(quad)
        }
        "eq38_beta_transform" => {
            let (alpha, beta, x) = (p("alpha")?, p("beta")?, p("x")?);
            let which = uparam(point, "f")?;
            let table = CylinderTable::bessel_j(0.0, 2.0 * x.sqrt() + 1.0)?;
            let f = |u: f64| match which {
                0 => (-u * x).exp(),
                _ => table.eval(2.0 * (u * x).sqrt()),
            };
            integrate_algebraic_weight(|u, _, _| real(f(u)), 0.0, 1.0, alpha - 1.0, beta - 1.0, &quad_opts())
                .map(quad)
        }
        _ => Err(Error::parameter(format!("no oracle for {id:?}"))),
    }
}

/// Verifies one point; domain violations and evaluation failures are
/// reported, not raised.
pub fn verify_point(desc: &IdentityDescriptor, point: &BTreeMap<String, f64>, opts: &VerifyOptions) -> VerificationReport {
    let start = Instant::now();
    let tolerance = opts.tol.unwrap_or(desc.default_tolerance);
    let mut report = VerificationReport {
        identity_id: desc.id.to_string(),
        paper_equation: desc.paper_equation.to_string(),
        variant: opts.variant.clone(),
        point: point.clone(),
        closed_form_value: None,
        oracle_value: None,
        relative_error: None,
        comparison: Comparison::Relative,
        tolerance,
        pass: false,
        status: Status::Error,
        oracle_cost: 0,
        oracle_error_estimate: None,
        timing_ms: 0.0,
        reason: None,
    };
    if let Err(reason) = desc.check_point(point) {
        report.status = Status::Rejected;
        report.reason = Some(format!("outside the parameter domain: {reason}"));
        return report;
    }
    let closed = closed_value(desc.id, point, opts.variant.as_deref());
    let oracle = oracle_value(desc.id, point);
    let mut reasons = Vec::new();
    match &closed {
        Ok(v) => report.closed_form_value = Some((*v).into()),
        Err(e) => reasons.push(format!("closed form: {e}")),
    }
    match &oracle {
        Ok(o) => {
            report.oracle_value = Some(o.value.into());
            report.oracle_cost = o.cost;
            report.oracle_error_estimate = Some(o.error_estimate);
        }
        Err(e) => reasons.push(format!("oracle: {e}")),
    }
    if let (Ok(c), Ok(o)) = (closed, oracle) {
        let (err, comparison, pass) = compare(c, o.value, tolerance);
        report.relative_error = Some(err);
        report.comparison = comparison;
        report.pass = pass;
        report.status = if pass { Status::Pass } else { Status::Fail };
        if !pass {
            let kind = if comparison == Comparison::Absolute { "absolute" } else { "relative" };
            reasons.push(format!("{kind} error {err:e} exceeds tolerance {tolerance:e}"));
        }
    }
    if !reasons.is_empty() {
        report.reason = Some(reasons.join("; "));
    }
    report.timing_ms = start.elapsed().as_secs_f64() * 1e3;
    report
}

/// Verifies every point of a grid in parallel; records keep grid order.
pub fn verify_identity(id: &str, grid: &GridSpec, opts: &VerifyOptions) -> Result<Vec<VerificationReport>> {
    let desc = find_identity(id).ok_or_else(|| Error::parameter(format!("unknown identity {id:?}")))?;
    check_variant(&desc, opts.variant.as_deref())?;
    let grid = grid.resolve(&desc).map_err(Error::parameter)?;
    let points = grid.points();
    Ok(points.par_iter().map(|p| verify_point(&desc, p, opts)).collect())
}
