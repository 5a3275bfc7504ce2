use std::collections::BTreeMap;

use serde::Serialize;

/// How the defining side of an identity is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LhsKind {
    Quadrature,
    DoubleSeries,
    SingleSeries,
}

/// How the evaluated side of an identity is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RhsKind {
    ClosedForm,
    SingleSeries,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Bound {
    pub value: f64,
    pub inclusive: bool,
}

/// One named parameter and the interval it must lie in.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParameterRange {
    pub name: &'static str,
    pub lower: Option<Bound>,
    pub upper: Option<Bound>,
    pub integer: bool,
    /// Isolated values that are excluded from the interval.
    pub excluded: Vec<f64>,
    pub note: Option<&'static str>,
}

impl ParameterRange {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            lower: None,
            upper: None,
            integer: false,
            excluded: Vec::new(),
            note: None,
        }
    }

    fn above(mut self, v: f64) -> Self {
        self.lower = Some(Bound { value: v, inclusive: false });
        self
    }

    fn at_least(mut self, v: f64) -> Self {
        self.lower = Some(Bound { value: v, inclusive: true });
        self
    }

    fn below(mut self, v: f64) -> Self {
        self.upper = Some(Bound { value: v, inclusive: false });
        self
    }

    fn at_most(mut self, v: f64) -> Self {
        self.upper = Some(Bound { value: v, inclusive: true });
        self
    }

    fn integer(mut self) -> Self {
        self.integer = true;
        self
    }

    fn excluding(mut self, v: f64) -> Self {
        self.excluded.push(v);
        self
    }

    fn note(mut self, note: &'static str) -> Self {
        self.note = Some(note);
        self
    }

    /// `Err` carries a human-readable reason.
    pub fn check(&self, v: f64) -> Result<(), String> {
        let name = self.name;
        if !v.is_finite() {
            return Err(format!("{name} = {v} is not finite"));
        }
        if let Some(b) = self.lower {
            if v < b.value || (!b.inclusive && v == b.value) {
                let op = if b.inclusive { ">=" } else { ">" };
                return Err(format!("{name} = {v} violates {name} {op} {}", b.value));
            }
        }
        if let Some(b) = self.upper {
            if v > b.value || (!b.inclusive && v == b.value) {
                let op = if b.inclusive { "<=" } else { "<" };
                return Err(format!("{name} = {v} violates {name} {op} {}", b.value));
            }
        }
        if self.integer && v.fract() != 0.0 {
            return Err(format!("{name} = {v} must be an integer"));
        }
        if self.excluded.contains(&v) {
            return Err(format!("{name} = {v} is excluded"));
        }
        Ok(())
    }
}

/// Constraint linking several parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CrossConstraint {
    /// `alpha^2 < 4 beta`.
    AlphaSquaredBelowFourBeta,
    /// `|x| < 1`, where the geometric closed form converges.
    UnitDisk,
}

impl CrossConstraint {
    pub fn description(&self) -> &'static str {
        match self {
            Self::AlphaSquaredBelowFourBeta => "alpha^2 < 4 beta",
            Self::UnitDisk => "|x| < 1",
        }
    }

    pub fn check(&self, point: &BTreeMap<String, f64>) -> Result<(), String> {
        let get = |k: &str| point.get(k).copied().unwrap_or(f64::NAN);
        match self {
            Self::AlphaSquaredBelowFourBeta => {
                let (a, b) = (get("alpha"), get("beta"));
                if a * a < 4.0 * b {
                    Ok(())
                } else {
                    Err(format!("alpha = {a}, beta = {b} violates alpha^2 < 4 beta"))
                }
            }
            Self::UnitDisk => {
                let x = get("x");
                if x.abs() < 1.0 {
                    Ok(())
                } else {
                    Err(format!("x = {x} violates |x| < 1"))
                }
            }
        }
    }
}

/// A cataloged identity: the defining integral or series, the side it is
/// compared with, and where it may be evaluated.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IdentityDescriptor {
    pub id: &'static str,
    pub paper_equation: &'static str,
    pub title: &'static str,
    pub parameter_domain: Vec<ParameterRange>,
    pub constraints: Vec<CrossConstraint>,
    pub lhs_kind: LhsKind,
    pub rhs_kind: RhsKind,
    pub default_tolerance: f64,
    /// Cartesian grid used when no grid is given.
    pub default_grid: Vec<(&'static str, Vec<f64>)>,
    /// Variants other than the default evaluation.
    pub variants: Vec<&'static str>,
    pub references: Vec<&'static str>,
}

impl IdentityDescriptor {
    pub fn parameter_names(&self) -> Vec<&'static str> {
        self.parameter_domain.iter().map(|p| p.name).collect()
    }

    /// Checks a grid point against every range and cross-constraint.
    pub fn check_point(&self, point: &BTreeMap<String, f64>) -> Result<(), String> {
        for range in &self.parameter_domain {
            match point.get(range.name) {
                Some(&v) => range.check(v)?,
                None => return Err(format!("missing parameter {}", range.name)),
            }
        }
        if let Some(extra) = point.keys().find(|k| !self.parameter_domain.iter().any(|r| r.name == k.as_str())) {
            return Err(format!("unknown parameter {extra} for {}", self.id));
        }
        for c in &self.constraints {
            c.check(point)?;
        }
        Ok(())
    }
}

const OSCILLATORY_TOL: f64 = 1e-6;
const SMOOTH_TOL: f64 = 1e-8;

/// Every cataloged identity, in listing order.
pub fn catalog() -> Vec<IdentityDescriptor> {
    use LhsKind as L;
    use RhsKind as R;
    let p = ParameterRange::new;
    vec![
        IdentityDescriptor {
            id: "eq02_master_exp",
            paper_equation: "Eq. 2",
            title: "Mellin transform of exp(-x): Gamma(nu) phi(-nu) with phi = 1",
            parameter_domain: vec![p("nu").above(0.0)],
            constraints: vec![],
            lhs_kind: L::Quadrature,
            rhs_kind: R::ClosedForm,
            default_tolerance: SMOOTH_TOL,
            default_grid: vec![("nu", vec![0.25, 1.0 / 3.0, 0.5, 0.75])],
            variants: vec![],
            references: vec![],
        },
        IdentityDescriptor {
            id: "eq02_master_rational",
            paper_equation: "Eq. 2",
            title: "Mellin transform of 1/(1+x): Gamma(nu) Gamma(1-nu) = pi / sin(pi nu)",
            parameter_domain: vec![p("nu").above(0.0).below(1.0)],
            constraints: vec![],
            lhs_kind: L::Quadrature,
            rhs_kind: R::ClosedForm,
            default_tolerance: SMOOTH_TOL,
            default_grid: vec![("nu", vec![0.25, 1.0 / 3.0, 0.5, 0.75])],
            variants: vec![],
            references: vec![],
        },
        IdentityDescriptor {
            id: "eq07_fresnel_bessel",
            paper_equation: "Eq. 7",
            title: "int_0^inf x J_2nu(alpha x) exp(i beta x^2) dx via the b_nu series",
            parameter_domain: vec![p("nu").at_least(0.0), p("alpha").above(0.0), p("beta").above(0.0)],
            constraints: vec![CrossConstraint::AlphaSquaredBelowFourBeta],
            lhs_kind: L::Quadrature,
            rhs_kind: R::SingleSeries,
            default_tolerance: OSCILLATORY_TOL,
            default_grid: vec![("nu", vec![0.0, 0.5, 1.0]), ("alpha", vec![0.5, 1.0]), ("beta", vec![1.0, 2.0])],
            variants: vec![],
            references: vec!["Gradshteyn-Ryzhik 6.728.3", "Gradshteyn-Ryzhik 6.728.4"],
        },
        IdentityDescriptor {
            id: "eq08_fresnel_bessel",
            paper_equation: "Eq. 8",
            title: "int_0^inf x J_0(alpha x) exp(i beta x^2) dx = (i / 2 beta) exp(-i alpha^2 / 4 beta)",
            parameter_domain: vec![p("alpha").above(0.0), p("beta").above(0.0)],
            constraints: vec![CrossConstraint::AlphaSquaredBelowFourBeta],
            lhs_kind: L::Quadrature,
            rhs_kind: R::ClosedForm,
            default_tolerance: OSCILLATORY_TOL,
            default_grid: vec![("alpha", vec![0.5, 1.0, 2.0]), ("beta", vec![2.0, 5.0])],
            variants: vec![],
            references: vec!["Gradshteyn-Ryzhik 6.728.3", "Gradshteyn-Ryzhik 6.728.4", "Prudnikov 2.12.18.7"],
        },
        IdentityDescriptor {
            id: "eq07_b_nu",
            paper_equation: "Eq. 7 (b_nu)",
            title: "b_nu series against its modified-Bessel closed form",
            parameter_domain: vec![p("nu").at_least(0.0), p("x").excluding(0.0)],
            constraints: vec![],
            lhs_kind: L::SingleSeries,
            rhs_kind: R::ClosedForm,
            default_tolerance: 1e-10,
            default_grid: vec![("nu", vec![0.0, 0.5, 1.0, 1.5, 2.0]), ("x", vec![-5.0, -2.5, -1.0, -0.25, 0.25, 1.0, 2.5, 5.0])],
            variants: vec![],
            references: vec![],
        },
        IdentityDescriptor {
            id: "eq12_struve_halfline",
            paper_equation: "Eq. 12",
            title: "int_0^inf H_nu(b x) dx = -1 / (b tan(pi nu / 2))",
            parameter_domain: vec![p("nu").above(-2.0).below(0.0), p("b").above(0.0)],
            constraints: vec![],
            lhs_kind: L::Quadrature,
            rhs_kind: R::ClosedForm,
            default_tolerance: OSCILLATORY_TOL,
            default_grid: vec![("nu", vec![-1.5, -1.0, -0.5]), ("b", vec![1.0, 2.0])],
            variants: vec![],
            references: vec!["Gradshteyn-Ryzhik 6.811.1"],
        },
        IdentityDescriptor {
            id: "eq13_struve_moment",
            paper_equation: "Eq. 13",
            title: "int_-inf^inf x^-(nu+1) H_nu(x) dx = pi / (2^nu Gamma(1 + nu))",
            parameter_domain: vec![p("nu").above(-0.5).note("needed for convergence at infinity")],
            constraints: vec![],
            lhs_kind: L::Quadrature,
            rhs_kind: R::ClosedForm,
            default_tolerance: OSCILLATORY_TOL,
            default_grid: vec![("nu", vec![0.0, 0.5, 1.0, 2.0])],
            variants: vec![],
            references: vec!["Gradshteyn-Ryzhik 6.813.2"],
        },
        IdentityDescriptor {
            id: "eq19_generating_function",
            paper_equation: "Eq. 19",
            title: "sum_n t^n / n! J_mn(2x) = Hermite-based Tricomi C_0^(m)(x^2, (-x)^m t)",
            parameter_domain: vec![p("m").at_least(2.0).integer(), p("x"), p("t")],
            constraints: vec![],
            lhs_kind: L::DoubleSeries,
            rhs_kind: R::SingleSeries,
            default_tolerance: SMOOTH_TOL,
            default_grid: vec![
                ("m", vec![2.0, 3.0]),
                ("x", vec![0.25, 0.5, 1.0, 2.0]),
                ("t", vec![-1.0, -0.5, 0.5, 1.0]),
            ],
            variants: vec![],
            references: vec![],
        },
        IdentityDescriptor {
            id: "eq28_bessel_gauss_dilation",
            paper_equation: "Eq. 28",
            title: "int_-inf^inf J_n(x exp(-t^2)) dt as a Gamma-weighted Bessel series",
            parameter_domain: vec![
                p("n").at_least(1.0).integer().note("the series uses (k+n)!"),
                p("x"),
            ],
            constraints: vec![],
            lhs_kind: L::Quadrature,
            rhs_kind: R::SingleSeries,
            default_tolerance: SMOOTH_TOL,
            default_grid: vec![("n", vec![1.0, 2.0, 3.0]), ("x", vec![0.5, 1.0, 2.0, 4.0])],
            variants: vec![],
            references: vec![],
        },
        IdentityDescriptor {
            id: "eq30_lorentz_gauss",
            paper_equation: "Eq. 30",
            title: "int_-inf^inf exp(-x^2/(1+t^2)^2) / (1+t^2)^2 dt = (pi/2) 2F2(3/4, 5/4; 1, 3/2; -x^2)",
            parameter_domain: vec![p("x")],
            constraints: vec![],
            lhs_kind: L::Quadrature,
            rhs_kind: R::ClosedForm,
            default_tolerance: SMOOTH_TOL,
            default_grid: vec![("x", vec![0.0, 0.5, 1.0, 2.0, 3.0])],
            variants: vec!["series", "paper-literal"],
            references: vec![],
        },
        IdentityDescriptor {
            id: "eq33_borel_bessel_family",
            paper_equation: "Eq. 33",
            title: "Borel transform of sum (-x)^k / (k!)^3 is sum (-x)^k / (k!)^2",
            parameter_domain: vec![p("x").at_least(0.0).at_most(4.0).note("the oracle sums the cubic-factorial series directly")],
            constraints: vec![],
            lhs_kind: L::Quadrature,
            rhs_kind: R::SingleSeries,
            default_tolerance: SMOOTH_TOL,
            default_grid: vec![("x", vec![0.25, 0.5, 1.0, 2.0])],
            variants: vec![],
            references: vec![],
        },
        IdentityDescriptor {
            id: "eq34_borel_hybrid",
            paper_equation: "Eq. 34",
            title: "Borel transforms of the hybrid polynomials: H_n^(m)/n! (variable 1) and e_n^(m) (variable 2)",
            parameter_domain: vec![
                p("n").at_least(0.0).at_most(30.0).integer(),
                p("m").at_least(2.0).integer(),
                p("x"),
                p("y"),
                p("variable").at_least(1.0).at_most(2.0).integer().note("1: transform in x, 2: transform in y"),
            ],
            constraints: vec![],
            lhs_kind: L::Quadrature,
            rhs_kind: R::ClosedForm,
            default_tolerance: SMOOTH_TOL,
            default_grid: vec![
                ("n", vec![2.0, 5.0, 8.0]),
                ("m", vec![2.0, 3.0]),
                ("x", vec![0.7]),
                ("y", vec![-1.3]),
                ("variable", vec![1.0, 2.0]),
            ],
            variants: vec![],
            references: vec![],
        },
        IdentityDescriptor {
            id: "eq35_borel_pseudo_trig",
            paper_equation: "Eq. 35",
            title: "Borel transform of the pseudo-cosine c_0^(m) is 1 / (1 + x^m)",
            parameter_domain: vec![p("m").at_least(2.0).integer(), p("x").at_least(0.0)],
            constraints: vec![CrossConstraint::UnitDisk],
            lhs_kind: L::Quadrature,
            rhs_kind: R::SingleSeries,
            default_tolerance: SMOOTH_TOL,
            default_grid: vec![("m", vec![2.0, 3.0]), ("x", vec![0.2, 0.5, 0.8])],
            variants: vec![],
            references: vec![],
        },
        IdentityDescriptor {
            id: "eq38_beta_transform",
            paper_equation: "Eq. 38",
            title: "int_0^1 u^(alpha-1) (1-u)^(beta-1) f(u x) du as the series with B(alpha+n, beta) phi(n)",
            parameter_domain: vec![
                p("alpha").above(0.0),
                p("beta").above(0.0),
                p("x").at_least(0.0),
                p("f").at_least(0.0).at_most(1.0).integer().note("0: exp(-x), 1: J_0(2 sqrt x)"),
            ],
            constraints: vec![],
            lhs_kind: L::Quadrature,
            rhs_kind: R::SingleSeries,
            default_tolerance: SMOOTH_TOL,
            default_grid: vec![
                ("alpha", vec![0.5, 1.0, 2.0]),
                ("beta", vec![0.5, 1.0, 3.0]),
                ("x", vec![0.0, 1.0, 3.0]),
                ("f", vec![0.0, 1.0]),
            ],
            variants: vec![],
            references: vec![],
        },
    ]
}

pub fn find_identity(id: &str) -> Option<IdentityDescriptor> {
    catalog().into_iter().find(|d| d.id == id)
}
