//! `opint`: list the identity catalog, evaluate cataloged functions, and
//! verify closed forms against the quadrature oracle over parameter grids.
//!
//! Exit codes: 0 all pass, 1 numerical failure, 2 usage or domain error.

mod config;
mod eval;
mod report;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use opint::closedforms::{catalog, find_identity, IdentityDescriptor};
use opint::verify::{verify_identity, ComplexValue, GridSpec, Status, VerificationReport, VerifyOptions};

use config::Config;
use report::{write_reports, Format};

#[derive(Parser, Debug)]
#[command(name = "opint", version, about = "Verify operational closed forms for definite integrals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List cataloged identities and evaluable functions.
    List {
        #[arg(long, value_enum, default_value_t = ListFormat::Text)]
        format: ListFormat,
    },
    /// Evaluate a function or closed form.
    Eval {
        function: String,
        #[arg(allow_hyphen_values = true, num_args = 0..)]
        args: Vec<String>,
    },
    /// Compare closed forms with the oracle over a grid.
    Verify {
        /// Identity id, or `all`.
        target: String,
        /// `name=v1,v2` or `name=min:max:count`; repeatable.
        #[arg(long, allow_hyphen_values = true)]
        grid: Vec<String>,
        /// Overrides the catalog tolerance.
        #[arg(long)]
        tol: Option<f64>,
        /// Report path; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
        /// Alternative evaluation of the closed side, e.g. `paper-literal`.
        #[arg(long)]
        variant: Option<String>,
        /// Key-value defaults, one per line.
        #[arg(long)]
        config: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ListFormat {
    Text,
    Json,
}

/// Error that maps to exit code 2.
#[derive(Debug)]
struct Usage(String);

impl std::fmt::Display for Usage {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    Usage(msg.into()).into()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::List { format } => cmd_list(format).map(|_| ExitCode::SUCCESS),
        Command::Eval { function, args } => cmd_eval(&function, &args)
            .map(|_| ExitCode::SUCCESS)
            .map_err(|e| usage(format!("{e:#}"))),
        Command::Verify {
            target,
            grid,
            tol,
            out,
            format,
            variant,
            config,
        } => cmd_verify(&target, grid, tol, out, format, variant, config),
    };
    match result {
        Ok(code) => code,
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<Usage>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain()
        .filter_map(|c| c.downcast_ref::<io::Error>())
        .any(|io| io.kind() == io::ErrorKind::BrokenPipe)
}

fn describe_domain(d: &IdentityDescriptor) -> String {
    let mut parts: Vec<String> = d
        .parameter_domain
        .iter()
        .map(|r| {
            let mut s = String::new();
            if let Some(b) = r.lower {
                s.push_str(&format!("{} {} ", b.value, if b.inclusive { "<=" } else { "<" }));
            }
            s.push_str(r.name);
            if let Some(b) = r.upper {
                s.push_str(&format!(" {} {}", if b.inclusive { "<=" } else { "<" }, b.value));
            }
            if r.integer {
                s.push_str(" integer");
            }
            for x in &r.excluded {
                s.push_str(&format!(" != {x}"));
            }
            s
        })
        .collect();
    parts.extend(d.constraints.iter().map(|c| c.description().to_string()));
    parts.join(", ")
}

fn cmd_list(format: ListFormat) -> Result<()> {
    let cat = catalog();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match format {
        ListFormat::Json => {
            serde_json::to_writer_pretty(&mut out, &cat)?;
            writeln!(out)?;
        }
        ListFormat::Text => {
            writeln!(out, "identities:")?;
            for d in &cat {
                writeln!(out, "  {:28} {:14} tol {:e}  {}", d.id, d.paper_equation, d.default_tolerance, d.title)?;
                writeln!(out, "  {:28} domain: {}", "", describe_domain(d))?;
                if !d.variants.is_empty() {
                    writeln!(out, "  {:28} variants: {}", "", d.variants.join(", "))?;
                }
            }
            writeln!(out, "functions:")?;
            for f in eval::FUNCTIONS {
                writeln!(out, "  {:20} {:40} {}", f.name, f.args, f.summary)?;
            }
        }
    }
    Ok(())
}

fn cmd_eval(function: &str, args: &[String]) -> Result<()> {
    let v = eval::evaluate(function, args)?;
    println!("{} (tol {:.1e})", ComplexValue::from(v.value), v.achieved_tol);
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_verify(
    target: &str,
    grid: Vec<String>,
    tol: Option<f64>,
    out: Option<PathBuf>,
    format: Option<Format>,
    variant: Option<String>,
    config: Option<PathBuf>,
) -> Result<ExitCode> {
    let cfg = match &config {
        Some(p) => Config::load(p).map_err(|e| usage(format!("{e:#}")))?,
        None => Config::default(),
    };
    let tol = tol.or(cfg.tol);
    if let Some(t) = tol {
        if !(t > 0.0 && t.is_finite()) {
            return Err(usage(format!("tolerance must be positive, got {t}")));
        }
    }
    let format = match format {
        Some(f) => f,
        None => match cfg.format.as_deref() {
            None | Some("jsonl") => Format::Jsonl,
            Some("csv") => Format::Csv,
            Some(f) => return Err(usage(format!("unknown format {f:?} in config"))),
        },
    };
    let variant = variant.or(cfg.variant.clone());
    let out = out.or(cfg.out.as_ref().map(PathBuf::from));

    let cli_grid = GridSpec::parse(&grid).map_err(usage)?;
    let targets: Vec<IdentityDescriptor> = if target == "all" {
        catalog()
    } else {
        vec![find_identity(target)
            .ok_or_else(|| usage(format!("unknown identity {target:?}; run `opint list`")))?]
    };

    if target == "all" {
        let known = |name: &str| targets.iter().any(|d| d.parameter_names().contains(&name));
        if let Some(a) = cli_grid.axes.iter().find(|a| !known(&a.name)) {
            return Err(usage(format!("no identity has a parameter {:?}", a.name)));
        }
        if let Some(v) = &variant {
            if !targets.iter().any(|d| d.variants.contains(&v.as_str())) {
                return Err(usage(format!("no identity has a variant {v:?}")));
            }
        }
    }

    let mut reports: Vec<VerificationReport> = Vec::new();
    for d in &targets {
        let mut specs: Vec<String> = cfg.grids.get(d.id).cloned().unwrap_or_default();
        let names = d.parameter_names();
        specs.extend(
            grid.iter()
                .flat_map(|g| g.split([';', ' ']).map(str::to_string).collect::<Vec<_>>())
                .filter(|s| !s.trim().is_empty())
                .filter(|s| target != "all" || s.split('=').next().is_some_and(|n| names.contains(&n.trim()))),
        );
        let grid = GridSpec::parse(&specs).map_err(usage)?;
        let variant = match &variant {
            Some(v) if target == "all" && !d.variants.contains(&v.as_str()) => None,
            v => v.clone(),
        };
        let opts = VerifyOptions { tol, variant };
        let r = verify_identity(d.id, &grid, &opts).map_err(|e| usage(e.to_string()))?;
        reports.extend(r);
    }

    match &out {
        Some(path) => {
            let file = File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
            write_reports(BufWriter::new(file), &reports, format)?;
        }
        None => write_reports(io::stdout().lock(), &reports, format)?,
    }

    let count = |s: Status| reports.iter().filter(|r| r.status == s).count();
    let (pass, fail, error, rejected) = (
        count(Status::Pass),
        count(Status::Fail),
        count(Status::Error),
        count(Status::Rejected),
    );
    eprintln!(
        "{} points: {pass} pass, {fail} fail, {error} error, {rejected} rejected",
        reports.len()
    );
    for r in reports.iter().filter(|r| !r.pass) {
        eprintln!(
            "  {} {:?}: {}",
            r.identity_id,
            r.point,
            r.reason.as_deref().unwrap_or("not passed")
        );
    }
    if reports.is_empty() {
        bail!("the grid is empty");
    }
    Ok(if rejected > 0 {
        ExitCode::from(2)
    } else if fail + error > 0 {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}
