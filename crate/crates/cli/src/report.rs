//! JSON-lines and CSV writers for verification reports.

use std::io::Write;

use anyhow::Result;
use opint::verify::VerificationReport;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Jsonl,
    Csv,
}

/// Flat CSV row; the grid point is `name=value` pairs joined by `;`.
#[derive(Serialize)]
struct CsvRow<'a> {
    identity_id: &'a str,
    paper_equation: &'a str,
    variant: &'a str,
    point: String,
    closed_re: Option<f64>,
    closed_im: Option<f64>,
    oracle_re: Option<f64>,
    oracle_im: Option<f64>,
    relative_error: Option<f64>,
    comparison: &'static str,
    tolerance: f64,
    pass: bool,
    status: &'static str,
    oracle_cost: usize,
    oracle_error_estimate: Option<f64>,
    timing_ms: f64,
    reason: &'a str,
}

fn status_name(r: &VerificationReport) -> &'static str {
    use opint::verify::Status::*;
    match r.status {
        Pass => "pass",
        Fail => "fail",
        Error => "error",
        Rejected => "rejected",
    }
}

pub fn write_reports<W: Write>(out: W, reports: &[VerificationReport], format: Format) -> Result<()> {
    match format {
        Format::Jsonl => {
            let mut out = out;
            for r in reports {
                serde_json::to_writer(&mut out, r)?;
                writeln!(out)?;
            }
            out.flush()?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in reports {
                let point = r
                    .point
                    .iter()
                    .map(|(k, v)| format!("{k}={v}"))
                    .collect::<Vec<_>>()
                    .join(";");
                w.serialize(CsvRow {
                    identity_id: &r.identity_id,
                    paper_equation: &r.paper_equation,
                    variant: r.variant.as_deref().unwrap_or(""),
                    point,
                    closed_re: r.closed_form_value.map(|z| z.re),
                    closed_im: r.closed_form_value.map(|z| z.im),
                    oracle_re: r.oracle_value.map(|z| z.re),
                    oracle_im: r.oracle_value.map(|z| z.im),
                    relative_error: r.relative_error,
                    comparison: match r.comparison {
                        opint::verify::Comparison::Relative => "relative",
                        opint::verify::Comparison::Absolute => "absolute",
                    },
                    tolerance: r.tolerance,
                    pass: r.pass,
                    status: status_name(r),
                    oracle_cost: r.oracle_cost,
                    oracle_error_estimate: r.oracle_error_estimate,
                    timing_ms: r.timing_ms,
                    reason: r.reason.as_deref().unwrap_or(""),
                })?;
            }
            w.flush()?;
        }
    }
    Ok(())
}
