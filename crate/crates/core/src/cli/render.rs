//! JSON and CSV report formats.
//!
//! Floating-point numbers are written with 17 significant digits
//! (`{:.16e}`), which round-trips every binary64 value, so parsing a
//! report and rendering it again reproduces it byte for byte.

use num_complex::Complex64;
use serde::Deserialize;

use crate::field::Place;
use crate::field::PlaceKind;
use crate::verify::{EulerCheck, FunctionalEquationReport, Status, SweepSummary};
use crate::zeta::EvaluationRecord;
use crate::Covolume;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

pub const REPORT_CSV_HEADER: &str =
    "s_re,s_im,lhs_re,lhs_im,rhs_re,rhs_im,residual,pole_distance,status";

/// 17 significant digits.
pub fn num(x: f64) -> String {
    format!("{x:.16e}")
}

fn json_str(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn csv_str(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn report_json(r: &FunctionalEquationReport) -> String {
    format!(
        "{{\"s_re\":{},\"s_im\":{},\"lhs_re\":{},\"lhs_im\":{},\"rhs_re\":{},\"rhs_im\":{},\"residual\":{},\"pole_distance\":{},\"status\":\"{}\"}}",
        num(r.s.re),
        num(r.s.im),
        num(r.lhs.re),
        num(r.lhs.im),
        num(r.rhs.re),
        num(r.rhs.im),
        num(r.relative_residual),
        num(r.pole_distance_min),
        r.status
    )
}

fn summary_json(s: &SweepSummary) -> String {
    let grid = s
        .grid
        .as_deref()
        .map_or_else(|| "null".to_string(), json_str);
    format!(
        "{{\"field\":{},\"grid\":{},\"tolerance\":{},\"count_ok\":{},\"count_skipped\":{},\"count_failed\":{},\"max_residual\":{}}}",
        json_str(&s.field),
        grid,
        num(s.tolerance),
        s.count_ok,
        s.count_skipped,
        s.count_failed,
        num(s.max_residual)
    )
}

/// Functional-equation reports followed by their summary.
pub fn render_report(
    reports: &[FunctionalEquationReport],
    summary: &SweepSummary,
    format: Format,
) -> String {
    match format {
        Format::Json => {
            let body: Vec<String> = reports.iter().map(report_json).collect();
            format!(
                "{{\"reports\":[{}],\"summary\":{}}}\n",
                body.join(","),
                summary_json(summary)
            )
        }
        Format::Csv => {
            let mut out = String::from(REPORT_CSV_HEADER);
            out.push('\n');
            for r in reports {
                out.push_str(
                    &[
                        num(r.s.re),
                        num(r.s.im),
                        num(r.lhs.re),
                        num(r.lhs.im),
                        num(r.rhs.re),
                        num(r.rhs.im),
                        num(r.relative_residual),
                        num(r.pole_distance_min),
                        r.status.to_string(),
                    ]
                    .join(","),
                );
                out.push('\n');
            }
            out.push_str(&format!(
                "# ok={},skipped={},failed={},max_residual={}\n",
                summary.count_ok,
                summary.count_skipped,
                summary.count_failed,
                num(summary.max_residual)
            ));
            out
        }
    }
}

#[derive(Deserialize)]
struct WireReport {
    s_re: f64,
    s_im: f64,
    lhs_re: f64,
    lhs_im: f64,
    rhs_re: f64,
    rhs_im: f64,
    residual: f64,
    pole_distance: f64,
    status: Status,
}

#[derive(Deserialize)]
struct WireSummary {
    field: String,
    grid: Option<String>,
    tolerance: f64,
    count_ok: usize,
    count_skipped: usize,
    count_failed: usize,
    max_residual: f64,
}

#[derive(Deserialize)]
struct WireDocument {
    reports: Vec<WireReport>,
    summary: WireSummary,
}

/// Reads back the JSON written by [`render_report`].
pub fn parse_report_json(
    text: &str,
) -> serde_json::Result<(Vec<FunctionalEquationReport>, SweepSummary)> {
    let doc: WireDocument = serde_json::from_str(text)?;
    let reports = doc
        .reports
        .into_iter()
        .map(|w| FunctionalEquationReport {
            s: Complex64::new(w.s_re, w.s_im),
            lhs: Complex64::new(w.lhs_re, w.lhs_im),
            rhs: Complex64::new(w.rhs_re, w.rhs_im),
            relative_residual: w.residual,
            pole_distance_min: w.pole_distance,
            status: w.status,
        })
        .collect();
    let w = doc.summary;
    let summary = SweepSummary {
        field: w.field,
        grid: w.grid,
        tolerance: w.tolerance,
        count_ok: w.count_ok,
        count_skipped: w.count_skipped,
        count_failed: w.count_failed,
        max_residual: w.max_residual,
    };
    Ok((reports, summary))
}

pub fn render_evaluation(field: &str, r: &EvaluationRecord, format: Format) -> String {
    let values = [
        num(r.s.re),
        num(r.s.im),
        num(r.zeta_value.re),
        num(r.zeta_value.im),
        num(r.gamma_factor_value.re),
        num(r.gamma_factor_value.im),
        num(r.completed_value.re),
        num(r.completed_value.im),
        num(r.pole_distance),
    ];
    let pole = r.regularization.map(|reg| num(reg.pole));
    match format {
        Format::Json => format!(
            "{{\"field\":{},\"s_re\":{},\"s_im\":{},\"zeta_re\":{},\"zeta_im\":{},\"gamma_factor_re\":{},\"gamma_factor_im\":{},\"completed_re\":{},\"completed_im\":{},\"pole_distance\":{},\"precision_cliff\":{},\"regularized_pole\":{}}}\n",
            json_str(field),
            values[0], values[1], values[2], values[3], values[4], values[5], values[6], values[7], values[8],
            r.precision_cliff,
            pole.as_deref().unwrap_or("null")
        ),
        Format::Csv => format!(
            "field,s_re,s_im,zeta_re,zeta_im,gamma_factor_re,gamma_factor_im,completed_re,completed_im,pole_distance,precision_cliff,regularized_pole\n{},{},{},{}\n",
            csv_str(field),
            values.join(","),
            r.precision_cliff,
            pole.unwrap_or_default()
        ),
    }
}

fn place_kind(place: &Place) -> &'static str {
    match place.kind {
        PlaceKind::RationalPrime { .. } => "rational_prime",
        PlaceKind::MonicIrreducible { .. } => "monic_irreducible",
        PlaceKind::Infinite => "infinite",
    }
}

pub fn render_places(field: &str, norm_bound: u64, places: &[Place], format: Format) -> String {
    match format {
        Format::Json => {
            let items: Vec<String> = places
                .iter()
                .map(|v| {
                    format!(
                        "{{\"place\":{},\"kind\":\"{}\",\"q_v\":{}}}",
                        json_str(&v.to_string()),
                        place_kind(v),
                        v.residual_cardinality
                    )
                })
                .collect();
            format!(
                "{{\"field\":{},\"norm_bound\":{},\"places\":[{}]}}\n",
                json_str(field),
                norm_bound,
                items.join(",")
            )
        }
        Format::Csv => {
            let mut out = String::from("place,kind,q_v\n");
            for v in places {
                out.push_str(&format!(
                    "{},{},{}\n",
                    csv_str(&v.to_string()),
                    place_kind(v),
                    v.residual_cardinality
                ));
            }
            out
        }
    }
}

pub fn render_euler_check(field: &str, r: &EulerCheck, format: Format) -> String {
    let values = [
        num(r.s.re),
        num(r.s.im),
        r.norm_bound.to_string(),
        num(r.closed_form.re),
        num(r.closed_form.im),
        num(r.truncated.re),
        num(r.truncated.im),
        num(r.gap),
        num(r.tail_bound),
        r.pass.to_string(),
    ];
    let names = [
        "s_re",
        "s_im",
        "norm_bound",
        "closed_form_re",
        "closed_form_im",
        "truncated_re",
        "truncated_im",
        "gap",
        "tail_bound",
        "pass",
    ];
    match format {
        Format::Json => {
            let body: Vec<String> = names
                .iter()
                .zip(&values)
                .map(|(k, v)| format!("\"{k}\":{v}"))
                .collect();
            format!("{{\"field\":{},{}}}\n", json_str(field), body.join(","))
        }
        Format::Csv => format!(
            "field,{}\n{},{}\n",
            names.join(","),
            csv_str(field),
            values.join(",")
        ),
    }
}

/// `None` prints the bare exact value.
pub fn render_covolume(field: &str, beta: &Covolume, format: Option<Format>) -> String {
    match format {
        None => format!("{beta}\n"),
        Some(Format::Json) => format!(
            "{{\"field\":{},\"covolume\":{},\"value\":{}}}\n",
            json_str(field),
            json_str(&beta.to_string()),
            num(beta.value())
        ),
        Some(Format::Csv) => format!(
            "field,covolume,value\n{},{},{}\n",
            csv_str(field),
            csv_str(&beta.to_string()),
            num(beta.value())
        ),
    }
}
