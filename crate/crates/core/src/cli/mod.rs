//! Command-line front end.
//!
//! ```text
//! global-zeta eval        --field F --s S
//! global-zeta check       --field F --s S [--tol T]
//! global-zeta sweep       --field F [--grid re0:re1:n,im0:im1:m] [--tol T]
//! global-zeta covolume    --field F
//! global-zeta places      --field F --norm-bound N
//! global-zeta euler-check --field F --s S --norm-bound N
//! ```
//!
//! Every command accepts `--format json|csv` (default from
//! `GLOBAL_ZETA_FORMAT`, else `json`) and `--output PATH`. Exit status is 0
//! on success, 1 when a check fails, 2 on usage or input errors.

pub mod render;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use crate::field::{covolume, enumerate_places, parse_field_spec, ParsedField};
use crate::verify::{
    check_point, euler_consistency_check, sweep, Grid, Status, SweepSummary, DEFAULT_TOLERANCE,
};
use crate::zeta::completed_zeta;
use render::{
    render_covolume, render_euler_check, render_evaluation, render_places, render_report, Format,
};

pub const FORMAT_ENV: &str = "GLOBAL_ZETA_FORMAT";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "global-zeta",
    version,
    about = "Completed zeta functions of global fields and their functional equation"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Output {
    /// Output format
    #[arg(long, value_enum, env = FORMAT_ENV, default_value = "json")]
    format: Format,
    /// Write to this file instead of stdout
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate zeta_k, the Gamma factor and Z_k at one point
    Eval {
        #[arg(long)]
        field: String,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[command(flatten)]
        out: Output,
    },
    /// Check Z(1-s) = beta^(2s-1) Z(s) at one point
    Check {
        #[arg(long)]
        field: String,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long, allow_hyphen_values = true, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        #[command(flatten)]
        out: Output,
    },
    /// Check the functional equation on a grid
    Sweep {
        #[arg(long)]
        field: String,
        /// re_min:re_max:steps,im_min:im_max:steps
        #[arg(long, allow_hyphen_values = true, default_value = "0.1:0.9:5,0:10:5")]
        grid: String,
        #[arg(long, allow_hyphen_values = true, default_value_t = DEFAULT_TOLERANCE)]
        tol: f64,
        #[command(flatten)]
        out: Output,
    },
    /// Print the covolume beta(A/k)
    Covolume {
        #[arg(long)]
        field: String,
        /// Structured output; the bare exact value when omitted
        #[arg(long, value_enum)]
        format: Option<Format>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List the places of norm at most N
    Places {
        #[arg(long)]
        field: String,
        #[arg(long)]
        norm_bound: u64,
        #[command(flatten)]
        out: Output,
    },
    /// Compare zeta_k with its truncated Euler product
    EulerCheck {
        #[arg(long)]
        field: String,
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        #[arg(long)]
        norm_bound: u64,
        #[command(flatten)]
        out: Output,
    },
}

/// What an invocation produced. The binary prints `stdout` and `stderr`
/// and exits with `exit_code`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct UsageError(String);

impl From<crate::Error> for UsageError {
    fn from(e: crate::Error) -> Self {
        UsageError(e.to_string())
    }
}

/// Parses `re`, `re+imi`, `re-imi` or `imi`.
pub fn parse_complex(text: &str) -> Option<Complex64> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let finite = |z: Complex64| (z.re.is_finite() && z.im.is_finite()).then_some(z);
    let Some(body) = t.strip_suffix('i') else {
        return finite(Complex64::new(t.parse().ok()?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (body[..k].parse().ok()?, &body[k..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other.parse().ok()?,
    };
    finite(Complex64::new(re, im))
}

fn point(flag: &str, text: &str) -> Result<Complex64, UsageError> {
    parse_complex(text).ok_or_else(|| UsageError(format!("invalid value `{text}` for {flag}: expected a finite complex number such as 2, -1.5 or 0.5+14.1i")))
}

fn tolerance(tol: f64) -> Result<f64, UsageError> {
    if tol > 0.0 && tol.is_finite() {
        Ok(tol)
    } else {
        Err(UsageError(format!(
            "invalid value `{tol}` for --tol: must be positive and finite"
        )))
    }
}

fn field(spec: &str, stderr: &mut String) -> Result<ParsedField, UsageError> {
    let parsed = parse_field_spec(spec).map_err(|e| UsageError(format!("--field {spec}: {e}")))?;
    for w in &parsed.warnings {
        stderr.push_str(&format!("warning: {w}\n"));
    }
    Ok(parsed)
}

fn report_exit(summary: &SweepSummary) -> i32 {
    if summary.count_failed > 0 {
        EXIT_FAILED
    } else {
        EXIT_OK
    }
}

fn run(cli: Cli, stderr: &mut String) -> Result<(i32, String, Option<PathBuf>), UsageError> {
    match cli.command {
        Command::Eval {
            field: spec,
            s,
            out,
        } => {
            let parsed = field(&spec, stderr)?;
            let s = point("--s", &s)?;
            let record = completed_zeta(&parsed.field, s)?;
            let text = render_evaluation(&parsed.field.to_string(), &record, out.format);
            Ok((EXIT_OK, text, out.output))
        }
        Command::Check {
            field: spec,
            s,
            tol,
            out,
        } => {
            let parsed = field(&spec, stderr)?;
            let s = point("--s", &s)?;
            let report = check_point(&parsed.field, s, tolerance(tol)?)?;
            let reports = [report];
            let summary = SweepSummary::from_reports(parsed.field.to_string(), None, tol, &reports);
            let code = report_exit(&summary);
            if report.status == Status::Failed {
                stderr.push_str(&format!(
                    "functional equation failed at s = {s}: residual {:.3e} > {tol:e}\n",
                    report.relative_residual
                ));
            }
            Ok((
                code,
                render_report(&reports, &summary, out.format),
                out.output,
            ))
        }
        Command::Sweep {
            field: spec,
            grid,
            tol,
            out,
        } => {
            let parsed = field(&spec, stderr)?;
            let grid: Grid = grid
                .parse()
                .map_err(|e: crate::Error| UsageError(format!("--grid {grid}: {e}")))?;
            let result = sweep(&parsed.field, &grid, tolerance(tol)?)?;
            let code = report_exit(&result.summary);
            if code == EXIT_FAILED {
                stderr.push_str(&format!(
                    "functional equation failed at {} of {} nodes\n",
                    result.summary.count_failed,
                    result.summary.total()
                ));
            }
            Ok((
                code,
                render_report(&result.reports, &result.summary, out.format),
                out.output,
            ))
        }
        Command::Covolume {
            field: spec,
            format,
            output,
        } => {
            let parsed = field(&spec, stderr)?;
            let beta = covolume(&parsed.field);
            Ok((
                EXIT_OK,
                render_covolume(&parsed.field.to_string(), &beta, format),
                output,
            ))
        }
        Command::Places {
            field: spec,
            norm_bound,
            out,
        } => {
            let parsed = field(&spec, stderr)?;
            let places = enumerate_places(&parsed.field, norm_bound)?;
            let text = render_places(&parsed.field.to_string(), norm_bound, &places, out.format);
            Ok((EXIT_OK, text, out.output))
        }
        Command::EulerCheck {
            field: spec,
            s,
            norm_bound,
            out,
        } => {
            let parsed = field(&spec, stderr)?;
            let s = point("--s", &s)?;
            let check = euler_consistency_check(&parsed.field, s, norm_bound)?;
            let code = if check.pass { EXIT_OK } else { EXIT_FAILED };
            if !check.pass {
                stderr.push_str(&format!(
                    "Euler product gap {:.3e} exceeds the tail envelope {:.3e}\n",
                    check.gap, check.tail_bound
                ));
            }
            let text = render_euler_check(&parsed.field.to_string(), &check, out.format);
            Ok((code, text, out.output))
        }
    }
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn parse_and_dispatch<I, T>(argv: I) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            let (exit_code, stdout, stderr) = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    (EXIT_OK, rendered, String::new())
                }
                _ => (EXIT_USAGE, String::new(), rendered),
            };
            return CliOutput {
                exit_code,
                stdout,
                stderr,
            };
        }
    };
    let mut stderr = String::new();
    match run(cli, &mut stderr) {
        Ok((exit_code, text, None)) => CliOutput {
            exit_code,
            stdout: text,
            stderr,
        },
        Ok((exit_code, text, Some(path))) => match std::fs::write(&path, text) {
            Ok(()) => CliOutput {
                exit_code,
                stdout: String::new(),
                stderr,
            },
            Err(e) => {
                stderr.push_str(&format!("error: --output {}: {e}\n", path.display()));
                CliOutput {
                    exit_code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr,
                }
            }
        },
        Err(UsageError(msg)) => {
            stderr.push_str(&format!("error: {msg}\n"));
            CliOutput {
                exit_code: EXIT_USAGE,
                stdout: String::new(),
                stderr,
            }
        }
    }
}
