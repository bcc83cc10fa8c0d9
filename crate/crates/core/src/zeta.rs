//! `zeta_k(s)`, the archimedean Gamma factor and the completed zeta function
//!
//! ```text
//! Z_k(s) = (pi^(-s/2) Gamma(s/2))^r1 ((2 pi)^(1-s) Gamma(s))^r2 zeta_k(s)
//! ```
//!
//! For quadratic fields `zeta_k = zeta * L(., chi_D)`; for function fields
//! `zeta_k(s) = P(T) / ((1 - T)(1 - qT))` with `T = q^(-s)`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{pole, Result};
use crate::field::{
    FieldDescriptor, FunctionFieldDescriptor, NumberFieldDescriptor, NumberFieldKind,
};
use crate::kernel::{dirichlet_l, log_gamma, riemann_zeta, POLE_RADIUS};

/// Distance from an apparent Gamma pole (cancelled by a trivial zero of
/// `zeta_k`) below which [`EvaluationRecord::precision_cliff`] is set.
pub const PRECISION_CLIFF_RADIUS: f64 = 1e-2;

/// Poles of `Z_k`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum PoleSet {
    /// Number fields: the simple poles at `0` and `1`.
    Points(Vec<f64>),
    /// Function fields: `base + i k period` for every integer `k`, one
    /// lattice per base.
    Lattices { bases: Vec<f64>, period: f64 },
}

pub fn pole_set(field: &FieldDescriptor) -> PoleSet {
    match field {
        FieldDescriptor::Number(_) => PoleSet::Points(vec![0.0, 1.0]),
        FieldDescriptor::Function(ff) => PoleSet::Lattices {
            bases: vec![0.0, 1.0],
            period: 2.0 * PI / (ff.q() as f64).ln(),
        },
    }
}

impl PoleSet {
    pub fn distance(&self, s: Complex64) -> f64 {
        match self {
            PoleSet::Points(points) => points
                .iter()
                .map(|&p| (s - p).norm())
                .fold(f64::INFINITY, f64::min),
            PoleSet::Lattices { bases, period } => {
                let k = (s.im / period).round();
                let dy = s.im - k * period;
                bases
                    .iter()
                    .map(|&b| (s.re - b).hypot(dy))
                    .fold(f64::INFINITY, f64::min)
            }
        }
    }
}

/// Distance from `s` to the nearest pole of `Z_k`.
pub fn pole_distance(field: &FieldDescriptor, s: Complex64) -> f64 {
    pole_set(field).distance(s)
}

/// One evaluation of `Z_k(s)` and its two factors.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvaluationRecord {
    pub s: Complex64,
    pub zeta_value: Complex64,
    pub gamma_factor_value: Complex64,
    /// Exactly `gamma_factor_value * zeta_value`.
    pub completed_value: Complex64,
    pub pole_distance: f64,
    /// `s` is within [`PRECISION_CLIFF_RADIUS`] of a Gamma pole that `zeta_k`
    /// cancels. See [`Regularization`].
    pub precision_cliff: bool,
    pub regularization: Option<Regularization>,
}

/// Near an apparent pole `p` of order `m` the Gamma factor and `zeta_k` are
/// replaced by the holomorphic pair `(s - p)^m gamma_factor(s)` and
/// `zeta_k(s) / (s - p)^m`, each evaluated as its mean over a circle of
/// radius [`REGULARIZATION_RADIUS`] around `s`. Their product is still `Z_k(s)`,
/// and it is finite at `p` itself.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Regularization {
    pub pole: f64,
    pub order: u32,
}

pub const REGULARIZATION_RADIUS: f64 = 0.25;
const REGULARIZATION_NODES: usize = 32;

/// Dedekind zeta function `zeta_k(s)`.
pub fn zeta(field: &FieldDescriptor, s: Complex64) -> Result<Complex64> {
    match field {
        FieldDescriptor::Number(nf) => number_field_zeta(nf, s),
        FieldDescriptor::Function(ff) => function_field_zeta(ff, s),
    }
}

fn number_field_zeta(nf: &NumberFieldDescriptor, s: Complex64) -> Result<Complex64> {
    let z = riemann_zeta(s)?;
    Ok(match nf.kind {
        NumberFieldKind::Rationals => z,
        NumberFieldKind::Quadratic { .. } => z * dirichlet_l(s, nf.character())?,
    })
}

fn function_field_zeta(ff: &FunctionFieldDescriptor, s: Complex64) -> Result<Complex64> {
    let field = FieldDescriptor::Function(ff.clone());
    let distance = pole_distance(&field, s);
    if distance < POLE_RADIUS {
        return Err(pole(format!(
            "zeta of {field}: s = {s} is {distance:.3e} from a pole"
        )));
    }
    let q = ff.q() as f64;
    let t = (-s * q.ln()).exp();
    let numerator = ff
        .lpoly()
        .coefficients_f64()
        .iter()
        .rev()
        .fold(Complex64::new(0.0, 0.0), |acc, &a| acc * t + a);
    Ok(numerator / ((1.0 - t) * (1.0 - q * t)))
}

/// `(pi^(-s/2) Gamma(s/2))^r1 ((2 pi)^(1-s) Gamma(s))^r2`, accumulated in log
/// space. Identically 1 for function fields.
pub fn gamma_factor(field: &FieldDescriptor, s: Complex64) -> Result<Complex64> {
    let (r1, r2) = field.signature();
    if r1 == 0 && r2 == 0 {
        return Ok(Complex64::new(1.0, 0.0));
    }
    let nearest = s.re.round();
    if nearest <= 0.0 && (s - nearest).norm() < POLE_RADIUS {
        let even = nearest.rem_euclid(2.0) == 0.0;
        if r2 > 0 || even {
            return Err(pole(format!(
                "gamma factor of {field}: s = {s} is within {POLE_RADIUS} of the Gamma pole {nearest}"
            )));
        }
    }
    let mut log = Complex64::new(0.0, 0.0);
    if r1 > 0 {
        log += f64::from(r1) * (-(s / 2.0) * PI.ln() + log_gamma(s / 2.0)?);
    }
    if r2 > 0 {
        log += f64::from(r2) * ((1.0 - s) * (2.0 * PI).ln() + log_gamma(s)?);
    }
    Ok(log.exp())
}

fn cancelled_gamma_pole(field: &FieldDescriptor, s: Complex64) -> Option<Regularization> {
    let (r1, r2) = field.signature();
    let nearest = s.re.round();
    if nearest >= 0.0 || (s - nearest).norm() >= PRECISION_CLIFF_RADIUS {
        return None;
    }
    let even = nearest.rem_euclid(2.0) == 0.0;
    let order = if even { r1 + r2 } else { r2 };
    (order > 0).then_some(Regularization {
        pole: nearest,
        order,
    })
}

// Mean-value property: h(s) is the average of h over any circle around s
// inside its domain of holomorphy. The trapezoid rule on the circle converges
// like (radius / distance to the nearest singularity)^nodes.
fn circle_mean(s: Complex64, h: impl Fn(Complex64) -> Result<Complex64>) -> Result<Complex64> {
    let mut sum = Complex64::new(0.0, 0.0);
    for j in 0..REGULARIZATION_NODES {
        let theta = 2.0 * PI * j as f64 / REGULARIZATION_NODES as f64;
        sum += h(s + Complex64::from_polar(REGULARIZATION_RADIUS, theta))?;
    }
    Ok(sum / REGULARIZATION_NODES as f64)
}

/// `Z_k(s)` with both factors and the pole distance.
pub fn completed_zeta(field: &FieldDescriptor, s: Complex64) -> Result<EvaluationRecord> {
    let distance = pole_distance(field, s);
    if distance < POLE_RADIUS {
        return Err(pole(format!(
            "Z of {field}: s = {s} is {distance:.3e} from a pole"
        )));
    }
    let regularization = cancelled_gamma_pole(field, s);
    let (gamma_factor_value, zeta_value) = match regularization {
        None => (gamma_factor(field, s)?, zeta(field, s)?),
        Some(Regularization { pole, order }) => {
            let m = order as i32;
            (
                circle_mean(s, |w| Ok(gamma_factor(field, w)? * (w - pole).powi(m)))?,
                circle_mean(s, |w| Ok(zeta(field, w)? / (w - pole).powi(m)))?,
            )
        }
    };
    Ok(EvaluationRecord {
        s,
        zeta_value,
        gamma_factor_value,
        completed_value: gamma_factor_value * zeta_value,
        pole_distance: distance,
        precision_cliff: regularization.is_some(),
        regularization,
    })
}
