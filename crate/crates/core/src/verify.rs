//! Checks of `Z_k(1 - s) = beta(A/k)^(2s - 1) Z_k(s)`.
//!
//! [`check_point`] and [`sweep`] compare both sides numerically.
//! [`exact_check_function_field`] verifies the equivalent coefficient
//! identity of the L-polynomial in integer arithmetic.
//! [`euler_consistency_check`] compares `zeta_k` with its truncated Euler
//! product for `Re s > 1`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::field::{covolume, truncated_euler_product, FieldDescriptor, FunctionFieldDescriptor};
use crate::kernel::POLE_RADIUS;
use crate::zeta::{completed_zeta, pole_distance, zeta};

/// Default tolerance on the relative residual.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;
/// Floor of the residual denominator.
pub const RESIDUAL_FLOOR: f64 = 1e-300;
/// Both sides below this magnitude count as equal.
pub const NEGLIGIBLE_MAGNITUDE: f64 = 1e-100;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    NearPoleSkipped,
    Failed,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::NearPoleSkipped => "near_pole_skipped",
            Status::Failed => "failed",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Both sides of the functional equation at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FunctionalEquationReport {
    pub s: Complex64,
    /// `Z_k(1 - s)`
    pub lhs: Complex64,
    /// `beta^(2s - 1) Z_k(s)`
    pub rhs: Complex64,
    pub relative_residual: f64,
    /// `min(pole_distance(s), pole_distance(1 - s))`
    pub pole_distance_min: f64,
    pub status: Status,
}

/// `|lhs - rhs| / max(|lhs|, |rhs|, 1e-300)`, or 0 when both sides are
/// below `1e-100`.
pub fn relative_residual(lhs: Complex64, rhs: Complex64) -> f64 {
    let (a, b) = (lhs.norm(), rhs.norm());
    if a < NEGLIGIBLE_MAGNITUDE && b < NEGLIGIBLE_MAGNITUDE {
        return 0.0;
    }
    (lhs - rhs).norm() / a.max(b).max(RESIDUAL_FLOOR)
}

fn check_tolerance(tolerance: f64) -> Result<()> {
    if tolerance > 0.0 && tolerance.is_finite() {
        Ok(())
    } else {
        Err(domain(format!(
            "tolerance must be positive and finite, got {tolerance}"
        )))
    }
}

/// Compares `Z_k(1 - s)` with `beta^(2s - 1) Z_k(s)`.
///
/// Points where `s` or `1 - s` is within [`POLE_RADIUS`] of a pole of `Z_k`,
/// or where a Gamma factor cannot be evaluated, are reported as
/// [`Status::NearPoleSkipped`] with zero sides.
pub fn check_point(
    field: &FieldDescriptor,
    s: Complex64,
    tolerance: f64,
) -> Result<FunctionalEquationReport> {
    check_tolerance(tolerance)?;
    let reflected = 1.0 - s;
    let pole_distance_min = pole_distance(field, s).min(pole_distance(field, reflected));
    let skipped = FunctionalEquationReport {
        s,
        lhs: Complex64::new(0.0, 0.0),
        rhs: Complex64::new(0.0, 0.0),
        relative_residual: 0.0,
        pole_distance_min,
        status: Status::NearPoleSkipped,
    };
    if pole_distance_min < POLE_RADIUS {
        return Ok(skipped);
    }
    let (Ok(left), Ok(right)) = (completed_zeta(field, reflected), completed_zeta(field, s)) else {
        return Ok(skipped);
    };
    let log_beta = covolume(field).ln();
    let lhs = left.completed_value;
    let rhs = ((2.0 * s - 1.0) * log_beta).exp() * right.completed_value;
    let relative_residual = relative_residual(lhs, rhs);
    let status = if relative_residual <= tolerance {
        Status::Ok
    } else {
        Status::Failed
    };
    Ok(FunctionalEquationReport {
        s,
        lhs,
        rhs,
        relative_residual,
        pole_distance_min,
        status,
    })
}

/// Rectangular grid `[re_min, re_max] x [im_min, im_max]` with inclusive end
/// points. A single step uses the lower bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub re_min: f64,
    pub re_max: f64,
    pub re_steps: usize,
    pub im_min: f64,
    pub im_max: f64,
    pub im_steps: usize,
}

impl Grid {
    pub fn new(re: (f64, f64, usize), im: (f64, f64, usize)) -> Result<Self> {
        for (axis, (lo, hi, steps)) in [("re", re), ("im", im)] {
            if !(lo.is_finite() && hi.is_finite()) {
                return Err(domain(format!("{axis} range must be finite")));
            }
            if steps == 0 {
                return Err(domain(format!("{axis} range has no steps")));
            }
            if hi < lo {
                return Err(domain(format!("{axis} range {lo}:{hi} is inverted")));
            }
        }
        Ok(Self {
            re_min: re.0,
            re_max: re.1,
            re_steps: re.2,
            im_min: im.0,
            im_max: im.1,
            im_steps: im.2,
        })
    }

    /// The 5 x 5 grid on `[0.1, 0.9] x [0, 10]`.
    pub fn standard() -> Self {
        Self::new((0.1, 0.9, 5), (0.0, 10.0, 5)).expect("valid grid")
    }

    fn axis(lo: f64, hi: f64, steps: usize) -> Vec<f64> {
        if steps == 1 {
            return vec![lo];
        }
        let h = (hi - lo) / (steps - 1) as f64;
        (0..steps)
            .map(|i| {
                if i + 1 == steps {
                    hi
                } else {
                    lo + i as f64 * h
                }
            })
            .collect()
    }

    /// Nodes in row-major order: ascending real part, then ascending
    /// imaginary part.
    pub fn nodes(&self) -> Vec<Complex64> {
        let ims = Self::axis(self.im_min, self.im_max, self.im_steps);
        Self::axis(self.re_min, self.re_max, self.re_steps)
            .into_iter()
            .flat_map(|re| ims.iter().map(move |&im| Complex64::new(re, im)))
            .collect()
    }

    pub fn len(&self) -> usize {
        self.re_steps * self.im_steps
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl fmt::Display for Grid {
    /// `re_min:re_max:steps,im_min:im_max:steps`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}:{},{}:{}:{}",
            self.re_min, self.re_max, self.re_steps, self.im_min, self.im_max, self.im_steps
        )
    }
}

impl FromStr for Grid {
    type Err = crate::Error;

    fn from_str(text: &str) -> Result<Self> {
        let parse_axis = |part: &str| -> Result<(f64, f64, usize)> {
            let fields: Vec<&str> = part.split(':').collect();
            let bad = || crate::Error::Parse {
                token: part.to_string(),
                reason: "expected min:max:steps".into(),
            };
            if fields.len() != 3 {
                return Err(bad());
            }
            Ok((
                fields[0].trim().parse().map_err(|_| bad())?,
                fields[1].trim().parse().map_err(|_| bad())?,
                fields[2].trim().parse().map_err(|_| bad())?,
            ))
        };
        let (re, im) = text.split_once(',').ok_or_else(|| crate::Error::Parse {
            token: text.to_string(),
            reason: "expected re_min:re_max:steps,im_min:im_max:steps".into(),
        })?;
        Grid::new(parse_axis(re)?, parse_axis(im)?)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSummary {
    pub field: String,
    pub grid: Option<String>,
    pub tolerance: f64,
    pub count_ok: usize,
    pub count_skipped: usize,
    pub count_failed: usize,
    /// Largest residual over `ok` nodes; 0 when there are none.
    pub max_residual: f64,
}

impl SweepSummary {
    pub fn from_reports(
        field: String,
        grid: Option<String>,
        tolerance: f64,
        reports: &[FunctionalEquationReport],
    ) -> Self {
        let count = |status| reports.iter().filter(|r| r.status == status).count();
        let max_residual = reports
            .iter()
            .filter(|r| r.status == Status::Ok)
            .map(|r| r.relative_residual)
            .fold(0.0, f64::max);
        Self {
            field,
            grid,
            tolerance,
            count_ok: count(Status::Ok),
            count_skipped: count(Status::NearPoleSkipped),
            count_failed: count(Status::Failed),
            max_residual,
        }
    }

    pub fn total(&self) -> usize {
        self.count_ok + self.count_skipped + self.count_failed
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    pub reports: Vec<FunctionalEquationReport>,
    pub summary: SweepSummary,
}

/// [`check_point`] at every node of `grid`. Nodes are evaluated in
/// parallel; reports come back in the order of [`Grid::nodes`].
pub fn sweep(field: &FieldDescriptor, grid: &Grid, tolerance: f64) -> Result<SweepResult> {
    check_tolerance(tolerance)?;
    let reports = grid
        .nodes()
        .par_iter()
        .map(|&s| check_point(field, s, tolerance))
        .collect::<Result<Vec<_>>>()?;
    let summary = SweepSummary::from_reports(
        field.to_string(),
        Some(grid.to_string()),
        tolerance,
        &reports,
    );
    Ok(SweepResult { reports, summary })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ExactCheck {
    pub holds: bool,
    /// First index `i` with `a_{2g-i} != q^(g-i) a_i`.
    pub witness: Option<usize>,
}

/// The functional equation of a function field, in exact arithmetic.
///
/// With `T = q^-s` the map `s -> 1 - s` sends `T` to `1/(qT)`, and
/// `Z(1 - s) = q^((g-1)(2s-1)) Z(s)` splits into two identities:
///
/// - the denominator: `(1 - 1/(qT))(1 - 1/T) = (qT^2)^-1 (1 - T)(1 - qT)`,
///   which holds for every `q`;
/// - the numerator: `P(1/(qT)) = (q^g T^2g)^-1 P(T)`, i.e.
///   `a_{2g-i} = q^(g-i) a_i`.
///
/// Only the numerator identity depends on the field, so it is the one
/// checked here.
pub fn exact_check_function_field(field: &FunctionFieldDescriptor) -> ExactCheck {
    let witness = field.lpoly().symmetry_violation(field.q());
    ExactCheck {
        holds: witness.is_none(),
        witness,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerCheck {
    pub s: Complex64,
    pub norm_bound: u64,
    pub closed_form: Complex64,
    pub truncated: Complex64,
    pub gap: f64,
    /// `4 * N^(1 - Re s) / (Re s - 1)`, the integral bound on
    /// `4 * sum_{n > N} n^(-Re s)`.
    pub tail_bound: f64,
    pub pass: bool,
}

/// Compares `zeta_k(s)` with the Euler product over places of norm at most
/// `norm_bound`.
pub fn euler_consistency_check(
    field: &FieldDescriptor,
    s: Complex64,
    norm_bound: u64,
) -> Result<EulerCheck> {
    if s.re <= 1.0 {
        return Err(domain(format!(
            "the Euler product needs Re s > 1, got s = {s}"
        )));
    }
    let closed_form = zeta(field, s)?;
    let truncated = truncated_euler_product(field, s, norm_bound)?;
    let gap = (closed_form - truncated).norm();
    let tail_bound = 4.0 * (norm_bound as f64).powf(1.0 - s.re) / (s.re - 1.0);
    Ok(EulerCheck {
        s,
        norm_bound,
        closed_form,
        truncated,
        gap,
        tail_bound,
        pass: gap <= tail_bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{
        make_curve_function_field, make_quadratic, make_rational_function_field, make_rationals,
        LPolynomial,
    };
    use num_bigint::BigInt;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn rationals_at_two() {
        let q: FieldDescriptor = make_rationals().into();
        let r = check_point(&q, c(2.0, 0.0), 1e-9).unwrap();
        assert_eq!(r.status, Status::Ok);
        assert!(r.relative_residual <= 1e-10);
        assert!((r.lhs.re - PI / 6.0).abs() < 1e-13);
        assert!((r.rhs.re - PI / 6.0).abs() < 1e-13);
    }

    #[test]
    fn gaussian_field_at_two() {
        let gauss: FieldDescriptor = make_quadratic(-1).unwrap().into();
        let r = check_point(&gauss, c(2.0, 0.0), 1e-9).unwrap();
        assert_eq!(r.status, Status::Ok);
        let z2 = completed_zeta(&gauss, c(2.0, 0.0)).unwrap().completed_value;
        assert!(((r.lhs / z2).re - 8.0).abs() < 1e-9);
    }

    #[test]
    fn rational_function_field_at_two() {
        let f5: FieldDescriptor = make_rational_function_field(5).unwrap().into();
        let r = check_point(&f5, c(2.0, 0.0), 1e-12).unwrap();
        assert_eq!(r.status, Status::Ok);
        assert!(r.relative_residual <= 1e-13);
        // beta^3 = 1/125
        assert!((r.rhs.re - 125.0 / 96.0 / 125.0).abs() < 1e-15);
    }

    #[test]
    fn poles_are_skipped() {
        let q: FieldDescriptor = make_rationals().into();
        for s in [c(1.0, 0.0), c(0.0, 0.0), c(1.0005, 0.0)] {
            assert_eq!(
                check_point(&q, s, 1e-9).unwrap().status,
                Status::NearPoleSkipped
            );
        }
        // 1 - s = -2 is only an apparent Gamma pole
        assert_eq!(
            check_point(&q, c(3.0, 0.0), 1e-9).unwrap().status,
            Status::Ok
        );
        assert!(check_point(&q, c(2.0, 0.0), 0.0).is_err());
    }

    #[test]
    fn involution() {
        for field in [
            FieldDescriptor::from(make_quadratic(-3).unwrap()),
            make_quadratic(2).unwrap().into(),
            make_rational_function_field(3).unwrap().into(),
        ] {
            for s in [c(0.2, 3.0), c(0.7, -8.0), c(2.5, 1.0)] {
                let a = check_point(&field, s, 1e-9).unwrap();
                let b = check_point(&field, 1.0 - s, 1e-9).unwrap();
                assert!((a.relative_residual - b.relative_residual).abs() < 1e-12);
                // beta^(2s-1) beta^(1-2s) = 1
                let log_beta = covolume(&field).ln();
                let product = (2.0 * s - 1.0) * log_beta + (2.0 * (1.0 - s) - 1.0) * log_beta;
                assert!(product.norm() < 1e-14);
            }
        }
    }

    #[test]
    fn grid_ordering_and_validation() {
        let grid: Grid = "0:1:2,0:2:3".parse().unwrap();
        let nodes = grid.nodes();
        let expected = [
            (0.0, 0.0),
            (0.0, 1.0),
            (0.0, 2.0),
            (1.0, 0.0),
            (1.0, 1.0),
            (1.0, 2.0),
        ];
        assert_eq!(nodes.len(), 6);
        for (n, (re, im)) in nodes.iter().zip(expected) {
            assert_eq!((n.re, n.im), (re, im));
        }
        assert!(Grid::new((1.0, 0.0, 3), (0.0, 1.0, 1)).is_err());
        assert!(Grid::new((0.0, 1.0, 0), (0.0, 1.0, 1)).is_err());
        assert!("0:1,0:1:1".parse::<Grid>().is_err());
        assert_eq!(Grid::standard().to_string(), "0.1:0.9:5,0:10:5");
    }

    #[test]
    fn sweep_through_the_pole_at_one() {
        let q: FieldDescriptor = make_rationals().into();
        let grid = Grid::new((0.5, 1.5, 3), (0.0, 0.0, 1)).unwrap();
        let result = sweep(&q, &grid, 1e-9).unwrap();
        assert_eq!(result.reports[1].s, c(1.0, 0.0));
        assert_eq!(result.reports[1].status, Status::NearPoleSkipped);
        assert_eq!(result.summary.count_skipped, 1);
        assert_eq!(result.summary.total(), 3);
    }

    #[test]
    fn function_field_real_sweep() {
        let f3: FieldDescriptor = make_rational_function_field(3).unwrap().into();
        let grid = Grid::new((-2.0, 3.0, 11), (0.0, 0.0, 1)).unwrap();
        let result = sweep(&f3, &grid, 1e-12).unwrap();
        for r in &result.reports {
            let near = [0.0, 1.0].iter().any(|&b| (r.s.re - b).abs() < POLE_RADIUS);
            let expected = if near {
                Status::NearPoleSkipped
            } else {
                Status::Ok
            };
            assert_eq!(r.status, expected, "s = {}", r.s);
        }
        assert_eq!(result.summary.count_failed, 0);
    }

    #[test]
    fn exact_checks() {
        let curve =
            make_curve_function_field(5, LPolynomial::from_i64(&[1, 3, 5]).unwrap()).unwrap();
        assert_eq!(
            exact_check_function_field(&curve),
            ExactCheck {
                holds: true,
                witness: None
            }
        );
        let quartic =
            make_curve_function_field(2, LPolynomial::from_i64(&[1, 0, 0, 0, 4]).unwrap()).unwrap();
        assert!(exact_check_function_field(&quartic).holds);
        let broken = FunctionFieldDescriptor::from_parts_unchecked(
            5,
            LPolynomial::from_i64(&[1, 3, 7]).unwrap(),
        );
        assert_eq!(
            exact_check_function_field(&broken),
            ExactCheck {
                holds: false,
                witness: Some(0)
            }
        );
    }

    #[test]
    fn euler_checks() {
        let q: FieldDescriptor = make_rationals().into();
        let r = euler_consistency_check(&q, c(3.0, 0.0), 100).unwrap();
        assert!(r.pass && r.gap < 5.1e-5);
        let gauss: FieldDescriptor = make_quadratic(-1).unwrap().into();
        assert!(
            euler_consistency_check(&gauss, c(2.0, 0.0), 500)
                .unwrap()
                .pass
        );
        // Near the abscissa the check only reports.
        let r = euler_consistency_check(&q, c(1.01, 0.0), 50).unwrap();
        assert!(r.gap.is_finite() && r.tail_bound.is_finite());
        assert!(euler_consistency_check(&q, c(1.0, 0.0), 50).is_err());
    }

    proptest! {
        #[test]
        fn mutating_an_lpoly_coefficient_breaks_both_checks(
            which in 0usize..3,
            index in 0usize..5,
            delta in prop_oneof![-5i64..=-1, 1i64..=5],
        ) {
            let (q, coeffs): (u64, Vec<i64>) = match which {
                0 => (5, vec![1, 3, 5]),
                1 => (2, vec![1, 0, 0, 0, 4]),
                _ => (3, vec![1, -1, 3, -3, 9]),
            };
            let g = coeffs.len() / 2;
            let index = index % coeffs.len();
            // the middle coefficient is its own mirror
            prop_assume!(index != g);
            let mut mutated: Vec<BigInt> = coeffs.iter().map(|&c| BigInt::from(c)).collect();
            mutated[index] += delta;
            let lpoly = LPolynomial::from_coefficients_unchecked(mutated);
            let ff = FunctionFieldDescriptor::from_parts_unchecked(q, lpoly);
            prop_assert!(!exact_check_function_field(&ff).holds);
            let field = FieldDescriptor::Function(ff);
            let report = check_point(&field, c(2.0, 0.0), 1e-12).unwrap();
            prop_assert!(report.relative_residual > 1e-6, "residual {}", report.relative_residual);
        }
    }
}
