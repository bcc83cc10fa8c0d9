use std::f64::consts::PI;

use num_complex::Complex64;

use super::{exprel, POLE_RADIUS};
use crate::error::{domain, pole, Result};

/// Even-index Bernoulli numbers `B_2, B_4, ..., B_24` as exact fractions.
pub const BERNOULLI: [(i64, i64); 12] = [
    (1, 6),
    (-1, 30),
    (1, 42),
    (-1, 30),
    (5, 66),
    (-691, 2730),
    (7, 6),
    (-3617, 510),
    (43867, 798),
    (-174611, 330),
    (854513, 138),
    (-236364091, 2730),
];

const MIN_SHIFT: usize = 20;

/// `B_{2j} / (2j)!` for `j = 1..=12`.
fn correction_coefficients() -> [f64; 12] {
    let mut out = [0.0; 12];
    let mut factorial = 1.0_f64;
    for (j, &(num, den)) in BERNOULLI.iter().enumerate() {
        let two_j = 2 * (j + 1);
        factorial *= ((two_j - 1) * two_j) as f64;
        out[j] = num as f64 / den as f64 / factorial;
    }
    out
}

/// `zeta_H(s, a) - 1/(s - 1)` for any `a > 0`, by Euler-Maclaurin summation.
///
/// The subtracted polar part makes this entire in `s`, which lets
/// characters with zero sum (the Dirichlet L-functions) be evaluated at
/// `s = 1` without special casing.
pub(crate) fn hurwitz_regular(s: Complex64, a: f64) -> Complex64 {
    hurwitz_regular_shifted(s, a, shift_for(s, a))
}

/// Number of terms summed directly before Euler-Maclaurin takes over.
///
/// `max(20, ceil|s|)` for `Re s >= 0`. For `Re s < 0` the head terms grow like
/// `n^(-Re s)` and their rounding dominates, so the shift minimizes the
/// estimated rounding error `eps * sum_{n<N} |(n+a)^-s|` plus the truncation
/// error `2 |(s)_(2K+1)| / (2 pi x)^(2K+2) * x^(1 - Re s)`, `x = a + N`,
/// over `1..=max(20, ceil|s|)`.
pub(crate) fn shift_for(s: Complex64, a: f64) -> usize {
    let cap = MIN_SHIFT.max(s.norm().ceil() as usize);
    if s.re >= 0.0 {
        return cap;
    }
    let k = BERNOULLI.len();
    let log_pochhammer: f64 = (0..=2 * k).map(|i| (s + i as f64).norm().ln()).sum();
    let mut head = 0.0;
    let mut best = (f64::INFINITY, cap);
    for n in 1..=cap {
        head += (a + (n - 1) as f64).powf(-s.re);
        let x = a + n as f64;
        let tail = x.powf(1.0 - s.re);
        let rounding = f64::EPSILON * (head + tail / (s - 1.0).norm());
        let truncation =
            2.0 * (log_pochhammer - (2 * k + 2) as f64 * (2.0 * PI * x).ln()).exp() * tail;
        if rounding + truncation < best.0 {
            best = (rounding + truncation, n);
        }
    }
    best.1
}

fn hurwitz_regular_shifted(s: Complex64, a: f64, shift: usize) -> Complex64 {
    // Modulus by powf, which is good to about an ulp; exp(-s ln x) would
    // amplify the rounding of ln x by |s|.
    let power = |x: f64| {
        if s.im == 0.0 {
            Complex64::new(x.powf(-s.re), 0.0)
        } else {
            Complex64::from_polar(x.powf(-s.re), -s.im * x.ln())
        }
    };
    let mut head = Complex64::new(0.0, 0.0);
    for n in 0..shift {
        head += power(a + n as f64);
    }

    let x = a + shift as f64;
    let lx = x.ln();
    let x_pow = power(x);
    // (x^(1-s) - 1) / (s - 1); the series form only near s = 1, where the
    // direct quotient cancels.
    let z = (1.0 - s) * lx;
    let integral = if z.norm() < 0.5 {
        -lx * exprel(z)
    } else {
        (x * x_pow - 1.0) / (s - 1.0)
    };

    let mut tail = Complex64::new(0.0, 0.0);
    // s (s+1) ... (s+2j-2) x^(-s-2j+1)
    let mut term = s * x_pow / x;
    let inv_x2 = 1.0 / (x * x);
    for (j, coeff) in correction_coefficients().into_iter().enumerate() {
        if j > 0 {
            let k = (2 * j) as f64;
            term = term * (s + (k - 1.0)) * (s + k) * inv_x2;
        }
        tail += coeff * term;
    }

    head + integral + 0.5 * x_pow + tail
}

/// Analytically continued Hurwitz zeta `sum_{n >= 0} (n + a)^(-s)` for
/// `0 < a <= 1`.
pub fn hurwitz_zeta(s: Complex64, a: f64) -> Result<Complex64> {
    if !(a > 0.0 && a <= 1.0) {
        return Err(domain(format!("hurwitz_zeta: a = {a} is outside (0, 1]")));
    }
    check_pole_at_one("hurwitz_zeta", s)?;
    Ok(hurwitz_regular(s, a) + 1.0 / (s - 1.0))
}

/// Riemann zeta function, `zeta_H(s, 1)`.
pub fn riemann_zeta(s: Complex64) -> Result<Complex64> {
    check_pole_at_one("riemann_zeta", s)?;
    Ok(hurwitz_regular(s, 1.0) + 1.0 / (s - 1.0))
}

pub(crate) fn check_pole_at_one(op: &str, s: Complex64) -> Result<()> {
    if (s - 1.0).norm() < POLE_RADIUS {
        Err(pole(format!(
            "{op}: s = {s} is within {POLE_RADIUS} of the pole at 1"
        )))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn rel(a: Complex64, b: Complex64) -> f64 {
        (a - b).norm() / b.norm()
    }

    // Direct summation plus the integral tail bound, for real s > 1.
    fn summation_oracle(s: f64, a: f64) -> f64 {
        let n = 2_000_000;
        let mut acc = 0.0;
        for k in (0..n).rev() {
            acc += (k as f64 + a).powf(-s);
        }
        // int_{n+a-1/2}^inf x^(-s) dx, midpoint tail
        acc + (n as f64 + a - 0.5).powf(1.0 - s) / (s - 1.0)
    }

    // zeta_H(-n, a) = -B_{n+1}(a) / (n + 1), Bernoulli polynomials from
    // their explicit sum over the Bernoulli numbers.
    fn bernoulli_oracle(n: u32, a: f64) -> f64 {
        fn bernoulli_number(k: u32) -> f64 {
            match k {
                0 => 1.0,
                1 => -0.5,
                k if k % 2 == 1 => 0.0,
                k => {
                    let (num, den) = BERNOULLI[(k / 2 - 1) as usize];
                    num as f64 / den as f64
                }
            }
        }
        fn binom(n: u32, k: u32) -> f64 {
            (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
        }
        let m = n + 1;
        let poly: f64 = (0..=m)
            .map(|k| binom(m, k) * bernoulli_number(k) * a.powi((m - k) as i32))
            .sum();
        -poly / m as f64
    }

    #[test]
    fn zeta_two_against_summation() {
        let oracle = summation_oracle(2.0, 1.0);
        assert!((oracle - PI * PI / 6.0).abs() < 1e-12);
        let got = hurwitz_zeta(c(2.0, 0.0), 1.0).unwrap();
        assert!(rel(got, c(oracle, 0.0)) < 1e-12);
        assert!((got.re - 1.644_934_066_8).abs() < 1e-10);
    }

    #[test]
    fn shifted_value_at_two() {
        // zeta_H(2, 2) = zeta_H(2, 1) - 1
        let shifted = hurwitz_regular(c(2.0, 0.0), 2.0) + 1.0;
        assert!((shifted.re - 0.644_934_066_848_226_4).abs() < 1e-13);
        assert!(shifted.im.abs() < 1e-15);
    }

    #[test]
    fn nonpositive_integers_against_bernoulli_polynomials() {
        // Absolute error is bounded by rounding in the head sum.
        for n in 0..12 {
            for a in [1.0, 0.25, 0.5, 0.8, 1.0 / 3.0] {
                let want = bernoulli_oracle(n, a);
                let s = c(-(n as f64), 0.0);
                let got = hurwitz_zeta(s, a).unwrap();
                assert!(
                    (got.re - want).abs() < 1e-14 + 1e-15 * head_scale(s, a),
                    "n = {n}, a = {a}: {got} vs {want}"
                );
            }
        }
        let z = riemann_zeta(c(-1.0, 0.0)).unwrap();
        assert!((z.re + 1.0 / 12.0).abs() < 1e-14);
        let z = riemann_zeta(c(0.0, 0.0)).unwrap();
        assert!((z.re + 0.5).abs() < 1e-15);
    }

    #[test]
    fn real_s_greater_than_one_against_summation() {
        for (s, a) in [(1.5, 1.0), (3.0, 0.5), (2.5, 0.125), (7.0, 0.9)] {
            let want = summation_oracle(s, a);
            let got = hurwitz_zeta(c(s, 0.0), a).unwrap();
            assert!(rel(got, c(want, 0.0)) < 1e-11, "s = {s}, a = {a}");
        }
    }

    #[test]
    fn first_riemann_zero_is_a_zero() {
        let rho = c(0.5, 14.134_725_141_734_693);
        assert!(riemann_zeta(rho).unwrap().norm() < 1e-13);
    }

    #[test]
    fn domain_and_pole_errors() {
        assert!(matches!(
            hurwitz_zeta(c(2.0, 0.0), 0.0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            hurwitz_zeta(c(2.0, 0.0), 1.5),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            hurwitz_zeta(c(1.0, 0.0), 0.5),
            Err(Error::Pole(_))
        ));
        assert!(matches!(riemann_zeta(c(1.0, 5e-4)), Err(Error::Pole(_))));
        assert!(riemann_zeta(c(1.0, 2e-3)).is_ok());
    }

    // Scale of the Euler-Maclaurin head sum; for Re s < 0 the result is
    // small next to it and accuracy is limited to about eps times this.
    fn head_scale(s: Complex64, a: f64) -> f64 {
        (0..=shift_for(s, a))
            .map(|n| (a + n as f64).powf(-s.re))
            .sum()
    }

    proptest! {
        #[test]
        fn shift_identity(re in 0.0f64..10.0, im in -40.0f64..40.0, a in 0.01f64..1.0) {
            let s = c(re, im);
            prop_assume!((s - 1.0).norm() > 0.1);
            let lhs = hurwitz_regular(s, a) + 1.0 / (s - 1.0);
            let rhs = (-s * a.ln()).exp() + hurwitz_regular(s, a + 1.0) + 1.0 / (s - 1.0);
            prop_assert!((lhs - rhs).norm() <= 1e-12 * lhs.norm().max(rhs.norm()),
                "s = {}, a = {}: {} vs {}", s, a, lhs, rhs);
        }

        #[test]
        fn shift_identity_left_half_plane(re in -10.0f64..0.0, im in -40.0f64..40.0, a in 0.01f64..1.0) {
            let s = c(re, im);
            let lhs = hurwitz_regular(s, a) + 1.0 / (s - 1.0);
            let rhs = (-s * a.ln()).exp() + hurwitz_regular(s, a + 1.0) + 1.0 / (s - 1.0);
            let scale = head_scale(s, a + 1.0);
            prop_assert!((lhs - rhs).norm() <= 1e-13 * scale,
                "s = {}, a = {}: {} vs {} (scale {})", s, a, lhs, rhs, scale);
        }
    }
}
