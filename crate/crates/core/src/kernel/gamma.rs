use std::f64::consts::PI;

use num_complex::Complex64;

use super::POLE_RADIUS;
use crate::error::{pole, Result};

// Lanczos approximation with g = 607/128 and 15 terms (Godfrey). Relative
// error below 1e-15 on the half plane Re z >= 1/2.
const LANCZOS_G: f64 = 607.0 / 128.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_747,
    -0.491_913_816_097_620_2,
    0.339_946_499_848_118_9e-4,
    0.465_236_289_270_485_76e-4,
    -0.983_744_753_048_795_6e-4,
    0.158_088_703_224_912_5e-3,
    -0.210_264_441_724_104_9e-3,
    0.217_439_618_115_212_64e-3,
    -0.164_318_106_536_763_9e-3,
    0.844_182_239_838_527_4e-4,
    -0.261_908_384_015_814_1e-4,
    0.368_991_826_595_316_2e-5,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

/// Principal branch of `log Gamma(s)`, continuous on `C \ (-inf, 0]`.
///
/// On the negative real axis the value is the limit from the upper half
/// plane. Fails with a pole error within [`POLE_RADIUS`] of `0, -1, -2, ...`.
pub fn log_gamma(s: Complex64) -> Result<Complex64> {
    let nearest = s.re.round();
    if nearest <= 0.0 && (s - nearest).norm() < POLE_RADIUS {
        return Err(pole(format!(
            "log_gamma: s = {s} is within {POLE_RADIUS} of the Gamma pole {nearest}"
        )));
    }
    Ok(if s.re >= 0.5 {
        lanczos(s)
    } else {
        reflected(s)
    })
}

fn lanczos(z: Complex64) -> Complex64 {
    // log Gamma(z) = log Gamma(z + 1) - log z, with the Lanczos series for z + 1.
    let mut series = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (j, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series += c / (z + j as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (z + 0.5) * t.ln() - t + LN_SQRT_2PI + series.ln() - z.ln()
}

fn reflected(z: Complex64) -> Complex64 {
    // Gamma(z) Gamma(1 - z) = pi / sin(pi z). The 2*pi*i term restores the
    // principal branch (Hare 1997); it assumes log sin(pi z) is taken as the
    // limit from the right on the lines Re z = 2m - 1/2, which the signed
    // zero of `sin_pi_z` provides.
    let sign = if z.im.is_sign_negative() { -1.0 } else { 1.0 };
    let branch = Complex64::new(0.0, sign * 2.0 * PI * (0.5 * z.re + 0.25).floor());
    PI.ln() + branch - sin_pi_z(z).ln() - lanczos(1.0 - z)
}

/// `sin(pi z) = sin(pi x) cosh(pi y) + i cos(pi x) sinh(pi y)`, with
/// `sin(pi x)`, `cos(pi x)` reduced to `|x - n| <= 1/2` and `cos(pi x)`
/// exactly `+0` at half-integers.
fn sin_pi_z(z: Complex64) -> Complex64 {
    let n = z.re.round();
    let r = z.re - n;
    let parity = if n.rem_euclid(2.0) == 1.0 { -1.0 } else { 1.0 };
    let sin_x = parity * (PI * r).sin();
    let cos_x = if r.abs() == 0.5 {
        0.0
    } else {
        parity * (PI * r).cos()
    };
    let y = PI * z.im;
    Complex64::new(sin_x * y.cosh(), cos_x * y.sinh())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    // Independent oracle: Stirling series after shifting to |z| >= 30, with
    // log Gamma(z) = log Gamma(z + m) - sum log(z + k). Each log is principal,
    // so the sum tracks the principal branch off the negative axis.
    fn stirling_oracle(z: Complex64) -> Complex64 {
        let mut shift = Complex64::new(0.0, 0.0);
        let mut w = z;
        while w.norm() < 30.0 || w.re < 0.0 {
            shift += w.ln();
            w += 1.0;
        }
        let coeffs = [
            1.0 / 12.0,
            -1.0 / 360.0,
            1.0 / 1260.0,
            -1.0 / 1680.0,
            1.0 / 1188.0,
            -691.0 / 360360.0,
            1.0 / 156.0,
        ];
        let inv = 1.0 / w;
        let inv2 = inv * inv;
        let mut tail = Complex64::new(0.0, 0.0);
        let mut p = inv;
        for k in coeffs {
            tail += k * p;
            p *= inv2;
        }
        (w - 0.5) * w.ln() - w + LN_SQRT_2PI + tail - shift
    }

    // Gamma(1/2) = int t^(-1/2) e^(-t) dt = 2 int exp(-u^2) du after t = u^2;
    // composite Simpson on [0, 10].
    fn gamma_half_by_quadrature() -> f64 {
        let n = 20_000;
        let h = 10.0 / n as f64;
        let f = |u: f64| (-u * u).exp();
        let mut acc = f(0.0) + f(10.0);
        for i in 1..n {
            let w = if i % 2 == 1 { 4.0 } else { 2.0 };
            acc += w * f(i as f64 * h);
        }
        2.0 * acc * h / 3.0
    }

    #[test]
    fn integer_and_half_integer_values() {
        assert!(log_gamma(c(1.0, 0.0)).unwrap().norm() < 1e-15);
        assert!((log_gamma(c(5.0, 0.0)).unwrap() - c(24f64.ln(), 0.0)).norm() < 1e-14);
        let expected = gamma_half_by_quadrature().ln();
        assert!((expected - 0.572_364_942_924_700_1).abs() < 1e-13);
        assert!((log_gamma(c(0.5, 0.0)).unwrap() - c(expected, 0.0)).norm() < 1e-13);
    }

    #[test]
    fn negative_half_integer_through_reflection() {
        // Gamma(-1/2) = -2 sqrt(pi)
        let v = log_gamma(c(-0.5, 0.0)).unwrap().exp();
        assert!((v - c(-2.0 * PI.sqrt(), 0.0)).norm() < 1e-14);
        let v = log_gamma(c(-1.5, 0.0)).unwrap().exp();
        assert!((v - c(4.0 * PI.sqrt() / 3.0, 0.0)).norm() < 1e-14);
    }

    #[test]
    fn agrees_with_stirling_oracle_including_branch() {
        let pts = [
            c(0.7, 0.0),
            c(3.3, 12.0),
            c(0.5, -40.0),
            c(-3.7, 2.0),
            c(-7.2, -0.3),
            c(-20.5, 15.0),
            c(-2.5, -3.0),
            c(-0.5, 0.0),
            c(-5.5, 1e-3),
            c(0.1, 0.1),
            c(-0.4, 30.0),
            c(10.0, -45.0),
            c(0.49, 5.0),
        ];
        for z in pts {
            let got = log_gamma(z).unwrap();
            let want = stirling_oracle(z);
            assert!(
                (got - want).norm() < 1e-12 * want.norm().max(1.0),
                "z = {z}: {got} vs {want}"
            );
        }
    }

    #[test]
    fn continuous_across_reflection_boundary() {
        for im in [-30.0, -3.0, 0.5, 7.0, 44.0] {
            let a = log_gamma(c(0.5 - 1e-9, im)).unwrap();
            let b = log_gamma(c(0.5 + 1e-9, im)).unwrap();
            assert!((a - b).norm() < 1e-7, "im = {im}");
        }
    }

    #[test]
    fn poles_are_rejected() {
        for z in [
            c(0.0, 0.0),
            c(-3.0, 0.0),
            c(-7.0 + 5e-4, 0.0),
            c(-1.0, 9e-4),
        ] {
            assert!(matches!(log_gamma(z), Err(Error::Pole(_))), "z = {z}");
        }
        assert!(log_gamma(c(-3.0, 2e-3)).is_ok());
    }
}
