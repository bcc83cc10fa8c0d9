//! Special-function kernel: everything needed to evaluate Dedekind zeta
//! functions of quadratic fields and their Gamma factors on all of `C`.
//!
//! All routines work in binary64 and are pure; none of them return NaN or
//! infinity for inputs inside their domain. Arguments closer than
//! [`POLE_RADIUS`] to a pole are rejected with [`Error::Pole`](crate::Error::Pole).

mod dirichlet;
mod gamma;
mod hurwitz;
mod kronecker;

pub use num_complex::Complex64;

pub use dirichlet::dirichlet_l;
pub use gamma::log_gamma;
pub use hurwitz::{hurwitz_zeta, riemann_zeta, BERNOULLI};
pub use kronecker::{
    is_fundamental_discriminant, is_squarefree, kronecker_chi, KroneckerCharacter,
};

pub(crate) use hurwitz::hurwitz_regular;

/// Pole-exclusion radius shared by every operation that can raise a pole error.
pub const POLE_RADIUS: f64 = 1e-3;

/// `(e^z - 1) / z`, accurate near `z = 0`.
pub(crate) fn exprel(z: Complex64) -> Complex64 {
    if z.norm() < 0.5 {
        // 1 + z/2! + z^2/3! + ...; 0.5^25 / 26! is far below an ulp.
        let mut term = Complex64::new(1.0, 0.0);
        let mut sum = term;
        for k in 2..=26 {
            term = term * z / k as f64;
            sum += term;
        }
        sum
    } else {
        (z.exp() - 1.0) / z
    }
}
