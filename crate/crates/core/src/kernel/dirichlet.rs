use num_complex::Complex64;

use super::hurwitz::check_pole_at_one;
use super::{hurwitz_regular, riemann_zeta, KroneckerCharacter};
use crate::error::Result;

/// `L(s, chi_D) = |D|^(-s) sum_{r=1}^{|D|} chi_D(r) zeta_H(s, r/|D|)`.
///
/// For `D != 1` the polar parts of the Hurwitz terms cancel (the character
/// sums to zero over a period) and the function is entire. `D = 1` is the
/// Riemann zeta function and keeps its pole at `s = 1`.
pub fn dirichlet_l(s: Complex64, chi: KroneckerCharacter) -> Result<Complex64> {
    if chi.is_trivial() {
        check_pole_at_one("dirichlet_l", s)?;
        return riemann_zeta(s);
    }
    let k = chi.conductor();
    let kf = k as f64;
    let mut acc = Complex64::new(0.0, 0.0);
    for r in 1..k {
        match chi.eval(r) {
            0 => {}
            v => acc += f64::from(v) * hurwitz_regular(s, r as f64 / kf),
        }
    }
    Ok((-s * kf.ln()).exp() * acc)
}
