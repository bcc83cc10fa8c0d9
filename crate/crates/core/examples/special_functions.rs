//! The special-function kernel on its own: log-Gamma, Hurwitz and Riemann
//! zeta, Kronecker symbols and Dirichlet L-functions.
//!
//! ```bash
//! cargo run --example special_functions
//! ```

use global_zeta::kernel::{
    dirichlet_l, hurwitz_zeta, kronecker_chi, log_gamma, riemann_zeta, KroneckerCharacter,
};
use global_zeta::Complex64;

fn main() -> global_zeta::Result<()> {
    let c = Complex64::new;

    println!("log Gamma");
    for z in [c(0.5, 0.0), c(5.0, 0.0), c(-2.5, 0.0), c(0.5, 20.0)] {
        println!("  ln Gamma({z}) = {:.15}", log_gamma(z)?);
    }

    println!("Riemann zeta");
    for s in [
        c(2.0, 0.0),
        c(0.0, 0.0),
        c(-1.0, 0.0),
        c(0.5, 14.134_725_141_734_7),
    ] {
        println!("  zeta({s}) = {:.15}", riemann_zeta(s)?);
    }
    println!(
        "  zeta_H(2, 1/4) = {:.15}",
        hurwitz_zeta(c(2.0, 0.0), 0.25)?
    );

    print!("Kronecker symbol (-4 / n), n = 1..12:");
    for n in 1..=12 {
        print!(" {}", kronecker_chi(-4, n)?);
    }
    println!();

    println!("Dirichlet L-functions");
    for d in [-4, -3, 5, 8] {
        let chi = KroneckerCharacter::new(d)?;
        println!(
            "  D = {d:>2}: L(1) = {:.15}, L(2) = {:.15}",
            dirichlet_l(c(1.0, 0.0), chi)?.re,
            dirichlet_l(c(2.0, 0.0), chi)?.re
        );
    }

    // Arguments next to a pole are rejected rather than returned as inf.
    match log_gamma(c(-3.0, 0.0)) {
        Err(e) => println!("log_gamma(-3): {e}"),
        Ok(v) => println!("log_gamma(-3) = {v}"),
    }
    Ok(())
}
