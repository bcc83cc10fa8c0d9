//! Recover an L-polynomial from point counts over `F_q, ..., F_(q^g)` with
//! Newton's identities, then use it as a function field.
//!
//! ```bash
//! cargo run --example lpoly_from_counts
//! ```

use global_zeta::field::{lpoly_from_point_counts, FiniteField};
use global_zeta::{covolume, make_curve_function_field, zeta, Complex64};

// Projective points on y^2 = x^3 + x + 1 over a prime field.
fn count_points(p: u64) -> u64 {
    let f = FiniteField::new(p);
    let affine = (0..p)
        .flat_map(|x| (0..p).map(move |y| (x, y)))
        .filter(|&(x, y)| {
            let rhs = f.add(f.add(f.pow(x, 3), x), 1);
            f.mul(y, y) == rhs
        })
        .count() as u64;
    affine + 1
}

fn main() -> global_zeta::Result<()> {
    let n1 = count_points(5);
    let recovered = lpoly_from_point_counts(5, 1, &[n1])?;
    println!("#E(F_5) = {n1}, P(T) = {}", recovered.lpoly);
    for w in &recovered.warnings {
        println!("warning: {w}");
    }
    let field = make_curve_function_field(5, recovered.lpoly)?;
    println!(
        "genus {}, beta = {}",
        field.genus(),
        covolume(&field.clone().into())
    );
    println!(
        "zeta(2) = {:.12}",
        zeta(&field.into(), Complex64::new(2.0, 0.0))?
    );

    // Counts far outside the Weil interval still produce a polynomial, with
    // a diagnostic.
    let odd = lpoly_from_point_counts(5, 1, &[40])?;
    println!(
        "N_1 = 40 gives P(T) = {} with {} warning(s)",
        odd.lpoly,
        odd.warnings.len()
    );
    Ok(())
}
