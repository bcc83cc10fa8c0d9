//! In positive characteristic the functional equation is the coefficient
//! symmetry `a_(2g-i) = q^(g-i) a_i` of the L-polynomial. This example checks
//! it exactly, compares with the numeric residual, and shows that a broken
//! polynomial is refused at construction.
//!
//! ```bash
//! cargo run --example function_field_symmetry
//! ```

use global_zeta::verify::{check_point, exact_check_function_field};
use global_zeta::{make_curve_function_field, Complex64, LPolynomial};

fn main() -> global_zeta::Result<()> {
    // y^2 = x^3 + x + 1 over F_5 has 9 points: P(T) = 1 + 3T + 5T^2.
    let curve = make_curve_function_field(5, LPolynomial::from_i64(&[1, 3, 5])?)?;
    let exact = exact_check_function_field(&curve);
    println!("exact symmetry holds: {}", exact.holds);
    for s in [-1.5, 0.25, 2.0, 3.0] {
        let r = check_point(&curve.clone().into(), Complex64::new(s, 0.0), 1e-12)?;
        println!("  s = {s:>5}: residual {:.2e}", r.relative_residual);
    }

    match make_curve_function_field(5, LPolynomial::from_i64(&[1, 3, 7])?) {
        Ok(_) => println!("1 + 3T + 7T^2 accepted"),
        Err(e) => println!("1 + 3T + 7T^2 rejected: {e}"),
    }
    Ok(())
}
