//! Places of small norm, their local factors `(1 - q_v^-s)^-1`, and the
//! truncated Euler product against the closed form.
//!
//! ```bash
//! cargo run --example places_and_euler_product
//! ```

use global_zeta::field::{enumerate_places, local_euler_factor, parse_field_spec};
use global_zeta::verify::euler_consistency_check;
use global_zeta::Complex64;

fn main() -> global_zeta::Result<()> {
    let s = Complex64::new(2.0, 0.0);
    for spec in ["Q(sqrt=-1)", "Fq(T)?q=3"] {
        let field = parse_field_spec(spec)?.field;
        println!("{field}");
        for place in enumerate_places(&field, 13)? {
            println!(
                "  {:<16} q_v = {:<4} factor at 2 = {:.10}",
                place.to_string(),
                place.residual_cardinality,
                local_euler_factor(&field, &place, s)?.re
            );
        }
        for bound in [10, 100, 1000] {
            let check = euler_consistency_check(&field, s, bound)?;
            println!(
                "  N = {bound:>4}: gap {:.3e}, envelope {:.3e}, pass {}",
                check.gap, check.tail_bound, check.pass
            );
        }
    }
    Ok(())
}
