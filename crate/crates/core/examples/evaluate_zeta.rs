//! Evaluate `zeta_k`, the Gamma factor and the completed `Z_k` for a few
//! global fields.
//!
//! ```bash
//! cargo run --example evaluate_zeta
//! ```

use global_zeta::field::parse_field_spec;
use global_zeta::{completed_zeta, Complex64};

fn show(z: Complex64) -> String {
    format!("{:.12}{:+.12}i", z.re, z.im)
}

fn main() -> global_zeta::Result<()> {
    let points = [
        Complex64::new(2.0, 0.0),
        Complex64::new(-1.0, 0.0),
        Complex64::new(0.5, 6.0),
    ];
    for spec in [
        "Q",
        "Q(sqrt=-1)",
        "Q(sqrt=5)",
        "Fq(T)?q=5",
        "curve?q=5&L=1,3,5",
    ] {
        let field = parse_field_spec(spec)?.field;
        println!("{field}");
        for s in points {
            let r = completed_zeta(&field, s)?;
            let note = match r.regularization {
                Some(reg) => format!("  (regularized at the apparent pole {})", reg.pole),
                None => String::new(),
            };
            println!(
                "  s = {:<8} zeta = {}  Z = {}{note}",
                s.to_string(),
                show(r.zeta_value),
                show(r.completed_value)
            );
        }
    }
    Ok(())
}
