//! The adelic covolume: `sqrt|D|` for number fields, `q^(g-1)` for function
//! fields, printed exactly where it is rational.
//!
//! ```bash
//! cargo run --example covolume
//! ```

use global_zeta::covolume;
use global_zeta::field::parse_field_spec;

fn main() -> global_zeta::Result<()> {
    for spec in [
        "Q",
        "Q(sqrt=-1)",
        "Q(sqrt=-3)",
        "Q(sqrt=5)",
        "Q(sqrt=2)",
        "Fq(T)?q=4",
        "curve?q=5&L=1,3,5",
        "curve?q=2&L=1,0,0,0,4",
    ] {
        let field = parse_field_spec(spec)?.field;
        let beta = covolume(&field);
        println!(
            "{:<24} beta = {:<10} ~ {:.15}",
            field.to_string(),
            beta.to_string(),
            beta.value()
        );
    }
    Ok(())
}
