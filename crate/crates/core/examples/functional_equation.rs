//! Check `Z_k(1 - s) = beta^(2s - 1) Z_k(s)` at single points and over a
//! grid, then render the sweep as CSV.
//!
//! ```bash
//! cargo run --example functional_equation
//! ```

use global_zeta::cli::render::{render_report, Format};
use global_zeta::field::parse_field_spec;
use global_zeta::verify::{check_point, sweep, Grid, DEFAULT_TOLERANCE};
use global_zeta::Complex64;

fn main() -> global_zeta::Result<()> {
    let field = parse_field_spec("Q(sqrt=-3)")?.field;
    for s in [
        Complex64::new(2.0, 0.0),
        Complex64::new(0.3, 21.0),
        Complex64::new(1.0, 0.0),
    ] {
        let r = check_point(&field, s, DEFAULT_TOLERANCE)?;
        println!(
            "s = {s}: {} (residual {:.2e})",
            r.status, r.relative_residual
        );
    }

    let grid: Grid = "0.1:0.9:3,0:20:3".parse()?;
    let result = sweep(&field, &grid, DEFAULT_TOLERANCE)?;
    print!(
        "{}",
        render_report(&result.reports, &result.summary, Format::Csv)
    );
    Ok(())
}
