//! Minimal and widest cylinder colorings across both parities.
//!
//! Run with: cargo run --example cylinder_colorings

use interval_coloring::construct::{cylinder_minimal, cylinder_widest};
use interval_coloring::{verify_interval, Result};

fn main() -> Result<()> {
    // Minimal colorings of odd-circumference cylinders: four colors suffice
    // for an even number of rows, six for odd and no fewer (the search
    // example proves the lower part).
    for (m, q) in [(4, 5), (6, 7), (3, 3), (5, 5), (9, 11)] {
        let built = cylinder_minimal(m, q)?;
        let report = verify_interval(&built.coloring, built.claimed_t);
        println!(
            "C({m},{q}) minimal: t = {} ({} rows -> {}), verdict {:?}",
            built.claimed_t,
            m,
            if m % 2 == 0 { "even" } else { "odd" },
            report.verdict
        );
    }

    println!();

    // Widest constructions for even row counts: 4m + 2n - 2 colors on
    // C(2m, 2n) and 4m + 2n - 1 on C(2m, 2n+1).
    for (rows, cols) in [(2, 4), (2, 3), (4, 5), (6, 8), (8, 9)] {
        let built = cylinder_widest(rows, cols)?;
        let report = verify_interval(&built.coloring, built.claimed_t);
        println!(
            "C({rows},{cols}) widest: t = {}, verdict {:?}",
            built.claimed_t, report.verdict
        );
    }

    // The two-row case realizes the known exact value n + 2.
    let two_rows = cylinder_widest(2, 7)?;
    assert_eq!(two_rows.claimed_t, 9);
    println!("\nC(2,7) widest achieves the exact value 7 + 2 = 9");
    Ok(())
}
