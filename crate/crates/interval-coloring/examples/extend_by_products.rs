//! Grow wide interval colorings by extending a regular graph's coloring
//! along a path or around an even cycle, and climb the hypercube ladder.
//!
//! Run with: cargo run --example extend_by_products

use interval_coloring::construct::{
    hypercube_widest_coloring, product_with_even_cycle, product_with_path,
    widest_even_cycle_coloring,
};
use interval_coloring::{verify_interval, Result};

fn main() -> Result<()> {
    // Seed: the widest 3-coloring of C_4 (2-regular).
    let seed = widest_even_cycle_coloring(2)?;
    let g = seed.coloring.graph().clone();
    println!("seed: C_4 with t = {}", seed.claimed_t);

    // Extending along P_m adds (m-1)(r+1) colors.
    for m in 2..=5 {
        let built = product_with_path(&g, &seed.coloring, 2, m)?;
        let report = verify_interval(&built.coloring, built.claimed_t);
        println!(
            "C_4 x P_{m}: t = {:>2}, verdict {:?}",
            built.claimed_t, report.verdict
        );
    }

    // Extending around C_2n adds n(r+1)+1 colors; C_4 x C_4 is the torus
    // T(4,4) and witnesses a 10-coloring.
    for n in 2..=4 {
        let built = product_with_even_cycle(&g, &seed.coloring, 2, n)?;
        let report = verify_interval(&built.coloring, built.claimed_t);
        println!(
            "C_4 x C_{}: t = {:>2}, verdict {:?}",
            2 * n,
            built.claimed_t,
            report.verdict
        );
    }

    // Iterating the path extension over K_2 factors yields hypercube
    // colorings with n(n+1)/2 colors, the widest possible.
    println!();
    for n in 1..=5 {
        let built = hypercube_widest_coloring(n)?;
        let report = verify_interval(&built.coloring, built.claimed_t);
        println!(
            "Q_{n}: t = {:>2} = {n}({n}+1)/2, verdict {:?}",
            built.claimed_t, report.verdict
        );
    }
    Ok(())
}
