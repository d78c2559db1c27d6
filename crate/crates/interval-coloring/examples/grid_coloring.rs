//! Construct the widest grid coloring and inspect it row by row.
//!
//! Run with: cargo run --example grid_coloring

use interval_coloring::construct::grid_widest;
use interval_coloring::{verify_interval, Certificate, Result};

fn main() -> Result<()> {
    let (m, n) = (4, 5);
    let built = grid_widest(m, n)?;
    println!(
        "G({m},{n}): interval {}-coloring of {} edges",
        built.claimed_t,
        built.coloring.graph().edge_count()
    );

    // Horizontal edge colors per row, then vertical colors per row gap.
    let g = built.coloring.graph();
    let at = |i: usize, j: usize| i * n + j;
    for i in 0..m {
        let row: Vec<String> = (0..n - 1)
            .map(|j| {
                let e = g.edge_index(at(i, j), at(i, j + 1)).unwrap();
                built.coloring.color(e).to_string()
            })
            .collect();
        println!("row {i} horizontals: {}", row.join(" "));
    }
    for i in 0..m - 1 {
        let row: Vec<String> = (0..n)
            .map(|j| {
                let e = g.edge_index(at(i, j), at(i + 1, j)).unwrap();
                built.coloring.color(e).to_string()
            })
            .collect();
        println!("gap {i} verticals:   {}", row.join(" "));
    }

    let report = verify_interval(&built.coloring, built.claimed_t);
    println!("verifier verdict: {:?}", report.verdict);

    let cert = Certificate::from_coloring(&built.coloring, built.claimed_t);
    println!("\ncertificate:\n{}", cert.to_json()?);
    Ok(())
}
