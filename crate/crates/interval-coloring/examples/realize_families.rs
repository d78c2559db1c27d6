//! Build the graph families and query their basic metrics.
//!
//! Run with: cargo run --example realize_families

use interval_coloring::{FamilySpec, Result};

fn main() -> Result<()> {
    let specs = [
        FamilySpec::Path(6),
        FamilySpec::Cycle(6),
        FamilySpec::Complete(5),
        FamilySpec::CompleteBipartite(2, 3),
        FamilySpec::Hypercube(4),
        FamilySpec::Grid(vec![3, 4]),
        FamilySpec::Grid(vec![2, 3, 4]),
        FamilySpec::Cylinder(3, 5),
        FamilySpec::Torus(4, 6),
    ];

    println!(
        "{:<12} {:>5} {:>5} {:>4} {:>5} {:>9}",
        "family", "|V|", "|E|", "max", "diam", "bipartite"
    );
    for spec in specs {
        let g = spec.realize()?;
        println!(
            "{:<12} {:>5} {:>5} {:>4} {:>5} {:>9}",
            spec.to_string(),
            g.vertex_count(),
            g.edge_count(),
            g.max_degree(),
            g.diameter()?,
            g.is_bipartite()
        );
    }

    // The product operator composes: a torus is a product of two cycles.
    let torus = FamilySpec::Product(
        Box::new(FamilySpec::Cycle(4)),
        Box::new(FamilySpec::Cycle(6)),
    );
    assert_eq!(torus.realize()?, FamilySpec::Torus(4, 6).realize()?);
    println!("\nC_4 x C_6 equals T(4,6) edge-for-edge");

    // Edge-list text round-trips exactly.
    let g = FamilySpec::Cylinder(2, 3).realize()?;
    let text = g.to_edge_list_string();
    println!("\nC(2,3) as edge-list text:\n{text}");
    assert_eq!(interval_coloring::Graph::from_edge_list_str(&text)?, g);
    Ok(())
}
