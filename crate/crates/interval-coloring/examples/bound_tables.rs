//! Closed-form bound tables: exact values, all applicable lower bounds with
//! their sources, diameter-based ceilings, and the planar-product
//! classifier.
//!
//! Run with: cargo run --example bound_tables

use interval_coloring::bounds::{family_values, planar_product_class, upper_bound};
use interval_coloring::{FamilySpec, Result};

fn main() -> Result<()> {
    let specs = [
        FamilySpec::Hypercube(5),
        FamilySpec::Complete(8),
        FamilySpec::CompleteBipartite(2, 3),
        FamilySpec::Grid(vec![3, 4]),
        FamilySpec::Grid(vec![3, 3, 2]),
        FamilySpec::Cylinder(2, 5),
        FamilySpec::Cylinder(4, 8),
        FamilySpec::Cylinder(8, 4),
        FamilySpec::Torus(4, 4),
        FamilySpec::Torus(6, 3),
        FamilySpec::Cycle(7),
    ];
    for spec in &specs {
        let report = family_values(spec)?;
        println!("== {}", report.family_label);
        if let Some(reason) = &report.not_colorable {
            println!("   not interval colorable: {reason}");
            continue;
        }
        if let Some(w) = &report.w_exact {
            println!("   w  = {:<4} [{}]", w.value, w.source);
        }
        if let Some(w) = &report.w_max_exact {
            println!("   W  = {:<4} [{}]", w.value, w.source);
        }
        for b in &report.lower_bounds {
            println!("   W >= {:<4} [{}]", b.value, b.source);
        }
        for b in &report.upper_bounds {
            println!("   W <= {:<4} [{}]", b.value, b.source);
        }
    }

    // C(4,8) versus C(8,4): the stacked bound wins when rows outnumber the
    // circumference and the pair coincides at the square case.
    println!("\nupper bound from a realized graph (diameter-based):");
    let product = FamilySpec::Product(
        Box::new(FamilySpec::Complete(4)),
        Box::new(FamilySpec::Cycle(4)),
    );
    let g = product.realize()?;
    let ub = upper_bound(&g)?;
    println!("   K_4 x C_4: W <= {} [{}]", ub.value, ub.source);

    println!("\nplanar-product classification:");
    for (a, b) in [
        (FamilySpec::Path(3), FamilySpec::Path(5)),
        (FamilySpec::Path(3), FamilySpec::Cycle(5)),
        (FamilySpec::Cycle(4), FamilySpec::Cycle(4)),
        (FamilySpec::Path(2), FamilySpec::Cycle(9)),
    ] {
        let class = planar_product_class(&a, &b)?;
        match class.guarantee() {
            Some(g) => println!(
                "   {a} x {b}: {class:?}, interval colorable with w <= {}",
                g.w_at_most
            ),
            None => println!("   {a} x {b}: {class:?}"),
        }
    }
    Ok(())
}
