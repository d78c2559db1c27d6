//! Exact backtracking search: least/greatest color counts, per-t profiles,
//! and impossibility proofs on small graphs.
//!
//! Run with: cargo run --release --example exact_search

use std::sync::Arc;

use interval_coloring::search::{
    compute_w_max, compute_w_min, exists_interval_t, spectrum_profile, SearchConfig, ValueOutcome,
};
use interval_coloring::{FamilySpec, Result};

fn main() -> Result<()> {
    let cfg = SearchConfig::default();
    let show = |outcome: &ValueOutcome| match outcome {
        ValueOutcome::Value(t) => t.to_string(),
        ValueOutcome::NotColorable => "none".into(),
        ValueOutcome::Inconclusive { undecided_t } => format!("? (stuck at {undecided_t})"),
    };

    println!("{:<10} {:>5} {:>5} {:>12}", "graph", "w", "W", "nodes");
    for spec in [
        FamilySpec::Hypercube(2),
        FamilySpec::Hypercube(3),
        FamilySpec::Cylinder(2, 5),
        FamilySpec::CompleteBipartite(2, 3),
        FamilySpec::Cycle(3),
    ] {
        let g = Arc::new(spec.realize()?);
        let w = compute_w_min(&g, &cfg)?;
        let w_max = compute_w_max(&g, &cfg)?;
        println!(
            "{:<10} {:>5} {:>5} {:>12}",
            spec.to_string(),
            show(&w.outcome),
            show(&w_max.outcome),
            w.nodes_explored + w_max.nodes_explored
        );
    }

    // Full spectrum of C_4: every t between w and W works, nothing above.
    let c4 = Arc::new(FamilySpec::Cycle(4).realize()?);
    let profile = spectrum_profile(&c4, 2, 4, &cfg)?;
    println!("\nC_4 profile: {:?}", profile.decisions);

    // The odd cylinder C(3,3) needs six colors: 4 and 5 are exhausted
    // (complete proofs of nonexistence), 6 is found.
    let c33 = Arc::new(FamilySpec::Cylinder(3, 3).realize()?);
    for t in 4..=6 {
        let outcome = exists_interval_t(&c33, t, &cfg)?;
        println!(
            "C(3,3) at t={t}: {:?} after {} nodes",
            match outcome.status {
                interval_coloring::SearchStatus::Found(_) => "found",
                interval_coloring::SearchStatus::Exhausted => "exhausted",
                interval_coloring::SearchStatus::BudgetExceeded => "budget exceeded",
            },
            outcome.nodes_explored
        );
    }
    Ok(())
}
