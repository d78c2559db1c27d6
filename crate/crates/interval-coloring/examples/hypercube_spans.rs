//! Hypercube span statistics: how far apart colors can sit on edges at a
//! given edge distance, the recurrence bounding their growth, and the
//! resulting ceiling n(n+1)/2 on hypercube colorings.
//!
//! Run with: cargo run --release --example hypercube_spans

use std::sync::Arc;

use interval_coloring::construct::{hypercube_minimal_coloring, hypercube_widest_coloring};
use interval_coloring::search::{compute_w_max, exists_interval_t, SearchConfig, ValueOutcome};
use interval_coloring::verify::{check_span_recurrence, hypercube_neighbor_witnesses, span_table};
use interval_coloring::{FamilySpec, Result};

fn main() -> Result<()> {
    // Span tables of the minimal and widest Q_3 colorings.
    for built in [
        hypercube_minimal_coloring(3)?,
        hypercube_widest_coloring(3)?,
    ] {
        let tbl = span_table(&built.coloring)?;
        println!(
            "Q_3 with t = {}: sp = {:?}, recurrence holds: {}",
            built.claimed_t,
            tbl.sp,
            check_span_recurrence(&tbl)
        );
    }

    // A widest coloring found by search: sp_0 = n-1 always, and
    // sp_{n-1} <= n(n+1)/2 - 1 caps the whole table.
    let q3 = Arc::new(FamilySpec::Hypercube(3).realize()?);
    let cfg = SearchConfig::default();
    let w_max = compute_w_max(&q3, &cfg)?;
    if let ValueOutcome::Value(t) = w_max.outcome {
        let tbl = span_table(&w_max.witness.unwrap())?;
        println!("search-found Q_3 coloring at t = {t}: sp = {:?}", tbl.sp);
        assert_eq!(tbl.sp[0], 2);
        assert!(tbl.sp[2] <= 5);
    }

    // No interval 7-coloring of Q_3 exists: the ceiling is tight at n = 3.
    let outcome = exists_interval_t(&q3, 7, &cfg)?;
    println!(
        "Q_3 at t = 7: exhausted = {} ({} nodes)",
        outcome.is_exhausted(),
        outcome.nodes_explored
    );

    // The witness structure behind the recurrence: for vertices at distance
    // k, k neighbors of the far vertex step one closer.
    let witnesses = hypercube_neighbor_witnesses(3, 0b000, 0b111);
    println!("witnesses for 000 -> 111: {witnesses:?} (one bit flipped each)");

    // Q_4 span table from the widest construction.
    let q4 = hypercube_widest_coloring(4)?;
    let tbl = span_table(&q4.coloring)?;
    println!(
        "Q_4 with t = {}: sp = {:?}, recurrence holds: {}",
        q4.claimed_t,
        tbl.sp,
        check_span_recurrence(&tbl)
    );
    Ok(())
}
