//! Interval edge-colorings of Cartesian-product graph families.
//!
//! An edge-coloring with colors 1..=t is an *interval t-coloring* when every
//! color is used and the colors at each vertex are distinct and consecutive.
//! This crate builds such colorings for grids, cylinders, tori, hypercubes
//! and products of regular graphs from explicit formulas, verifies arbitrary
//! colorings, evaluates the known closed-form bounds, and decides small
//! instances exactly with a backtracking search.
//!
//! ```
//! use interval_coloring::construct::grid_widest;
//! use interval_coloring::search::{compute_w_max, SearchConfig, ValueOutcome};
//! use interval_coloring::{verify_interval, FamilySpec};
//! use std::sync::Arc;
//!
//! // A 3x4 grid colored with the maximum 2(3+4-3) = 8 colors.
//! let built = grid_widest(3, 4)?;
//! assert_eq!(built.claimed_t, 8);
//! assert!(verify_interval(&built.coloring, 8).is_valid());
//!
//! // The exact search proves the 3-cube takes at most 6 colors.
//! let q3 = Arc::new(FamilySpec::Hypercube(3).realize()?);
//! let widest = compute_w_max(&q3, &SearchConfig::default())?;
//! assert_eq!(widest.outcome, ValueOutcome::Value(6));
//! # Ok::<(), interval_coloring::Error>(())
//! ```
//!
//! The `examples/` directory demonstrates each capability end to end; the
//! `interval-coloring` binary exposes the same operations as subcommands.

pub mod bounds;
pub mod certificate;
pub mod cli;
pub mod construct;
pub mod error;
pub mod family;
pub mod graph;
pub mod search;
pub mod verify;

pub use certificate::Certificate;
pub use error::{Error, Result};
pub use family::FamilySpec;
pub use graph::{cartesian_product, Graph};
pub use search::{SearchConfig, SearchOutcome, SearchStatus};
pub use verify::{verify_interval, verify_connected_shortcut, EdgeColoring, SpanTable, VerifyReport};
