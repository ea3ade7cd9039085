//! Aggregate statistics over graph streams and exhaustive claim checks.

mod census;
mod histogram;
mod verify;

pub use census::{
    first_realizer_order, mo_histogram, realizer_table, stats_row, stream_indices, Census, CensusLevel,
    FirstRealizer, RealizerTable,
};
pub use histogram::{render_3dp, Histogram, ParityView, StatsRow};
pub use verify::{
    split_maximum, verify_suite, ClaimKind, ClaimResult, Suite, VerificationReport, FORMULA_MAX_ORDER,
};
