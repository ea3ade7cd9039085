//! Benchmark inputs shared by the criterion targets.

use mostar_core::{witness, Graph};

/// Witness graphs for a spread of targets, from a handful of vertices to
/// several hundred.
pub fn witness_graphs() -> Vec<(u64, Graph)> {
    [7u64, 64, 401, 998, 1999]
        .into_iter()
        .map(|p| (p, witness(p).expect("targets are realizable").graph))
        .collect()
}
