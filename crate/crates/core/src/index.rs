//! The Mostar index and per-edge contributions.

use serde::Serialize;

use crate::distance::{distances, transmissions, DistanceMatrix};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Distance split of one edge `uv`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeReport {
    pub u: usize,
    pub v: usize,
    /// Vertices strictly closer to `u`.
    pub n_u: usize,
    /// Vertices strictly closer to `v`.
    pub n_v: usize,
    /// Vertices at equal distance from both ends.
    pub eq: usize,
    /// Contribution `|n_u - n_v|`.
    pub phi: usize,
}

fn report_from_rows(d: &DistanceMatrix, u: usize, v: usize) -> EdgeReport {
    let (du, dv) = (d.row(u), d.row(v));
    let (mut n_u, mut n_v) = (0, 0);
    for (a, b) in du.iter().zip(dv) {
        match a.cmp(b) {
            std::cmp::Ordering::Less => n_u += 1,
            std::cmp::Ordering::Greater => n_v += 1,
            std::cmp::Ordering::Equal => {}
        }
    }
    EdgeReport {
        u,
        v,
        n_u,
        n_v,
        eq: d.order() - n_u - n_v,
        phi: n_u.abs_diff(n_v),
    }
}

/// Closer/equidistant counts for the edge `uv`, by comparing the two
/// distance rows directly.
pub fn edge_report(g: &Graph, u: usize, v: usize) -> Result<EdgeReport> {
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge(u, v));
    }
    let d = distances(g);
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(report_from_rows(&d, u, v))
}

/// Reports for every edge, in [`Graph::edges`] order.
pub fn edge_reports(g: &Graph) -> Result<Vec<EdgeReport>> {
    let d = distances(g);
    if !d.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(g.edges().map(|(u, v)| report_from_rows(&d, u, v)).collect())
}

/// `Mo(G)`: the sum of `|n_u - n_v|` over all edges.
///
/// Every vertex is at distance difference -1, 0 or +1 from the ends of an
/// edge, so `n_v - n_u = Tr(u) - Tr(v)` and the contribution of each edge is
/// the transmission gap across it.
pub fn mostar_index(g: &Graph) -> Result<u64> {
    let tr = transmissions(g)?;
    let mut total = 0;
    for u in 0..g.order() {
        for (w, &word) in g.row(u).iter().enumerate() {
            let mut rest = word;
            while rest != 0 {
                let v = w * 64 + rest.trailing_zeros() as usize;
                rest &= rest - 1;
                total += tr[u].abs_diff(tr[v]);
            }
        }
    }
    // every edge was visited from both ends
    Ok(total / 2)
}

/// Per-edge contributions via the transmission identity, in edge order.
pub fn edge_contributions(g: &Graph) -> Result<Vec<u64>> {
    let tr = transmissions(g)?;
    Ok(g.edges().map(|(u, v)| tr[u].abs_diff(tr[v])).collect())
}

/// True iff every edge has zero contribution.
pub fn is_distance_balanced(g: &Graph) -> Result<bool> {
    let tr = transmissions(g)?;
    Ok(g.edges().all(|(u, v)| tr[u] == tr[v]))
}

/// Distinct transmission values of a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TransmissionBand {
    /// Sorted, deduplicated.
    pub values: Vec<u64>,
    /// Exactly two values `k` and `k + 1`.
    pub consecutive_pair: bool,
}

pub fn transmission_band(g: &Graph) -> Result<TransmissionBand> {
    let mut values = transmissions(g)?;
    values.sort_unstable();
    values.dedup();
    let consecutive_pair = values.len() == 2 && values[1] == values[0] + 1;
    Ok(TransmissionBand {
        values,
        consecutive_pair,
    })
}
