use rayon::prelude::*;
use serde::Serialize;

use super::histogram::{Histogram, StatsRow};
use crate::enumerate::{generate_connected_up_to, GraphStream, ENUM_MAX_ORDER};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::index::mostar_index;

/// Mostar index of every graph of a stream, in stream order.
pub fn stream_indices(stream: &GraphStream) -> Result<Vec<u64>> {
    stream.graphs().par_iter().map(mostar_index).collect()
}

pub fn mo_histogram(stream: &GraphStream) -> Result<Histogram> {
    if stream.is_empty() {
        return Err(Error::EmptyStream);
    }
    Ok(stream_indices(stream)?.into_iter().collect())
}

pub fn stats_row(stream: &GraphStream) -> Result<StatsRow> {
    StatsRow::from_histogram(stream.order(), &mo_histogram(stream)?)
}

/// One order of a census: its graphs and their indices.
#[derive(Clone, Debug)]
pub struct CensusLevel {
    pub stream: GraphStream,
    pub mo: Vec<u64>,
}

impl CensusLevel {
    pub fn order(&self) -> usize {
        self.stream.order()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Graph, u64)> {
        self.stream.iter().zip(self.mo.iter().copied())
    }

    pub fn histogram(&self) -> Histogram {
        self.mo.iter().copied().collect()
    }
}

/// All connected graphs of orders `1..=n_max` with their Mostar indices.
#[derive(Clone, Debug)]
pub struct Census {
    levels: Vec<CensusLevel>,
}

impl Census {
    pub fn generate(n_max: usize) -> Result<Self> {
        Census::from_streams(generate_connected_up_to(n_max)?)
    }

    /// Census over streams of consecutive orders `1..=k`, generated or read
    /// from elsewhere.
    pub fn from_streams(streams: Vec<GraphStream>) -> Result<Self> {
        for (i, s) in streams.iter().enumerate() {
            if s.order() != i + 1 {
                return Err(Error::MixedOrder(i + 1, s.order()));
            }
        }
        let levels = streams
            .into_iter()
            .map(|stream| {
                let mo = stream_indices(&stream)?;
                Ok(CensusLevel { stream, mo })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Census { levels })
    }

    pub fn n_max(&self) -> usize {
        self.levels.len()
    }

    pub fn level(&self, n: usize) -> Option<&CensusLevel> {
        n.checked_sub(1).and_then(|i| self.levels.get(i))
    }

    pub fn levels(&self) -> &[CensusLevel] {
        &self.levels
    }

    fn require(&self, n: usize) -> Result<&CensusLevel> {
        self.level(n)
            .ok_or_else(|| Error::out_of_range("census order", n, self.n_max()))
    }

    pub fn histogram(&self, n: usize) -> Result<Histogram> {
        Ok(self.require(n)?.histogram())
    }

    pub fn stats_row(&self, n: usize) -> Result<StatsRow> {
        StatsRow::from_histogram(n, &self.histogram(n)?)
    }

    /// Counts of graphs by `(Mo, n)` for `2 <= Mo <= mo_max`, `3 <= n <= n_max`.
    pub fn realizer_table(&self, mo_max: u64) -> RealizerTable {
        let orders: Vec<usize> = (3..=self.n_max()).collect();
        let values: Vec<u64> = (2..=mo_max).collect();
        let hists: Vec<Histogram> = orders.iter().map(|&n| self.levels[n - 1].histogram()).collect();
        let counts = values
            .iter()
            .map(|&p| hists.iter().map(|h| h.get(p)).collect())
            .collect();
        RealizerTable {
            orders,
            values,
            counts,
        }
    }

    /// Least order with a graph of index `p`.
    pub fn first_realizer_order(&self, p: u64) -> FirstRealizer {
        self.levels
            .iter()
            .find(|l| l.mo.contains(&p))
            .map_or(FirstRealizer::NotFoundBelowCap, |l| FirstRealizer::Order(l.order()))
    }
}

/// Count matrix: realizing graphs per index value (rows) and order (columns).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RealizerTable {
    pub orders: Vec<usize>,
    pub values: Vec<u64>,
    /// `counts[i][j]`: graphs of order `orders[j]` with index `values[i]`.
    pub counts: Vec<Vec<u64>>,
}

impl RealizerTable {
    pub fn get(&self, mo: u64, n: usize) -> Option<u64> {
        let i = self.values.iter().position(|&v| v == mo)?;
        let j = self.orders.iter().position(|&o| o == n)?;
        Some(self.counts[i][j])
    }

    /// Rows of cells, zero rendered as `-`, preceded by a header row.
    pub fn cells(&self) -> Vec<Vec<String>> {
        let mut out = Vec::with_capacity(self.values.len() + 1);
        let mut header = vec!["Mo\\n".to_string()];
        header.extend(self.orders.iter().map(|n| n.to_string()));
        out.push(header);
        for (v, row) in self.values.iter().zip(&self.counts) {
            let mut line = vec![v.to_string()];
            line.extend(row.iter().map(|&c| if c == 0 { "-".to_string() } else { c.to_string() }));
            out.push(line);
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FirstRealizer {
    Order(usize),
    NotFoundBelowCap,
}

fn check_cap(n_max: usize) -> Result<()> {
    if n_max > ENUM_MAX_ORDER || n_max == 0 {
        return Err(Error::out_of_range("order cap", n_max, ENUM_MAX_ORDER));
    }
    Ok(())
}

/// Enumerate orders `3..=n_max` and tabulate index counts for `2..=mo_max`.
pub fn realizer_table(n_max: usize, mo_max: u64) -> Result<RealizerTable> {
    check_cap(n_max)?;
    Ok(Census::generate(n_max)?.realizer_table(mo_max))
}

/// Smallest order `n <= n_max` of a connected graph with index `p >= 2`.
pub fn first_realizer_order(p: u64, n_max: usize) -> Result<FirstRealizer> {
    check_cap(n_max)?;
    if p < 2 {
        return Err(Error::BadParams(format!("first realizer order is defined for p >= 2, got {p}")));
    }
    Ok(Census::generate(n_max)?.first_realizer_order(p))
}
