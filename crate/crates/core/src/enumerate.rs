//! Isomorph-free generation of connected graphs by vertex augmentation.
//!
//! Level `n` is built from the connected graphs of level `n - 1`: every
//! parent gets a new vertex joined to each nonempty subset of its vertices,
//! and children are deduplicated by canonical form. Connected parents are
//! enough because every connected graph on two or more vertices has a vertex
//! whose removal leaves it connected (a leaf of any spanning tree).

use std::collections::HashSet;

use rayon::prelude::*;

use crate::canon::{canonical_key, rows_from_key};
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order [`generate_connected`] accepts.
pub const ENUM_MAX_ORDER: usize = 10;

/// Graphs of one order, one per isomorphism class when generated here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphStream {
    order: usize,
    graphs: Vec<Graph>,
}

impl GraphStream {
    /// Wrap externally produced graphs (e.g. a decoded graph6 file); all must
    /// share one order.
    pub fn from_graphs(graphs: Vec<Graph>) -> Result<Self> {
        let order = graphs.first().ok_or(Error::EmptyStream)?.order();
        if let Some(g) = graphs.iter().find(|g| g.order() != order) {
            return Err(Error::MixedOrder(order, g.order()));
        }
        Ok(GraphStream { order, graphs })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn len(&self) -> usize {
        self.graphs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.graphs.is_empty()
    }

    pub fn graphs(&self) -> &[Graph] {
        &self.graphs
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Graph> {
        self.graphs.iter()
    }

    pub fn into_graphs(self) -> Vec<Graph> {
        self.graphs
    }
}

impl<'a> IntoIterator for &'a GraphStream {
    type Item = &'a Graph;
    type IntoIter = std::slice::Iter<'a, Graph>;

    fn into_iter(self) -> Self::IntoIter {
        self.graphs.iter()
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > ENUM_MAX_ORDER {
        return Err(Error::out_of_range("enumeration order", n, ENUM_MAX_ORDER));
    }
    Ok(())
}

fn extend_level(parents: &[u64], parent_order: usize) -> Vec<u64> {
    let new = parent_order;
    let children = parents
        .par_iter()
        .fold(HashSet::new, |mut seen: HashSet<u64>, &key| {
            let mut rows = rows_from_key(parent_order, key);
            rows.push(0);
            for subset in 1u64..1 << parent_order {
                let mut s = subset;
                while s != 0 {
                    rows[s.trailing_zeros() as usize] |= 1 << new;
                    s &= s - 1;
                }
                rows[new] = subset;
                seen.insert(canonical_key(&rows));
                let mut s = subset;
                while s != 0 {
                    rows[s.trailing_zeros() as usize] &= !(1 << new);
                    s &= s - 1;
                }
            }
            seen
        })
        .reduce(HashSet::new, |a, b| {
            let (mut big, small) = if a.len() >= b.len() { (a, b) } else { (b, a) };
            big.extend(small);
            big
        });
    let mut keys: Vec<u64> = children.into_iter().collect();
    keys.sort_unstable();
    keys
}

/// Canonical keys of the connected graphs of every order `1..=n_max`,
/// each level sorted.
pub(crate) fn connected_key_levels(n_max: usize) -> Result<Vec<Vec<u64>>> {
    check_order(n_max)?;
    let mut levels = vec![vec![0u64]];
    for order in 1..n_max {
        let next = extend_level(&levels[order - 1], order);
        levels.push(next);
    }
    Ok(levels)
}

fn stream_from_keys(n: usize, keys: &[u64]) -> GraphStream {
    GraphStream {
        order: n,
        graphs: keys.iter().map(|&k| Graph::from_word_rows(&rows_from_key(n, k))).collect(),
    }
}

/// Every connected graph of order `n` exactly once, in canonical form,
/// sorted by certificate.
pub fn generate_connected(n: usize) -> Result<GraphStream> {
    let levels = connected_key_levels(n)?;
    Ok(stream_from_keys(n, &levels[n - 1]))
}

/// Streams for every order `1..=n_max`.
pub fn generate_connected_up_to(n_max: usize) -> Result<Vec<GraphStream>> {
    let levels = connected_key_levels(n_max)?;
    Ok(levels
        .iter()
        .enumerate()
        .map(|(i, keys)| stream_from_keys(i + 1, keys))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_certificate;

    #[test]
    fn small_census() {
        let counts: Vec<usize> = generate_connected_up_to(6)
            .unwrap()
            .iter()
            .map(GraphStream::len)
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn streams_are_connected_canonical_and_sorted() {
        let s = generate_connected(5).unwrap();
        let certs: Vec<_> = s.iter().map(|g| canonical_certificate(g).unwrap()).collect();
        assert!(certs.windows(2).all(|w| w[0] < w[1]));
        assert!(s.iter().all(Graph::is_connected));
    }

    #[test]
    fn out_of_range() {
        assert!(matches!(generate_connected(0), Err(Error::OutOfRange { .. })));
        assert!(matches!(generate_connected(11), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn external_streams() {
        assert_eq!(GraphStream::from_graphs(vec![]), Err(Error::EmptyStream));
        let mixed = vec![Graph::empty(2).unwrap(), Graph::empty(3).unwrap()];
        assert_eq!(GraphStream::from_graphs(mixed), Err(Error::MixedOrder(2, 3)));
    }
}
