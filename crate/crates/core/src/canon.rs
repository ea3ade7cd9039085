//! Canonical labeling and isomorphism certificates.
//!
//! The search is the usual individualize-and-refine tree: the root partition
//! is refined to an equitable one, then each non-discrete node branches on
//! the vertices of its first non-singleton cell. Every leaf is a labeling and
//! the canonical form is the leaf whose relabeled upper triangle (graph6
//! column order) is lexicographically least.
//!
//! Two leaves with identical relabeled graphs give an automorphism. That
//! prunes the tree in two ways: the remaining subtree of the later leaf is
//! abandoned (it is an image of an already explored subtree), and on the
//! first path, children in the same orbit of the stabilizer of the path
//! prefix are skipped.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order handled by the canonical labeler (one word per row).
pub const CANON_MAX_ORDER: usize = 62;

const W: usize = 64;

/// Canonical byte string of an isomorphism class: the order, then the
/// canonically relabeled upper triangle packed most significant bit first.
///
/// Certificates of equal order compare like their bit strings.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Certificate(Vec<u8>);

impl Certificate {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn order(&self) -> usize {
        self.0[0] as usize
    }
}

impl fmt::Debug for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Certificate(")?;
        for b in &self.0 {
            write!(f, "{b:02x}")?;
        }
        write!(f, ")")
    }
}

#[derive(Clone, Copy)]
struct Partition {
    cells: [u64; W],
    len: usize,
}

#[derive(Clone, Copy)]
struct Leaf {
    lab: [u8; W],
    cols: [u64; W],
    path: [u8; W],
    depth: usize,
}

struct Search<'a> {
    n: usize,
    rows: &'a [u64],
    first: Option<Leaf>,
    best: Option<Leaf>,
    autos: Vec<[u8; W]>,
    path: [u8; W],
}

#[inline]
fn bits(mut x: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let b = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(b)
        }
    })
}

impl<'a> Search<'a> {
    fn new(rows: &'a [u64]) -> Self {
        Search {
            n: rows.len(),
            rows,
            first: None,
            best: None,
            autos: Vec::new(),
            path: [0; W],
        }
    }

    /// Split cells against splitter sets until every cell is equitable with
    /// respect to every cell. Pieces of a split cell stay in place, ordered
    /// by their neighbor count into the splitter.
    fn refine(&self, part: &mut Partition, queue: &mut Vec<u64>) {
        let mut scratch = [(0u32, 0u8); W];
        while let Some(splitter) = queue.pop() {
            let mut i = 0;
            while i < part.len {
                let cell = part.cells[i];
                if cell & (cell - 1) == 0 {
                    i += 1;
                    continue;
                }
                let mut k = 0;
                let (mut lo, mut hi) = (u32::MAX, 0);
                for v in bits(cell) {
                    let c = (self.rows[v] & splitter).count_ones();
                    lo = lo.min(c);
                    hi = hi.max(c);
                    scratch[k] = (c, v as u8);
                    k += 1;
                }
                if lo == hi {
                    i += 1;
                    continue;
                }
                scratch[..k].sort_unstable();
                let mut pieces = [0u64; W];
                let mut np = 0;
                let mut prev = u32::MAX;
                for &(c, v) in &scratch[..k] {
                    if c != prev {
                        np += 1;
                        prev = c;
                    }
                    pieces[np - 1] |= 1 << v;
                }
                part.cells.copy_within(i + 1..part.len, i + np);
                part.cells[i..i + np].copy_from_slice(&pieces[..np]);
                part.len += np - 1;
                queue.extend_from_slice(&pieces[..np]);
                i += np;
                if part.len == self.n {
                    queue.clear();
                    return;
                }
            }
        }
    }

    fn on_first_path(&self, depth: usize) -> bool {
        match &self.first {
            None => true,
            Some(f) => f.path[..depth] == self.path[..depth],
        }
    }

    /// Orbit representatives of the group generated by the known
    /// automorphisms that fix `fixed` pointwise.
    fn orbits(&self, fixed: &[u8]) -> [u8; W] {
        let mut parent = [0u8; W];
        for (v, p) in parent.iter_mut().enumerate().take(self.n) {
            *p = v as u8;
        }
        fn find(parent: &mut [u8; W], mut v: u8) -> u8 {
            while parent[v as usize] != v {
                parent[v as usize] = parent[parent[v as usize] as usize];
                v = parent[v as usize];
            }
            v
        }
        for gamma in &self.autos {
            if fixed.iter().any(|&x| gamma[x as usize] != x) {
                continue;
            }
            for v in 0..self.n {
                let (a, b) = (find(&mut parent, v as u8), find(&mut parent, gamma[v]));
                if a != b {
                    parent[a.max(b) as usize] = a.min(b);
                }
            }
        }
        for v in 0..self.n {
            parent[v] = find(&mut parent, v as u8);
        }
        parent
    }

    /// Returns the depth of the ancestor to resume from when the subtree
    /// below it has become redundant.
    fn search(&mut self, part: Partition, depth: usize) -> Option<usize> {
        if part.len == self.n {
            return self.leaf(&part, depth);
        }
        let t = (0..part.len)
            .find(|&i| part.cells[i] & (part.cells[i] - 1) != 0)
            .unwrap();
        let cell = part.cells[t];
        let mut explored = 0u64;
        for v in bits(cell) {
            if explored != 0 && self.first.is_some() && self.on_first_path(depth) {
                let orbit = self.orbits(&self.path[..depth]);
                if bits(explored).any(|u| orbit[u] == orbit[v]) {
                    continue;
                }
            }
            explored |= 1 << v;
            let mut child = part;
            child.cells.copy_within(t + 1..part.len, t + 2);
            child.cells[t] = 1 << v;
            child.cells[t + 1] = cell & !(1 << v);
            child.len += 1;
            let mut queue = vec![1u64 << v];
            self.refine(&mut child, &mut queue);
            self.path[depth] = v as u8;
            if let Some(target) = self.search(child, depth + 1) {
                if target < depth {
                    return Some(target);
                }
            }
        }
        None
    }

    fn leaf(&mut self, part: &Partition, depth: usize) -> Option<usize> {
        let mut leaf = Leaf {
            lab: [0; W],
            cols: [0; W],
            path: self.path,
            depth,
        };
        let mut inv = [0u8; W];
        for pos in 0..self.n {
            let v = part.cells[pos].trailing_zeros() as u8;
            leaf.lab[pos] = v;
            inv[v as usize] = pos as u8;
        }
        for j in 1..self.n {
            let mut col = 0u64;
            for u in bits(self.rows[leaf.lab[j] as usize]) {
                let i = inv[u] as usize;
                if i < j {
                    col |= 1 << (63 - i);
                }
            }
            leaf.cols[j] = col;
        }

        let (Some(first), Some(best)) = (self.first, self.best) else {
            self.first = Some(leaf);
            self.best = Some(leaf);
            return None;
        };
        for known in [first, best] {
            if known.cols[..self.n] == leaf.cols[..self.n] {
                let mut gamma = [0u8; W];
                for pos in 0..self.n {
                    gamma[known.lab[pos] as usize] = leaf.lab[pos];
                }
                self.autos.push(gamma);
                let common = known.depth.min(depth);
                let split = (0..common)
                    .find(|&i| known.path[i] != leaf.path[i])
                    .unwrap_or(common);
                return Some(split);
            }
        }
        if leaf.cols[..self.n] < best.cols[..self.n] {
            self.best = Some(leaf);
        }
        None
    }

    fn run(mut self) -> Leaf {
        let full = if self.n == 64 { !0 } else { (1u64 << self.n) - 1 };
        let mut root = Partition {
            cells: [0; W],
            len: 1,
        };
        root.cells[0] = full;
        let mut queue = vec![full];
        self.refine(&mut root, &mut queue);
        self.search(root, 0);
        self.best.unwrap()
    }
}

fn check_order(g: &Graph) -> Result<()> {
    if g.order() > CANON_MAX_ORDER {
        return Err(Error::out_of_range("order", g.order(), CANON_MAX_ORDER));
    }
    Ok(())
}

/// Canonical labeling of single-word rows: `lab[pos]` is the vertex placed
/// at position `pos`, together with the relabeled columns.
fn canonical_leaf(rows: &[u64]) -> Leaf {
    Search::new(rows).run()
}

/// Vertex order of the canonical form: entry `pos` is the original vertex
/// that lands at position `pos`.
pub fn canonical_labeling(g: &Graph) -> Result<Vec<usize>> {
    check_order(g)?;
    let leaf = canonical_leaf(&g.word_rows());
    Ok(leaf.lab[..g.order()].iter().map(|&v| v as usize).collect())
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    let lab = canonical_labeling(g)?;
    let mut perm = vec![0; g.order()];
    for (pos, &v) in lab.iter().enumerate() {
        perm[v] = pos;
    }
    g.relabel(&perm)
}

pub fn canonical_certificate(g: &Graph) -> Result<Certificate> {
    check_order(g)?;
    let n = g.order();
    let leaf = canonical_leaf(&g.word_rows());
    let mut bytes = Vec::with_capacity(1 + (n * (n - 1) / 2).div_ceil(8));
    bytes.push(n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | (leaf.cols[j] >> (63 - i) & 1) as u8;
            filled += 1;
            if filled == 8 {
                bytes.push(acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        bytes.push(acc << (8 - filled));
    }
    Ok(Certificate(bytes))
}

/// Largest order whose upper triangle fits a `u64` key.
pub(crate) const KEY_MAX_ORDER: usize = 11;

/// Canonical upper triangle packed into an integer, most significant bit
/// first; numeric order matches certificate order for a fixed `n`.
pub(crate) fn canonical_key(rows: &[u64]) -> u64 {
    let n = rows.len();
    debug_assert!(n <= KEY_MAX_ORDER);
    let leaf = canonical_leaf(rows);
    let mut key = 0u64;
    for j in 1..n {
        key = key << j | leaf.cols[j] >> (64 - j);
    }
    key
}

/// Single-word adjacency rows from a packed key.
pub(crate) fn rows_from_key(n: usize, key: u64) -> Vec<u64> {
    let mut rows = vec![0u64; n];
    let total = n * (n - 1) / 2;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if key >> (total - 1 - k) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        Graph::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)))).unwrap()
    }

    #[test]
    fn path_relabelings_agree() {
        let p3 = path(3);
        let c = canonical_certificate(&p3).unwrap();
        for perm in [[0, 1, 2], [1, 0, 2], [2, 1, 0], [0, 2, 1], [1, 2, 0], [2, 0, 1]] {
            assert_eq!(canonical_certificate(&p3.relabel(&perm).unwrap()).unwrap(), c);
        }
        assert_ne!(c, canonical_certificate(&complete(3)).unwrap());
    }

    #[test]
    fn least_leaf_of_path() {
        // least column string for P_3 puts the middle vertex last: 0-2, 1-2
        let form = canonical_form(&path(3)).unwrap();
        assert_eq!(form, Graph::from_edges(3, [(0, 2), (1, 2)]).unwrap());
        assert_eq!(canonical_certificate(&path(3)).unwrap().as_bytes(), &[3, 0b0110_0000]);
    }

    #[test]
    fn highly_symmetric_graphs_finish() {
        for n in [1, 2, 10, 40, 62] {
            let e = Graph::empty(n).unwrap();
            let k = complete(n);
            assert_eq!(canonical_form(&e).unwrap(), e);
            assert_eq!(canonical_form(&k).unwrap(), k);
        }
        // two disjoint cliques of 20 joined by a perfect matching
        let mut edges = Vec::new();
        for i in 0..20 {
            for j in i + 1..20 {
                edges.push((i, j));
                edges.push((20 + i, 20 + j));
            }
            edges.push((i, 20 + i));
        }
        let g = Graph::from_edges(40, edges).unwrap();
        let perm: Vec<usize> = (0..40).map(|v| (v * 17 + 5) % 40).collect();
        assert_eq!(
            canonical_certificate(&g).unwrap(),
            canonical_certificate(&g.relabel(&perm).unwrap()).unwrap()
        );
    }

    #[test]
    fn rejects_large_orders() {
        let g = Graph::empty(63).unwrap();
        assert!(matches!(canonical_certificate(&g), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn key_round_trip() {
        let g = path(5);
        let key = canonical_key(&g.word_rows());
        let back = Graph::from_word_rows(&rows_from_key(5, key));
        assert_eq!(back, canonical_form(&g).unwrap());
    }
}
