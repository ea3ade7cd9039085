//! Immutable simple undirected graphs stored as rows of adjacency bits.

use std::fmt;

use crate::error::{Error, Result};

/// Largest order accepted by [`Graph`].
///
/// Witness graphs for large targets (`K_{m+1}` plus a pendant vertex grows
/// linearly with the target) need far more than one machine word per row, so
/// rows span as many words as needed.
pub const MAX_ORDER: usize = 4096;

/// Simple undirected graph on vertices `0..n`.
///
/// Row `v` holds one bit per vertex; bit `u` of row `v` is set iff `uv` is an
/// edge. Rows are always symmetric and irreflexive.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    m: usize,
}

pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

/// Iterate over the set bits of a bit row.
pub(crate) fn ones(row: &[u64]) -> impl Iterator<Item = usize> + '_ {
    row.iter().enumerate().flat_map(|(w, &word)| {
        let mut rest = word;
        std::iter::from_fn(move || {
            if rest == 0 {
                return None;
            }
            let b = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(w * 64 + b)
        })
    })
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::out_of_range("order", n, MAX_ORDER));
        }
        let words = words_for(n);
        Ok(Graph {
            n,
            words,
            bits: vec![0; n * words],
            m: 0,
        })
    }

    /// Build a graph from an edge list. Duplicate pairs collapse to one edge
    /// and the orientation of each pair is irrelevant.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::out_of_range("vertex index", u.max(v), n - 1));
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.insert_edge(u, v);
        }
        Ok(g)
    }

    /// Build from single-word rows; only the low `n` bits of each row are used.
    /// Caller guarantees symmetry and an empty diagonal.
    pub(crate) fn from_word_rows(rows: &[u64]) -> Self {
        let n = rows.len();
        debug_assert!((1..=64).contains(&n));
        let mask = if n == 64 { !0 } else { (1u64 << n) - 1 };
        let bits: Vec<u64> = rows.iter().map(|r| r & mask).collect();
        let m = bits.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Graph {
            n,
            words: 1,
            bits,
            m,
        }
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        if !self.has_edge(u, v) {
            self.bits[u * self.words + v / 64] |= 1 << (v % 64);
            self.bits[v * self.words + u / 64] |= 1 << (u % 64);
            self.m += 1;
        }
    }

    /// Make `range` a clique, word by word.
    pub(crate) fn add_clique(&mut self, range: std::ops::Range<usize>) {
        debug_assert!(range.end <= self.n);
        let mut mask = vec![0u64; self.words];
        for v in range.clone() {
            mask[v / 64] |= 1 << (v % 64);
        }
        for u in range {
            let row = &mut self.bits[u * self.words..(u + 1) * self.words];
            for (r, m) in row.iter_mut().zip(&mask) {
                *r |= m;
            }
            row[u / 64] &= !(1 << (u % 64));
        }
        self.m = self.bits.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    #[inline]
    pub fn size(&self) -> usize {
        self.m
    }

    /// 64-bit words per adjacency row.
    #[inline]
    pub fn words_per_row(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// First word of each row; only meaningful for graphs of order at most 64.
    pub(crate) fn word_rows(&self) -> Vec<u64> {
        debug_assert_eq!(self.words, 1);
        self.bits.clone()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        ones(self.row(v))
    }

    /// Edges as `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![0u64; self.words];
        let mut stack = vec![0usize];
        seen[0] |= 1;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for (w, (s, r)) in seen.iter_mut().zip(self.row(v)).enumerate() {
                let mut fresh = r & !*s;
                *s |= fresh;
                while fresh != 0 {
                    let b = fresh.trailing_zeros() as usize;
                    fresh &= fresh - 1;
                    stack.push(w * 64 + b);
                    count += 1;
                }
            }
        }
        count == self.n
    }

    /// The graph with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n {
            return Err(Error::BadParams(format!(
                "permutation has length {} for a graph of order {}",
                perm.len(),
                self.n
            )));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::BadParams("not a permutation".into()));
            }
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.insert_edge(perm[u], perm[v]);
        }
        Ok(g)
    }

    /// Parse the edge-list text format: a line `n <count>` followed by one
    /// `u v` pair per line. Blank lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut graphs = parse_edge_lists(text)?;
        match graphs.len() {
            1 => Ok(graphs.pop().unwrap()),
            0 => Err(Error::MalformedRecord("no 'n <count>' header".into())),
            k => Err(Error::MalformedRecord(format!("expected one graph, found {k}"))),
        }
    }

    /// Render in the edge-list text format, edges sorted.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

/// Parse a concatenation of edge-list records, each starting with its own
/// `n <count>` line.
pub fn parse_edge_lists(text: &str) -> Result<Vec<Graph>> {
    let mut graphs = Vec::new();
    let mut current: Option<(usize, Vec<(usize, usize)>)> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |msg: &str| Error::MalformedRecord(format!("line {}: {msg}: '{raw}'", lineno + 1));
        let mut fields = line.split_whitespace();
        let first = fields.next().unwrap();
        if first == "n" {
            let n: usize = fields
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| bad("expected 'n <count>'"))?;
            if fields.next().is_some() {
                return Err(bad("trailing fields"));
            }
            if let Some((n, edges)) = current.take() {
                graphs.push(Graph::from_edges(n, edges)?);
            }
            current = Some((n, Vec::new()));
        } else {
            let u: usize = first.parse().map_err(|_| bad("bad vertex index"))?;
            let v: usize = fields
                .next()
                .and_then(|t| t.parse().ok())
                .ok_or_else(|| bad("bad vertex index"))?;
            if fields.next().is_some() {
                return Err(bad("trailing fields"));
            }
            match current.as_mut() {
                Some((_, edges)) => edges.push((u, v)),
                None => return Err(bad("edge before 'n <count>' header")),
            }
        }
    }
    if let Some((n, edges)) = current {
        graphs.push(Graph::from_edges(n, edges)?);
    }
    Ok(graphs)
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
