//! Breadth-first distances over bit rows.

use crate::error::{Error, Result};
use crate::graph::{ones, Graph};

/// Marker for pairs in different components.
pub const UNREACHABLE: u32 = u32::MAX;

/// All-pairs hop counts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn is_connected(&self) -> bool {
        !self.d.contains(&UNREACHABLE)
    }

    /// Largest distance from `v`, or `None` if some vertex is unreachable.
    pub fn eccentricity(&self, v: usize) -> Option<u32> {
        let row = self.row(v);
        if row.contains(&UNREACHABLE) {
            None
        } else {
            row.iter().copied().max()
        }
    }

    pub fn diameter(&self) -> Option<u32> {
        if self.is_connected() {
            self.d.iter().copied().max()
        } else {
            None
        }
    }
}

/// Reusable scratch space for level-synchronous BFS.
pub(crate) struct Bfs {
    visited: Vec<u64>,
    frontier: Vec<u64>,
    next: Vec<u64>,
}

impl Bfs {
    pub(crate) fn new(g: &Graph) -> Self {
        let w = g.words_per_row();
        Bfs {
            visited: vec![0; w],
            frontier: vec![0; w],
            next: vec![0; w],
        }
    }

    /// Run BFS from `source`, calling `level(dist, vertices)` once per
    /// nonempty distance layer (including layer 0). Returns the number of
    /// reached vertices.
    ///
    /// Each layer is expanded either top-down (OR the rows of the frontier)
    /// or bottom-up (test each unvisited row against the frontier), whichever
    /// touches fewer rows.
    pub(crate) fn run(&mut self, g: &Graph, source: usize, mut level: impl FnMut(u32, &[u64])) -> usize {
        let n = g.order();
        self.visited.fill(0);
        self.frontier.fill(0);
        self.visited[source / 64] |= 1 << (source % 64);
        self.frontier[source / 64] |= 1 << (source % 64);
        let mut reached = 1;
        let mut frontier_len = 1;
        let mut dist = 0;
        level(0, &self.frontier);
        while frontier_len > 0 && reached < n {
            dist += 1;
            self.next.fill(0);
            let unvisited = n - reached;
            if frontier_len <= unvisited {
                for v in ones(&self.frontier) {
                    for (x, r) in self.next.iter_mut().zip(g.row(v)) {
                        *x |= r;
                    }
                }
                for (x, s) in self.next.iter_mut().zip(&self.visited) {
                    *x &= !s;
                }
            } else {
                for w in 0..self.visited.len() {
                    let mut cand = !self.visited[w];
                    if w == self.visited.len() - 1 && !n.is_multiple_of(64) {
                        cand &= (1u64 << (n % 64)) - 1;
                    }
                    while cand != 0 {
                        let b = cand.trailing_zeros() as usize;
                        cand &= cand - 1;
                        let v = w * 64 + b;
                        if g.row(v).iter().zip(&self.frontier).any(|(r, f)| r & f != 0) {
                            self.next[w] |= 1 << b;
                        }
                    }
                }
            }
            frontier_len = self.next.iter().map(|x| x.count_ones() as usize).sum();
            if frontier_len == 0 {
                break;
            }
            for (s, x) in self.visited.iter_mut().zip(&self.next) {
                *s |= x;
            }
            std::mem::swap(&mut self.frontier, &mut self.next);
            reached += frontier_len;
            level(dist, &self.frontier);
        }
        reached
    }
}

/// Queue BFS over adjacency lists; cheaper than the bitset BFS when the
/// average degree is small compared to the row width.
struct SparseBfs {
    adj: Vec<Vec<u32>>,
    dist: Vec<u32>,
    queue: Vec<u32>,
}

impl SparseBfs {
    fn new(g: &Graph) -> Self {
        SparseBfs {
            adj: (0..g.order()).map(|v| g.neighbors(v).map(|u| u as u32).collect()).collect(),
            dist: vec![UNREACHABLE; g.order()],
            queue: Vec::with_capacity(g.order()),
        }
    }

    /// Fills `self.dist` from `source`; returns the number of reached vertices.
    fn run(&mut self, source: usize) -> usize {
        self.dist.fill(UNREACHABLE);
        self.queue.clear();
        self.dist[source] = 0;
        self.queue.push(source as u32);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head] as usize;
            head += 1;
            let d = self.dist[v] + 1;
            for &u in &self.adj[v] {
                if self.dist[u as usize] == UNREACHABLE {
                    self.dist[u as usize] = d;
                    self.queue.push(u);
                }
            }
        }
        self.queue.len()
    }
}

fn is_sparse(g: &Graph) -> bool {
    2 * g.size() <= g.order() * g.words_per_row()
}

/// Hop counts from every vertex; disconnected pairs hold [`UNREACHABLE`].
pub fn distances(g: &Graph) -> DistanceMatrix {
    let n = g.order();
    let mut d = vec![UNREACHABLE; n * n];
    if is_sparse(g) {
        let mut bfs = SparseBfs::new(g);
        for s in 0..n {
            bfs.run(s);
            d[s * n..(s + 1) * n].copy_from_slice(&bfs.dist);
        }
        return DistanceMatrix { n, d };
    }
    let mut bfs = Bfs::new(g);
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        bfs.run(g, s, |dist, layer| {
            for v in ones(layer) {
                row[v] = dist;
            }
        });
    }
    DistanceMatrix { n, d }
}

/// `Tr(v)`, the sum of distances from `v` to every vertex.
pub fn transmissions(g: &Graph) -> Result<Vec<u64>> {
    let n = g.order();
    let mut out = Vec::with_capacity(n);
    if is_sparse(g) {
        let mut bfs = SparseBfs::new(g);
        for s in 0..n {
            if bfs.run(s) != n {
                return Err(Error::Disconnected);
            }
            out.push(bfs.dist.iter().map(|&d| d as u64).sum());
        }
        return Ok(out);
    }
    let mut bfs = Bfs::new(g);
    for s in 0..n {
        let mut total = 0u64;
        let reached = bfs.run(g, s, |dist, layer| {
            let count: u64 = layer.iter().map(|x| x.count_ones() as u64).sum();
            total += dist as u64 * count;
        });
        if reached != n {
            return Err(Error::Disconnected);
        }
        out.push(total);
    }
    Ok(out)
}

/// Sum of distances over all unordered vertex pairs.
pub fn wiener_index(g: &Graph) -> Result<u64> {
    Ok(transmissions(g)?.iter().sum::<u64>() / 2)
}
