//! Degree statistics, bipartiteness, bridges and cut vertices.

use serde::Serialize;

use crate::distance::distances;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructuralProfile {
    pub order: usize,
    pub size: usize,
    pub degrees: Vec<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
    pub is_connected: bool,
    pub is_tree: bool,
    pub is_regular: bool,
    /// Maximum degree at most 4.
    pub is_chemical: bool,
    pub is_bipartite: bool,
    pub has_pendant_vertex: bool,
    pub has_triangle: bool,
    /// `None` for disconnected graphs.
    pub diameter: Option<u32>,
    /// Bridges as `(u, v)` with `u < v`, sorted.
    pub bridges: Vec<(usize, usize)>,
    /// Sorted.
    pub cut_vertices: Vec<usize>,
    pub is_two_connected: bool,
    pub is_two_edge_connected: bool,
}

pub fn structural_profile(g: &Graph) -> StructuralProfile {
    let n = g.order();
    let degrees = g.degrees();
    let min_degree = degrees.iter().copied().min().unwrap_or(0);
    let max_degree = degrees.iter().copied().max().unwrap_or(0);
    let is_connected = g.is_connected();
    let (bridges, cut_vertices) = low_link(g);
    StructuralProfile {
        order: n,
        size: g.size(),
        is_tree: is_connected && g.size() + 1 == n,
        is_regular: min_degree == max_degree,
        is_chemical: max_degree <= 4,
        is_bipartite: is_bipartite(g),
        has_pendant_vertex: degrees.contains(&1),
        has_triangle: has_triangle(g),
        diameter: distances(g).diameter(),
        is_two_connected: is_connected && n >= 3 && cut_vertices.is_empty(),
        is_two_edge_connected: is_connected && n >= 2 && bridges.is_empty(),
        is_connected,
        bridges,
        cut_vertices,
        degrees,
        min_degree,
        max_degree,
    }
}

pub fn has_triangle(g: &Graph) -> bool {
    g.edges()
        .any(|(u, v)| g.row(u).iter().zip(g.row(v)).any(|(a, b)| a & b != 0))
}

pub fn is_bipartite(g: &Graph) -> bool {
    let n = g.order();
    let mut side = vec![u8::MAX; n];
    let mut stack = Vec::new();
    for root in 0..n {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        stack.push(root);
        while let Some(v) = stack.pop() {
            for w in g.neighbors(v) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    stack.push(w);
                } else if side[w] == side[v] {
                    return false;
                }
            }
        }
    }
    true
}

/// Bridges and cut vertices by iterative depth-first low-link numbering.
pub fn low_link(g: &Graph) -> (Vec<(usize, usize)>, Vec<usize>) {
    let n = g.order();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut order = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut bridges = Vec::new();
    let mut counter = 0;
    // (vertex, parent, next neighbor index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if order[root] != usize::MAX {
            continue;
        }
        order[root] = counter;
        low[root] = counter;
        counter += 1;
        let mut root_children = 0;
        stack.push((root, usize::MAX, 0));
        while let Some(top) = stack.last_mut() {
            let (v, parent, i) = *top;
            if i < adj[v].len() {
                top.2 += 1;
                let w = adj[v][i];
                if order[w] == usize::MAX {
                    order[w] = counter;
                    low[w] = counter;
                    counter += 1;
                    if v == root {
                        root_children += 1;
                    }
                    stack.push((w, v, 0));
                } else if w != parent {
                    low[v] = low[v].min(order[w]);
                }
            } else {
                stack.pop();
                if parent != usize::MAX {
                    low[parent] = low[parent].min(low[v]);
                    if low[v] > order[parent] {
                        bridges.push((parent.min(v), parent.max(v)));
                    }
                    if parent != root && low[v] >= order[parent] {
                        is_cut[parent] = true;
                    }
                }
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }
    bridges.sort_unstable();
    let cuts = (0..n).filter(|&v| is_cut[v]).collect();
    (bridges, cuts)
}
