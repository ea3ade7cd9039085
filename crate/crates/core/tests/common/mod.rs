//! Reference implementations used as oracles. Deliberately naive: dense
//! matrices, Floyd-Warshall, brute-force permutations.

#![allow(dead_code)]

use mostar_core::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

pub const INF: u32 = u32::MAX / 4;

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect()
}

pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.order();
    let a = adjacency(g);
    let mut d = vec![vec![INF; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if a[u][v] {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

/// `(n_u, n_v)` for edge `uv` straight from the definition.
pub fn split_counts(d: &[Vec<u32>], u: usize, v: usize) -> (usize, usize) {
    let n_u = (0..d.len()).filter(|&w| d[u][w] < d[v][w]).count();
    let n_v = (0..d.len()).filter(|&w| d[v][w] < d[u][w]).count();
    (n_u, n_v)
}

pub fn mostar_oracle(g: &Graph) -> u64 {
    let d = floyd_warshall(g);
    let n = g.order();
    let mut total = 0;
    for u in 0..n {
        for v in u + 1..n {
            if g.has_edge(u, v) {
                let (a, b) = split_counts(&d, u, v);
                total += a.abs_diff(b) as u64;
            }
        }
    }
    total
}

pub fn is_connected_oracle(g: &Graph) -> bool {
    floyd_warshall(g).iter().all(|row| row.iter().all(|&x| x < INF))
}

/// Random spanning tree plus independent extra edges with probability `p`.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    let g = Graph::from_edges(n, edges).unwrap();
    random_relabel(rng, &g)
}

pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let g = Graph::from_edges(n, (1..n).map(|v| (rng.gen_range(0..v), v))).unwrap();
    random_relabel(rng, &g)
}

pub fn random_relabel<R: Rng>(rng: &mut R, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(rng);
    g.relabel(&perm).unwrap()
}

/// Plain graph6 encoder for `n <= 62`, written from the format description.
pub fn graph6_reference(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= 62);
    let mut bits = Vec::new();
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    for chunk in bits.chunks(6) {
        let v = chunk.iter().fold(0u8, |acc, &b| (acc << 1) | b as u8);
        out.push((v + 63) as char);
    }
    out
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Brute-force isomorphism: try every bijection.
pub fn isomorphic_oracle(a: &Graph, b: &Graph, perms: &[Vec<usize>]) -> bool {
    if a.order() != b.order() || a.size() != b.size() {
        return false;
    }
    let (aa, bb) = (adjacency(a), adjacency(b));
    let n = a.order();
    perms
        .iter()
        .any(|p| (0..n).all(|u| (u + 1..n).all(|v| aa[u][v] == bb[p[u]][p[v]])))
}

/// Brute-force canonical form: lexicographically least graph6 over all
/// relabelings. Used only to check that equal certificates mean isomorphic.
pub fn brute_canonical(g: &Graph, perms: &[Vec<usize>]) -> String {
    perms
        .iter()
        .map(|p| graph6_reference(&g.relabel(p).unwrap()))
        .min()
        .unwrap()
}
