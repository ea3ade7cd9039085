//! Graphs realizing prescribed Mostar indices.
//!
//! Every plan is certified when it is built: the index of the constructed
//! graph is recomputed and must equal the target, otherwise construction
//! fails with [`Error::CertificationFailure`].

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::{cycle, path, starlike};
use crate::graph::{Graph, MAX_ORDER};
use crate::graph6::encode_graph6;
use crate::index::mostar_index;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum WitnessFamily {
    /// `C_n`; params `[n]`.
    Cycle,
    /// `P_n`; params `[n]`.
    Path,
    /// `K_{m+1}` with one pendant vertex; params `[m]`.
    CompletePlusPendant,
    /// `C_{2m}` with one pendant vertex; params `[2m]`.
    EvenCyclePlusPendant,
    /// `C_{2m+1}` with a pendant at `v_{m+1}` and chord `v_2 v_{2m+1}`;
    /// params `[2m+1]`.
    OddCyclePendantChord,
    /// Cycle, independent set and clique layers; params `[p]`.
    ThreeLayer,
    /// Cyclic chain of clique levels; params `[m, k]`.
    LayeredEven,
    /// Path tree; params `[n]`.
    TreePath,
    /// `T_n(1, k, n-2-k)`; params `[n, 1, k, n-2-k]`.
    TreeStarlike,
    /// `C_{2k+1}` with one pendant vertex; params `[2k+1]`.
    OddCycleOnePendant,
    /// `C_{2k+1}` with two pendants on one vertex; params `[2k+1]`.
    OddCycleTwoPendants,
    /// `C_{2k}` sharing one vertex with a triangle; params `[2k]`.
    CycleTriangleShared,
}

impl WitnessFamily {
    pub fn tag(self) -> &'static str {
        match self {
            WitnessFamily::Cycle => "CYCLE",
            WitnessFamily::Path => "PATH",
            WitnessFamily::CompletePlusPendant => "COMPLETE_PLUS_PENDANT",
            WitnessFamily::EvenCyclePlusPendant => "EVEN_CYCLE_PLUS_PENDANT",
            WitnessFamily::OddCyclePendantChord => "ODD_CYCLE_PENDANT_CHORD",
            WitnessFamily::ThreeLayer => "THREE_LAYER",
            WitnessFamily::LayeredEven => "LAYERED_EVEN",
            WitnessFamily::TreePath => "TREE_PATH",
            WitnessFamily::TreeStarlike => "TREE_STARLIKE",
            WitnessFamily::OddCycleOnePendant => "ODD_CYCLE_ONE_PENDANT",
            WitnessFamily::OddCycleTwoPendants => "ODD_CYCLE_TWO_PENDANTS",
            WitnessFamily::CycleTriangleShared => "CYCLE_TRIANGLE_SHARED",
        }
    }
}

impl fmt::Display for WitnessFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// A construction recipe together with its graph and verified index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessPlan {
    pub target: u64,
    pub family: WitnessFamily,
    pub params: Vec<usize>,
    pub graph: Graph,
    pub certified_mo: u64,
}

/// Flat form of a plan for tabular or JSON output.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessRecord {
    pub target: u64,
    pub family: WitnessFamily,
    pub params: Vec<usize>,
    pub order: usize,
    pub graph6: String,
    pub certified_mo: u64,
}

impl WitnessPlan {
    pub fn record(&self) -> WitnessRecord {
        WitnessRecord {
            target: self.target,
            family: self.family,
            params: self.params.clone(),
            order: self.graph.order(),
            graph6: encode_graph6(&self.graph),
            certified_mo: self.certified_mo,
        }
    }
}

impl WitnessRecord {
    pub const TSV_HEADER: &'static str = "#target\tfamily\tparams\torder\tgraph6\tcertified_mo";

    pub fn tsv_line(&self) -> String {
        let params: Vec<String> = self.params.iter().map(|p| p.to_string()).collect();
        format!(
            "{}\t{}\t{}\t{}\t{}\t{}",
            self.target,
            self.family,
            params.join(","),
            self.order,
            self.graph6,
            self.certified_mo
        )
    }
}

fn certify(target: u64, family: WitnessFamily, params: Vec<usize>, graph: Graph) -> Result<WitnessPlan> {
    let computed = mostar_index(&graph)?;
    if computed != target {
        return Err(Error::CertificationFailure {
            family: family.tag(),
            expected: target,
            computed,
        });
    }
    Ok(WitnessPlan {
        target,
        family,
        params,
        graph,
        certified_mo: computed,
    })
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_ORDER {
        return Err(Error::out_of_range("witness order", n, MAX_ORDER));
    }
    Ok(())
}

fn to_usize(p: u64) -> Result<usize> {
    usize::try_from(p).map_err(|_| Error::out_of_range("target", usize::MAX, MAX_ORDER))
}

/// A connected graph with Mostar index `p`, for every `p != 1`.
///
/// Orders are `ceil((p + 3) / 2)` for `p >= 6`.
pub fn witness(p: u64) -> Result<WitnessPlan> {
    match p {
        1 => Err(Error::NotRealizable(1)),
        0 => certify(0, WitnessFamily::Cycle, vec![3], cycle(3)?),
        2 => certify(2, WitnessFamily::Path, vec![3], path(3)?),
        3 | 5 => three_layer(p as usize),
        _ if p.is_multiple_of(2) => {
            let m = to_usize(p / 2)?;
            check_order(m + 2)?;
            let mut g = Graph::empty(m + 2)?;
            g.add_clique(0..m + 1);
            g.insert_edge(0, m + 1);
            certify(p, WitnessFamily::CompletePlusPendant, vec![m], g)
        }
        _ if p % 4 == 3 => {
            let len = to_usize(p.div_ceil(4) * 2)?;
            check_order(len + 1)?;
            let mut g = Graph::empty(len + 1)?;
            for i in 0..len {
                g.insert_edge(i, (i + 1) % len);
            }
            g.insert_edge(0, len);
            certify(p, WitnessFamily::EvenCyclePlusPendant, vec![len], g)
        }
        _ => {
            // v_i is vertex i-1; the pendant is vertex 2m+1
            let m = to_usize((p - 1) / 4)?;
            let len = 2 * m + 1;
            check_order(len + 1)?;
            let mut g = Graph::empty(len + 1)?;
            for i in 0..len {
                g.insert_edge(i, (i + 1) % len);
            }
            g.insert_edge(m, len);
            g.insert_edge(1, len - 1);
            certify(p, WitnessFamily::OddCyclePendantChord, vec![len], g)
        }
    }
}

/// A chemical tree (maximum degree at most 3) with Mostar index `p`.
///
/// Finds the order `n` with `floor((n-1)^2/2) <= p < floor(n^2/2)` and
/// returns `P_n` or the starlike tree `T_n(1, k, n-2-k)` with
/// `k = (p - floor((n-1)^2/2)) / 2`.
pub fn tree_witness(p: u64) -> Result<WitnessPlan> {
    if p % 2 == 1 {
        return Err(Error::OddTarget(p));
    }
    let low = |n: u64| (n - 1) * (n - 1) / 2;
    let mut n = ((2 * p) as f64).sqrt() as u64;
    n = n.max(2);
    while n > 2 && low(n) > p {
        n -= 1;
    }
    while low(n + 1) <= p {
        n += 1;
    }
    let order = to_usize(n)?;
    check_order(order)?;
    let k = to_usize((p - low(n)) / 2)?;
    if k == 0 {
        certify(p, WitnessFamily::TreePath, vec![order], path(order)?)
    } else {
        let arms = [1, k, order - 2 - k];
        let g = starlike(order, &arms)?;
        certify(p, WitnessFamily::TreeStarlike, vec![order, 1, k, order - 2 - k], g)
    }
}

/// A witness with maximum degree at most 4.
///
/// Even targets use [`tree_witness`]; odd targets reuse the cycle-based
/// witnesses of [`witness`], and 3 uses the 9-vertex three-layer graph. No
/// chemical graph is known for 5, which yields [`Error::Unknown`].
pub fn chemical_witness(p: u64) -> Result<WitnessPlan> {
    let plan = match p {
        1 => return Err(Error::NotRealizable(1)),
        5 => return Err(Error::Unknown(5)),
        3 => three_layer(3)?,
        _ if p.is_multiple_of(2) => tree_witness(p)?,
        _ => witness(p)?,
    };
    debug_assert!(plan.graph.max_degree() <= 4);
    Ok(plan)
}

/// The sparse even-target constructions built on cycles: an odd cycle with
/// one pendant (`p = 4k`), an odd cycle with two pendants on one vertex
/// (`p = 8k + 2`), and an even cycle sharing a vertex with a triangle
/// (`p = 8k - 2`). All have maximum degree at most 4.
pub fn cycle_even_witness(p: u64) -> Result<WitnessPlan> {
    let none = || Err(Error::BadParams(format!("no cycle-based even construction for {p}")));
    if p.is_multiple_of(4) && p >= 4 {
        let len = to_usize(p / 2 + 1)?;
        check_order(len + 1)?;
        let mut g = Graph::empty(len + 1)?;
        for (u, v) in cycle(len)?.edges() {
            g.insert_edge(u, v);
        }
        g.insert_edge(0, len);
        certify(p, WitnessFamily::OddCycleOnePendant, vec![len], g)
    } else if p % 8 == 2 && p >= 10 {
        let len = to_usize((p - 2) / 4 + 1)?;
        check_order(len + 2)?;
        let mut g = Graph::empty(len + 2)?;
        for (u, v) in cycle(len)?.edges() {
            g.insert_edge(u, v);
        }
        g.insert_edge(0, len);
        g.insert_edge(0, len + 1);
        certify(p, WitnessFamily::OddCycleTwoPendants, vec![len], g)
    } else if p % 8 == 6 && p >= 14 {
        let len = to_usize((p + 2) / 4)?;
        check_order(len + 2)?;
        let mut g = Graph::empty(len + 2)?;
        for (u, v) in cycle(len)?.edges() {
            g.insert_edge(u, v);
        }
        g.insert_edge(0, len);
        g.insert_edge(0, len + 1);
        g.insert_edge(len, len + 1);
        certify(p, WitnessFamily::CycleTriangleShared, vec![len], g)
    } else {
        none()
    }
}

/// Builds the three-layer graph for `p >= 3` without certifying it.
///
/// Vertices `0..p` form `C_p`, `p..2p` an independent set joined to the
/// cycle except for the matching `i -- p+i`, and `2p..3p` a clique matched
/// to the independent set by `p+i -- 2p+i`.
pub fn three_layer_graph(p: usize) -> Result<Graph> {
    if p < 3 {
        return Err(Error::BadParams(format!("three-layer construction needs p >= 3, got {p}")));
    }
    check_order(3 * p)?;
    let mut g = Graph::empty(3 * p)?;
    for i in 0..p {
        g.insert_edge(i, (i + 1) % p);
        for j in 0..p {
            if i != j {
                g.insert_edge(i, p + j);
            }
        }
        g.insert_edge(p + i, 2 * p + i);
    }
    g.add_clique(2 * p..3 * p);
    Ok(g)
}

/// Certified three-layer witness on `3p` vertices with Mostar index `p`.
///
/// Each cycle edge contributes 1 and every other edge 0, so the index is `p`
/// for even `p` as well; certification still guards every build.
pub fn three_layer(p: usize) -> Result<WitnessPlan> {
    let g = three_layer_graph(p)?;
    certify(p as u64, WitnessFamily::ThreeLayer, vec![p], g)
}

/// Level sizes of the layered even construction, in cyclic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelSpec {
    /// Clique size minus one.
    pub m: usize,
    pub k: usize,
    pub sizes: Vec<usize>,
}

impl LevelSpec {
    /// `4k + 4` levels; the clique levels (size `m + 1`) sit at positions
    /// `1, 3, ..., 2k+1` and `2k+4, 2k+6, ..., 4k+2`, all others hold one
    /// vertex. The only adjacent pairs of single-vertex levels are
    /// `(2k+2, 2k+3)` and `(4k+3, 0)`.
    pub fn new(m: usize, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::BadParams("layered construction needs k >= 1".into()));
        }
        let levels = 4 * k + 4;
        let mut sizes = vec![1; levels];
        for j in (1..=2 * k + 1).step_by(2).chain((2 * k + 4..=4 * k + 2).step_by(2)) {
            sizes[j] = m + 1;
        }
        let spec = LevelSpec { m, k, sizes };
        debug_assert!(spec.is_valid());
        Ok(spec)
    }

    pub fn order(&self) -> usize {
        self.sizes.iter().sum()
    }

    /// `2k+1` clique levels, `2k+3` singleton levels, no two clique levels
    /// adjacent.
    pub fn is_valid(&self) -> bool {
        let l = self.sizes.len();
        if l != 4 * self.k + 4 {
            return false;
        }
        let big: Vec<bool> = self.sizes.iter().map(|&s| s == self.m + 1 && s > 1).collect();
        let n_big = self.sizes.iter().filter(|&&s| s == self.m + 1).count();
        let n_one = self.sizes.iter().filter(|&&s| s == 1).count();
        let counts_ok = if self.m == 0 {
            n_one == l
        } else {
            n_big == 2 * self.k + 1 && n_one == 2 * self.k + 3
        };
        counts_ok && (0..l).all(|j| !(big[j] && big[(j + 1) % l]))
    }

    /// Consecutive levels completely joined, clique levels complete inside.
    /// Vertices are numbered level by level starting at level 0.
    pub fn build(&self) -> Result<Graph> {
        let n = self.order();
        check_order(n)?;
        let mut start = Vec::with_capacity(self.sizes.len());
        let mut acc = 0;
        for &s in &self.sizes {
            start.push(acc);
            acc += s;
        }
        let l = self.sizes.len();
        let mut g = Graph::empty(n)?;
        for j in 0..l {
            let level = start[j]..start[j] + self.sizes[j];
            let nj = (j + 1) % l;
            let next = start[nj]..start[nj] + self.sizes[nj];
            g.add_clique(level.clone());
            for u in level {
                for v in next.clone() {
                    g.insert_edge(u, v);
                }
            }
        }
        Ok(g)
    }
}

/// Certified witness with Mostar index `2m` for any `k >= 1`; `m = 0` gives
/// the cycle `C_{4k+4}`.
pub fn layered_even(m: usize, k: usize) -> Result<WitnessPlan> {
    let spec = LevelSpec::new(m, k)?;
    let g = spec.build()?;
    certify(2 * m as u64, WitnessFamily::LayeredEven, vec![m, k], g)
}
