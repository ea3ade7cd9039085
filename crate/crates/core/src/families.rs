//! Standard graph families.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `P_n`, `n >= 1`.
    Path(usize),
    /// `C_n`, `n >= 3`.
    Cycle(usize),
    /// `K_n`, `n >= 1`.
    Complete(usize),
    /// `S_n = K_{1,n-1}`, `n >= 1`; the center is vertex 0.
    Star(usize),
    /// `K_{a,b}`, `a, b >= 1`.
    CompleteBipartite(usize, usize),
    /// `K_n` minus a perfect matching, `n` even.
    CocktailParty(usize),
    /// `K_a` joined to an edgeless set of `b` vertices.
    Split(usize, usize),
}

impl Family {
    pub fn build(self) -> Result<Graph> {
        let bad = |msg: String| Err(Error::BadParams(msg));
        match self {
            Family::Path(n) if n >= 1 => path(n),
            Family::Cycle(n) if n >= 3 => cycle(n),
            Family::Complete(n) if n >= 1 => complete(n),
            Family::Star(n) if n >= 1 => Graph::from_edges(n, (1..n).map(|i| (0, i))),
            Family::CompleteBipartite(a, b) if a >= 1 && b >= 1 => {
                Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))
            }
            Family::CocktailParty(n) if n >= 2 && n % 2 == 0 => Graph::from_edges(
                n,
                (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| j != i + n / 2),
            ),
            Family::Split(a, b) if a >= 1 && b >= 1 => split(a, b),
            other => bad(format!("invalid parameters for {other}")),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Path(_) => "path",
            Family::Cycle(_) => "cycle",
            Family::Complete(_) => "complete",
            Family::Star(_) => "star",
            Family::CompleteBipartite(..) => "complete_bipartite",
            Family::CocktailParty(_) => "cocktail_party",
            Family::Split(..) => "split",
        }
    }

    /// Build from a family name and its integer parameters.
    pub fn from_parts(kind: &str, params: &[usize]) -> Result<Self> {
        let one = |f: fn(usize) -> Family| match params {
            [a] => Ok(f(*a)),
            _ => Err(Error::BadParams(format!("{kind} takes one parameter"))),
        };
        let two = |f: fn(usize, usize) -> Family| match params {
            [a, b] => Ok(f(*a, *b)),
            _ => Err(Error::BadParams(format!("{kind} takes two parameters"))),
        };
        match kind {
            "path" => one(Family::Path),
            "cycle" => one(Family::Cycle),
            "complete" => one(Family::Complete),
            "star" => one(Family::Star),
            "complete_bipartite" => two(Family::CompleteBipartite),
            "cocktail_party" => one(Family::CocktailParty),
            "split" => two(Family::Split),
            _ => Err(Error::BadParams(format!("unknown family '{kind}'"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Path(n)
            | Family::Cycle(n)
            | Family::Complete(n)
            | Family::Star(n)
            | Family::CocktailParty(n) => write!(f, "{}({n})", self.name()),
            Family::CompleteBipartite(a, b) | Family::Split(a, b) => write!(f, "{}({a},{b})", self.name()),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    /// Parses `name(p1,p2)`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, rest) = s
            .split_once('(')
            .ok_or_else(|| Error::BadParams(format!("expected name(params), got '{s}'")))?;
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::BadParams(format!("missing ')' in '{s}'")))?;
        let params = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::BadParams(format!("bad parameter list in '{s}'")))?;
        Family::from_parts(kind.trim(), &params)
    }
}

pub fn path(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParams(format!("cycle needs at least 3 vertices, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    let mut g = Graph::empty(n)?;
    g.add_clique(0..n);
    Ok(g)
}

/// Clique on `0..a`, independent set on `a..a+b`, all cross edges.
pub fn split(a: usize, b: usize) -> Result<Graph> {
    let mut g = Graph::from_edges(a + b, (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))))?;
    g.add_clique(0..a);
    Ok(g)
}

/// Starlike tree: arms of the given lengths hang off center vertex 0; arm
/// vertices are numbered outward, arm after arm.
pub fn starlike(n: usize, lengths: &[usize]) -> Result<Graph> {
    if lengths.len() < 3 {
        return Err(Error::BadParams(format!("starlike needs at least 3 arms, got {}", lengths.len())));
    }
    if lengths.contains(&0) {
        return Err(Error::BadParams("starlike arm lengths must be positive".into()));
    }
    if lengths.iter().sum::<usize>() + 1 != n {
        return Err(Error::BadParams(format!("arm lengths {lengths:?} do not sum to {}", n.saturating_sub(1))));
    }
    let mut edges = Vec::with_capacity(n - 1);
    let mut next = 1;
    for &len in lengths {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
    }
    Graph::from_edges(n, edges)
}
