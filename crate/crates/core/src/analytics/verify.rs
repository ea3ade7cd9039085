//! Exhaustive checks of structural claims over a census.
//!
//! Suites count counterexamples and keep the first one. Claims that are
//! theorems make a report fail when violated; observed conjectures are only
//! reported.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::census::Census;
use crate::canon::canonical_certificate;
use crate::enumerate::ENUM_MAX_ORDER;
use crate::error::{Error, Result};
use crate::families::{starlike, Family};
use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::index::{edge_contributions, mostar_index, transmission_band};
use crate::structure::{has_triangle, low_link};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Trees,
    SmallGap,
    TwoConnectivity,
    Transmissions,
    Conjectures,
    Formulas,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Trees,
        Suite::SmallGap,
        Suite::TwoConnectivity,
        Suite::Transmissions,
        Suite::Conjectures,
        Suite::Formulas,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Suite::Trees => "trees",
            Suite::SmallGap => "small_gap",
            Suite::TwoConnectivity => "two_connectivity",
            Suite::Transmissions => "transmissions",
            Suite::Conjectures => "conjectures",
            Suite::Formulas => "formulas",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.id() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ClaimKind {
    Theorem,
    Conjecture,
}

impl fmt::Display for ClaimKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ClaimKind::Theorem => "theorem",
            ClaimKind::Conjecture => "conjecture",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimResult {
    pub id: String,
    pub kind: ClaimKind,
    pub checked: u64,
    pub counterexamples: u64,
    /// graph6 of the first counterexample.
    pub first_counterexample: Option<String>,
}

impl ClaimResult {
    fn new(id: &str, kind: ClaimKind) -> Self {
        ClaimResult {
            id: id.to_string(),
            kind,
            checked: 0,
            counterexamples: 0,
            first_counterexample: None,
        }
    }

    fn check(&mut self, holds: bool, g: &Graph) {
        self.checked += 1;
        if !holds {
            self.counterexamples += 1;
            if self.first_counterexample.is_none() {
                self.first_counterexample = Some(encode_graph6(g));
            }
        }
    }

    pub fn holds(&self) -> bool {
        self.counterexamples == 0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: Suite,
    pub n_max: usize,
    pub claims: Vec<ClaimResult>,
    /// Named counts gathered along the way, e.g. realizers of 3 per order.
    pub observations: Vec<(String, u64)>,
}

impl VerificationReport {
    /// No theorem claim has a counterexample.
    pub fn passed(&self) -> bool {
        self.claims
            .iter()
            .all(|c| c.kind == ClaimKind::Conjecture || c.holds())
    }

    pub fn claim(&self, id: &str) -> Option<&ClaimResult> {
        self.claims.iter().find(|c| c.id == id)
    }

    pub fn observation(&self, key: &str) -> Option<u64> {
        self.observations.iter().find(|(k, _)| k == key).map(|&(_, v)| v)
    }

    /// One tab-separated line per claim and per observation.
    pub fn to_text(&self) -> String {
        let mut out = format!("#suite\t{}\tn_max\t{}\n", self.suite, self.n_max);
        out.push_str("#claim\tkind\tchecked\tcounterexamples\tfirst_counterexample\n");
        for c in &self.claims {
            out.push_str(&format!(
                "{}\t{}\t{}\t{}\t{}\n",
                c.id,
                c.kind,
                c.checked,
                c.counterexamples,
                c.first_counterexample.as_deref().unwrap_or("-")
            ));
        }
        for (k, v) in &self.observations {
            out.push_str(&format!("#observation\t{k}\t{v}\n"));
        }
        out
    }
}

/// Generate the census up to `n_max` and run one suite over it.
pub fn verify_suite(suite: Suite, n_max: usize) -> Result<VerificationReport> {
    if n_max == 0 || n_max > ENUM_MAX_ORDER {
        return Err(Error::out_of_range("order cap", n_max, ENUM_MAX_ORDER));
    }
    Census::generate(n_max)?.verify(suite)
}

fn tree_lower(n: u64) -> u64 {
    (n - 1) * (n - 1) / 2
}

fn tree_upper(n: u64) -> u64 {
    (n - 1) * (n - 2)
}

/// Largest index over order `n` as listed for split graphs with clique side
/// `floor(n/3)`.
pub fn split_maximum(n: u64) -> u64 {
    let a = n / 3;
    a * (n - a) * (n - a).saturating_sub(1)
}

/// Orders checked by the closed-form family claims.
pub const FORMULA_MAX_ORDER: usize = 30;

impl Census {
    pub fn verify(&self, suite: Suite) -> Result<VerificationReport> {
        let mut report = VerificationReport {
            suite,
            n_max: self.n_max(),
            claims: Vec::new(),
            observations: Vec::new(),
        };
        match suite {
            Suite::Trees => self.verify_trees(&mut report)?,
            Suite::SmallGap => self.verify_small_gap(&mut report),
            Suite::TwoConnectivity => self.verify_two_connectivity(&mut report),
            Suite::Transmissions => self.verify_transmissions(&mut report)?,
            Suite::Conjectures => self.verify_conjectures(&mut report),
            Suite::Formulas => self.verify_formulas(&mut report)?,
        }
        Ok(report)
    }

    fn verify_trees(&self, report: &mut VerificationReport) -> Result<()> {
        use ClaimKind::Theorem;
        let mut parity = ClaimResult::new("tree_parity", Theorem);
        let mut bounds = ClaimResult::new("tree_bounds", Theorem);
        let mut lower = ClaimResult::new("tree_lower_extreme_is_path", Theorem);
        let mut upper = ClaimResult::new("tree_upper_extreme_is_star", Theorem);
        let mut formula = ClaimResult::new("starlike_formula", Theorem);
        let mut rank = ClaimResult::new("starlike_rank", Theorem);

        for level in self.levels() {
            let n = level.order();
            let path_cert = canonical_certificate(&Family::Path(n).build()?)?;
            let star_cert = canonical_certificate(&Family::Star(n).build()?)?;
            let mut tree_values = Vec::new();
            let mut tree_count = 0;
            for (g, mo) in level.iter().filter(|(g, _)| g.size() + 1 == n) {
                tree_count += 1;
                tree_values.push(mo);
                parity.check(mo % 2 == 0, g);
                if n > 3 {
                    let (lo, hi) = (tree_lower(n as u64), tree_upper(n as u64));
                    bounds.check(lo <= mo && mo <= hi, g);
                    let cert = canonical_certificate(g)?;
                    lower.check((mo == lo) == (cert == path_cert), g);
                    upper.check((mo == hi) == (cert == star_cert), g);
                }
            }
            report.observations.push((format!("trees_n{n}"), tree_count));
            if n < 4 {
                continue;
            }
            tree_values.sort_unstable();
            tree_values.dedup();
            for k in 1..=(n - 2) / 2 {
                let t = starlike(n, &[1, k, n - 2 - k])?;
                let mo = mostar_index(&t)?;
                let expected = tree_lower(n as u64) + 2 * k as u64;
                formula.check(mo == expected, &t);
                rank.check(tree_values.get(k) == Some(&expected), &t);
            }
        }
        report.claims.extend([parity, bounds, lower, upper, formula, rank]);
        Ok(())
    }

    fn verify_small_gap(&self, report: &mut VerificationReport) {
        use ClaimKind::Theorem;
        let mut no_one = ClaimResult::new("mo_never_1", Theorem);
        let mut small = ClaimResult::new("no_1_3_5_up_to_order_6", Theorem);
        let mut pendant = ClaimResult::new("no_1_3_5_order_7_with_pendant", Theorem);
        for level in self.levels() {
            let n = level.order();
            for (g, mo) in level.iter() {
                no_one.check(mo != 1, g);
                let odd_small = matches!(mo, 1 | 3 | 5);
                if n <= 6 {
                    small.check(!odd_small, g);
                }
                if n == 7 && (0..n).any(|v| g.degree(v) == 1) {
                    pendant.check(!odd_small, g);
                }
            }
            for p in [3, 5] {
                let count = level.mo.iter().filter(|&&m| m == p).count() as u64;
                report.observations.push((format!("mo{p}_count_n{n}"), count));
            }
        }
        report.claims.extend([no_one, small]);
        if self.n_max() >= 7 {
            report.claims.push(pendant);
        }
    }

    fn verify_two_connectivity(&self, report: &mut VerificationReport) {
        let mut claim = ClaimResult::new("mo_1_3_5_bridgeless_and_cut_vertex_free", ClaimKind::Theorem);
        for level in self.levels() {
            for (g, _) in level.iter().filter(|(_, mo)| matches!(mo, 1 | 3 | 5)) {
                let (bridges, cuts) = low_link(g);
                claim.check(bridges.is_empty() && cuts.is_empty(), g);
            }
        }
        report.claims.push(claim);
    }

    fn verify_transmissions(&self, report: &mut VerificationReport) -> Result<()> {
        use ClaimKind::Theorem;
        let mut contributions = ClaimResult::new("mo3_contributions_0_or_1", Theorem);
        let mut band = ClaimResult::new("mo3_two_consecutive_transmissions", Theorem);
        for level in self.levels() {
            for (g, _) in level.iter().filter(|&(_, mo)| mo == 3) {
                contributions.check(edge_contributions(g)?.iter().all(|&c| c <= 1), g);
                band.check(transmission_band(g)?.consecutive_pair, g);
            }
        }
        report.claims.extend([contributions, band]);
        Ok(())
    }

    fn verify_conjectures(&self, report: &mut VerificationReport) {
        use ClaimKind::Conjecture;
        let mut regular = ClaimResult::new("regular_even", Conjecture);
        let mut bidegree = ClaimResult::new("mo3_degrees_3_and_4", Conjecture);
        let mut five = ClaimResult::new("mo5_degrees_3_to_5", Conjecture);
        let mut triangle = ClaimResult::new("mo3_mo5_triangle", Conjecture);
        for level in self.levels() {
            for (g, mo) in level.iter() {
                let d = g.degrees();
                let (lo, hi) = (*d.iter().min().unwrap(), *d.iter().max().unwrap());
                if lo == hi {
                    regular.check(mo % 2 == 0, g);
                }
                if mo == 3 {
                    bidegree.check(lo == 3 && hi == 4, g);
                }
                if mo == 5 {
                    let count = |k| d.iter().filter(|&&x| x == k).count();
                    let ok = lo == 3 && hi == 5 && count(5) == 1 && count(3) == 1;
                    five.check(ok, g);
                }
                if mo == 3 || mo == 5 {
                    triangle.check(has_triangle(g), g);
                }
            }
        }
        report.claims.extend([regular, bidegree, five, triangle]);
    }

    fn verify_formulas(&self, report: &mut VerificationReport) -> Result<()> {
        use ClaimKind::{Conjecture, Theorem};
        let mut path = ClaimResult::new("path_formula", Theorem);
        let mut star = ClaimResult::new("star_formula", Theorem);
        let mut split = ClaimResult::new("split_formula", Theorem);
        let mut bipartite = ClaimResult::new("complete_bipartite_formula", Theorem);
        let mut maximum = ClaimResult::new("maximum_equals_split_value", Conjecture);

        for n in 2..=FORMULA_MAX_ORDER {
            let n64 = n as u64;
            let g = Family::Path(n).build()?;
            path.check(mostar_index(&g)? == tree_lower(n64), &g);
            let g = Family::Star(n).build()?;
            star.check(mostar_index(&g)? == tree_upper(n64), &g);
        }
        for a in 1..=6u64 {
            for b in 1..=6u64 {
                let g = Family::Split(a as usize, b as usize).build()?;
                split.check(mostar_index(&g)? == a * b * (b - 1), &g);
            }
        }
        for a in 1..=7u64 {
            for b in 1..=7u64 {
                let g = Family::CompleteBipartite(a as usize, b as usize).build()?;
                bipartite.check(mostar_index(&g)? == a * b * a.abs_diff(b), &g);
            }
        }
        for level in self.levels().iter().filter(|l| l.order() >= 3) {
            let n = level.order();
            let (best, mult) = level.histogram().max().unwrap();
            let arg = level.iter().find(|&(_, mo)| mo == best).unwrap().0;
            maximum.check(best == split_maximum(n as u64), arg);
            report.observations.push((format!("max_n{n}"), best));
            report.observations.push((format!("max_mult_n{n}"), mult));
        }
        report.claims.extend([path, star, split, bipartite, maximum]);
        Ok(())
    }
}
