use std::collections::BTreeMap;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// Value to multiplicity map of Mostar indices over one order.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Histogram {
    counts: BTreeMap<u64, u64>,
}

/// Restriction of a histogram to even or to odd values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ParityView {
    pub mass: u64,
    /// Smallest and largest value present.
    pub range: Option<(u64, u64)>,
    /// `(value, count)` of the most frequent value.
    pub peak: Option<(u64, u64)>,
}

/// Most frequent entry; ties go to the largest value.
fn peak<'a>(entries: impl Iterator<Item = (&'a u64, &'a u64)>) -> Option<(u64, u64)> {
    entries
        .map(|(&v, &c)| (v, c))
        .max_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)))
}

impl Histogram {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, value: u64) {
        self.add_many(value, 1);
    }

    pub fn add_many(&mut self, value: u64, count: u64) {
        if count > 0 {
            *self.counts.entry(value).or_default() += count;
        }
    }

    pub fn merge(&mut self, other: &Histogram) {
        for (&v, &c) in &other.counts {
            self.add_many(v, c);
        }
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn get(&self, value: u64) -> u64 {
        self.counts.get(&value).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.counts.iter().map(|(&v, &c)| (v, c))
    }

    pub fn min(&self) -> Option<(u64, u64)> {
        self.counts.first_key_value().map(|(&v, &c)| (v, c))
    }

    pub fn max(&self) -> Option<(u64, u64)> {
        self.counts.last_key_value().map(|(&v, &c)| (v, c))
    }

    /// Most frequent value, ties broken toward the largest value.
    pub fn mode(&self) -> Option<(u64, u64)> {
        peak(self.counts.iter())
    }

    /// Sum of values divided by the total count, as a reduced fraction.
    pub fn mean(&self) -> Option<(u64, u64)> {
        let total = self.total();
        if total == 0 {
            return None;
        }
        let sum: u64 = self.counts.iter().map(|(v, c)| v * c).sum();
        let g = sum.gcd(&total);
        Some((sum / g, total / g))
    }

    fn parity(&self, rem: u64) -> ParityView {
        let part = || self.counts.iter().filter(move |(&v, _)| v % 2 == rem);
        ParityView {
            mass: part().map(|(_, c)| c).sum(),
            range: part()
                .next()
                .map(|(&lo, _)| (lo, *part().next_back().unwrap().0)),
            peak: peak(part()),
        }
    }

    pub fn even(&self) -> ParityView {
        self.parity(0)
    }

    pub fn odd(&self) -> ParityView {
        self.parity(1)
    }

    /// `value,count` lines, ascending.
    pub fn to_lines(&self, sep: char) -> String {
        self.iter().map(|(v, c)| format!("{v}{sep}{c}\n")).collect()
    }
}

impl FromIterator<u64> for Histogram {
    fn from_iter<I: IntoIterator<Item = u64>>(iter: I) -> Self {
        let mut h = Histogram::new();
        for v in iter {
            h.add(v);
        }
        h
    }
}

/// Summary statistics of the index over all connected graphs of one order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StatsRow {
    pub order: usize,
    pub count: u64,
    pub min: u64,
    pub min_mult: u64,
    pub max: u64,
    pub max_mult: u64,
    pub mode: u64,
    pub mode_mult: u64,
    pub avg_num: u64,
    pub avg_den: u64,
    pub avg_3dp: String,
}

/// `num / den` rounded half away from zero to three decimals.
pub fn render_3dp(num: u64, den: u64) -> String {
    let thousandths = (2 * num as u128 * 1000 + den as u128) / (2 * den as u128);
    format!("{}.{:03}", thousandths / 1000, thousandths % 1000)
}

impl StatsRow {
    pub const FIELDS: [&'static str; 11] = [
        "n", "count", "min", "min_mult", "max", "max_mult", "mode", "mode_mult", "avg_num", "avg_den", "avg_3dp",
    ];

    pub fn from_histogram(order: usize, h: &Histogram) -> Result<Self> {
        let (Some(min), Some(max), Some(mode), Some((num, den))) = (h.min(), h.max(), h.mode(), h.mean()) else {
            return Err(Error::EmptyStream);
        };
        Ok(StatsRow {
            order,
            count: h.total(),
            min: min.0,
            min_mult: min.1,
            max: max.0,
            max_mult: max.1,
            mode: mode.0,
            mode_mult: mode.1,
            avg_num: num,
            avg_den: den,
            avg_3dp: render_3dp(num, den),
        })
    }

    pub fn fields(&self) -> [String; 11] {
        [
            self.order.to_string(),
            self.count.to_string(),
            self.min.to_string(),
            self.min_mult.to_string(),
            self.max.to_string(),
            self.max_mult.to_string(),
            self.mode.to_string(),
            self.mode_mult.to_string(),
            self.avg_num.to_string(),
            self.avg_den.to_string(),
            self.avg_3dp.clone(),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mode_ties_prefer_larger_value() {
        let h: Histogram = [0, 2].into_iter().collect();
        assert_eq!(h.mode(), Some((2, 1)));
        let row = StatsRow::from_histogram(3, &h).unwrap();
        assert_eq!((row.min, row.max, row.mode, row.avg_3dp.as_str()), (0, 2, 2, "1.000"));
    }

    #[test]
    fn parity_views() {
        let h: Histogram = [0, 0, 4, 4, 4, 6, 9, 11, 11].into_iter().collect();
        assert_eq!(h.even().range, Some((0, 6)));
        assert_eq!(h.even().peak, Some((4, 3)));
        assert_eq!(h.odd().range, Some((9, 11)));
        assert_eq!(h.odd().mass + h.even().mass, h.total());
        let empty = Histogram::new();
        assert_eq!(empty.odd().range, None);
        assert_eq!(StatsRow::from_histogram(1, &empty), Err(Error::EmptyStream));
    }

    #[test]
    fn rounding() {
        assert_eq!(render_3dp(144, 21), "6.857");
        assert_eq!(render_3dp(35, 3), "11.667");
        assert_eq!(render_3dp(1, 2000), "0.001");
        assert_eq!(render_3dp(1, 2001), "0.000");
        assert_eq!(render_3dp(0, 1), "0.000");
    }

    #[test]
    fn merge_adds() {
        let mut a: Histogram = [1, 2, 2].into_iter().collect();
        let b: Histogram = [2, 5].into_iter().collect();
        a.merge(&b);
        assert_eq!(a.get(2), 3);
        assert_eq!(a.total(), 5);
        assert_eq!(a.mean(), Some((12, 5)));
        assert_eq!(a.to_lines(','), "1,1\n2,3\n5,1\n");
    }
}
