//! k-measure, Durfee square and (k,m)-Durfee polygon statistics.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// The minimum difference `k >= 1` required between consecutive members of
/// a measured subsequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Gap(u64);

impl Gap {
    pub fn new(k: u64) -> Result<Self> {
        if k == 0 {
            Err(Error::ZeroGap)
        } else {
            Ok(Self(k))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    /// All gaps `1..=k_max`.
    pub fn up_to(k_max: u64) -> impl Iterator<Item = Gap> {
        (1..=k_max).map(Gap)
    }
}

impl fmt::Display for Gap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Length of the longest subsequence of parts whose consecutive members
/// differ by at least `k`.
///
/// Scans largest-first and keeps every part that is at least `k` below the
/// last kept one.
pub fn k_measure(p: &Partition, k: Gap) -> usize {
    let mut count = 0;
    let mut last: Option<u64> = None;
    for &v in p.parts() {
        if last.map_or(true, |l| l >= v + k.0) {
            count += 1;
            last = Some(v);
        }
    }
    count
}

/// Longest-chain dynamic program over the parts; independent of the greedy
/// scan in [`k_measure`].
pub fn k_measure_oracle(p: &Partition, k: Gap) -> usize {
    let parts = p.parts();
    // longest[i]: longest valid chain ending at position i
    let mut longest = vec![1usize; parts.len()];
    for i in 0..parts.len() {
        for j in 0..i {
            if parts[j] >= parts[i] + k.0 {
                longest[i] = longest[i].max(longest[j] + 1);
            }
        }
    }
    longest.into_iter().max().unwrap_or(0)
}

/// Side of the Durfee square: the largest `m` with `λ_m >= m`.
pub fn durfee_side(p: &Partition) -> usize {
    p.parts()
        .iter()
        .enumerate()
        .take_while(|&(i, &v)| v > i as u64)
        .count()
}

/// The two part-count thresholds of the target set `D_{k,m}`: at least
/// `upper_count` parts `>= upper_min`, plus a further `lower_count` parts
/// `>= lower_min`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolygonThresholds {
    pub upper_count: usize,
    pub upper_min: u64,
    pub lower_count: usize,
    pub lower_min: u64,
}

impl PolygonThresholds {
    pub fn new(k: Gap, m: usize) -> Self {
        let spread = k.0 * (m as u64).saturating_sub(1);
        Self {
            upper_count: m / 2,
            upper_min: 1 + spread.div_ceil(2),
            lower_count: m.div_ceil(2),
            lower_min: 1 + spread / 2,
        }
    }

    pub fn order(&self) -> usize {
        self.upper_count + self.lower_count
    }

    /// Minimum value required at selection position `t` (0-based).
    pub fn min_at(&self, t: usize) -> u64 {
        if t < self.upper_count {
            self.upper_min
        } else {
            self.lower_min
        }
    }

    /// Whether `p` meets both thresholds, counting the two groups
    /// separately.
    pub fn satisfied_by(&self, p: &Partition) -> bool {
        let upper = p.count_at_least(self.upper_min);
        let lower = p.count_at_least(self.lower_min);
        // parts >= upper_min also count toward lower_min
        upper >= self.upper_count && lower >= self.upper_count + self.lower_count
    }

    /// Human-readable statement of which threshold fails, if any.
    pub fn violation(&self, p: &Partition) -> Option<String> {
        if self.satisfied_by(p) {
            return None;
        }
        let upper = p.count_at_least(self.upper_min);
        let lower = p.count_at_least(self.lower_min);
        Some(format!(
            "needs {} part(s) >= {} plus {} more part(s) >= {}; has {} part(s) >= {} and {} part(s) >= {}",
            self.upper_count,
            self.upper_min,
            self.lower_count,
            self.lower_min,
            upper,
            self.upper_min,
            lower,
            self.lower_min
        ))
    }
}

/// Row profile of the (k,m)-polygon, top row first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonShape {
    k: Gap,
    m: usize,
    rows: Vec<u64>,
}

impl PolygonShape {
    pub fn k(&self) -> Gap {
        self.k
    }

    pub fn order(&self) -> usize {
        self.m
    }

    pub fn row_lengths(&self) -> &[u64] {
        &self.rows
    }

    pub fn node_count(&self) -> u64 {
        self.rows.iter().sum()
    }

    pub fn is_rectangle(&self) -> bool {
        self.rows.windows(2).all(|w| w[0] == w[1])
    }

    /// Whether the Ferrers diagram of `p` covers every row of the shape.
    pub fn fits_in(&self, p: &Partition) -> bool {
        self.rows.iter().enumerate().all(|(i, &r)| p.part(i) >= r)
    }
}

/// Serialized as the bare array of row lengths.
impl Serialize for PolygonShape {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows.serialize(serializer)
    }
}

/// The (k,m)-polygon: `m` rows of `1 + k(m-1)/2` nodes when `k(m-1)` is
/// even, otherwise `m/2` rows of `(k(m-1)+3)/2` over `m/2` rows of
/// `(k(m-1)+1)/2`.
pub fn km_polygon_shape(k: Gap, m: usize) -> PolygonShape {
    let t = PolygonThresholds::new(k, m);
    let rows = (0..m).map(|i| t.min_at(i)).collect();
    PolygonShape { k, m, rows }
}

/// Threshold form of (k,m)-polygon containment. Always true for `m = 0`.
pub fn contains_km_polygon(p: &Partition, k: Gap, m: usize) -> bool {
    PolygonThresholds::new(k, m).satisfied_by(p)
}

/// Largest `m` whose (k,m)-polygon fits in the Ferrers diagram of `p`.
///
/// Scans upward and stops at the first miss; containment is monotone in `m`.
pub fn durfee_polygon_order(p: &Partition, k: Gap) -> usize {
    let mut m = 0;
    while m < p.len() && contains_km_polygon(p, k, m + 1) {
        m += 1;
    }
    m
}

/// Dot-grid Ferrers diagram: nodes inside `shape` drawn as `#`, the rest as
/// `.`, one row per part.
pub fn render_ferrers(p: &Partition, shape: Option<&PolygonShape>) -> String {
    let mut out = String::new();
    for (i, &v) in p.parts().iter().enumerate() {
        let inside = shape.and_then(|s| s.row_lengths().get(i)).copied().unwrap_or(0);
        let row: Vec<&str> = (0..v).map(|j| if j < inside { "#" } else { "." }).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}
