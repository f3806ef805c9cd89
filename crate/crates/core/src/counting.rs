//! Exhaustive enumeration and exact counting tables.
//!
//! Every table is built by enumerating all partitions of each `n <= n_max`,
//! sharded by `n` across the rayon pool and merged in key order. Generating
//! function oracles built on [`SeriesPoly`] are computed without enumeration.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::series::SeriesPoly;
use crate::statistics::{contains_km_polygon, durfee_polygon_order, durfee_side, k_measure, Gap};

/// Streams the partitions of `n` in reverse-lexicographic order, starting
/// from `(n)` and ending at `(1, .., 1)`. `n = 0` yields the empty partition
/// once.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<u64>>,
}

impl Partitions {
    pub fn new(n: u64) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        Self { current: Some(first) }
    }

    fn advance(parts: &mut Vec<u64>) -> bool {
        // trailing 1s are absorbed into the rightmost part that can shrink
        let Some(pos) = parts.iter().rposition(|&v| v > 1) else {
            return false;
        };
        let mut remaining = (parts.len() - pos) as u64;
        let size = parts[pos] - 1;
        parts.truncate(pos);
        parts.push(size);
        while remaining >= size {
            parts.push(size);
            remaining -= size;
        }
        if remaining > 0 {
            parts.push(remaining);
        }
        true
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.current.as_mut()?;
        let out = Partition::from_canonical(current.clone());
        if !Self::advance(current) {
            self.current = None;
        }
        Some(out)
    }
}

pub fn enumerate_partitions(n: u64) -> Partitions {
    Partitions::new(n)
}

/// `p(0..=n_max)` by Euler's pentagonal number recurrence.
pub fn count_p(n_max: u64) -> Result<Vec<u128>> {
    let n_max = n_max as usize;
    let mut p = vec![0i128; n_max + 1];
    p[0] = 1;
    for n in 1..=n_max {
        let mut total: i128 = 0;
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > n {
                break;
            }
            let sign = if j % 2 == 1 { 1 } else { -1 };
            let g2 = j * (3 * j + 1) / 2;
            let mut term = p[n - g1];
            if g2 <= n {
                term = term.checked_add(p[n - g2]).ok_or(Error::Overflow)?;
            }
            total = total.checked_add(sign * term).ok_or(Error::Overflow)?;
        }
        p[n] = total;
    }
    Ok(p.into_iter().map(|v| v as u128).collect())
}

/// Largest `m` with `m + k m(m-1)/2 <= n`: the smallest weight carrying a
/// gap-`k` chain of length `m`, which is also the node count of the
/// (k,m)-polygon. Bounds every statistic tabulated here.
pub fn order_bound(n: u64, k: Gap) -> usize {
    let k = k.get();
    let mut m = 0u64;
    while (m + 1) + k * (m + 1) * m / 2 <= n {
        m += 1;
    }
    m as usize
}

/// Which partition statistic a table counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Statistic {
    KMeasure,
    DurfeeSide,
    PolygonOrder,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CountKind {
    /// k-measure exactly `m`.
    A,
    /// Durfee side exactly `m`.
    B,
    /// k-measure at least `m`.
    C,
    /// Contains the (k,m)-polygon.
    D,
    /// (k,m)-Durfee polygon order exactly `m`.
    PolygonOrder,
    /// Statistic exactly `m` with exactly `l` parts.
    ByLength,
}

impl fmt::Display for CountKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CountKind::A => "a",
            CountKind::B => "b",
            CountKind::C => "c",
            CountKind::D => "d",
            CountKind::PolygonOrder => "polygon-order",
            CountKind::ByLength => "by-length",
        })
    }
}

/// `(n, m)` or `(n, m, l)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CountKey {
    pub n: u64,
    pub m: usize,
    pub l: Option<usize>,
}

/// Exact counts keyed by [`CountKey`]. Missing keys count zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    kind: CountKind,
    statistic: Statistic,
    k: Option<Gap>,
    entries: BTreeMap<CountKey, u128>,
}

impl CountTable {
    fn new(kind: CountKind, statistic: Statistic, k: Option<Gap>) -> Self {
        Self { kind, statistic, k, entries: BTreeMap::new() }
    }

    pub fn kind(&self) -> CountKind {
        self.kind
    }

    pub fn statistic(&self) -> Statistic {
        self.statistic
    }

    pub fn k(&self) -> Option<Gap> {
        self.k
    }

    pub fn entries(&self) -> &BTreeMap<CountKey, u128> {
        &self.entries
    }

    pub fn get(&self, n: u64, m: usize) -> u128 {
        self.entries.get(&CountKey { n, m, l: None }).copied().unwrap_or(0)
    }

    pub fn get_by_length(&self, n: u64, m: usize, l: usize) -> u128 {
        self.entries.get(&CountKey { n, m, l: Some(l) }).copied().unwrap_or(0)
    }

    /// Largest `n` present.
    pub fn n_max(&self) -> Option<u64> {
        self.entries.keys().next_back().map(|key| key.n)
    }

    /// Keys present for a given `n`, in order.
    pub fn keys_for(&self, n: u64) -> impl Iterator<Item = &CountKey> {
        let lo = CountKey { n, m: 0, l: None };
        self.entries.range(lo..).map(|(k, _)| k).take_while(move |k| k.n == n)
    }

    fn has_length(&self) -> bool {
        self.kind == CountKind::ByLength
    }

    fn add(&mut self, key: CountKey, count: u128) {
        let slot = self.entries.entry(key).or_insert(0);
        *slot = slot.checked_add(count).expect("count overflowed 128 bits");
    }

    fn merge(&mut self, other: BTreeMap<CountKey, u128>) {
        for (key, count) in other {
            self.add(key, count);
        }
    }

    /// `n,m[,l],count` rows in key order.
    pub fn to_csv(&self) -> String {
        let mut out = String::from(if self.has_length() { "n,m,l,count\n" } else { "n,m,count\n" });
        for (key, count) in &self.entries {
            match key.l {
                Some(l) => writeln!(out, "{},{},{},{}", key.n, key.m, l, count),
                None => writeln!(out, "{},{},{}", key.n, key.m, count),
            }
            .expect("writing to a String cannot fail");
        }
        out
    }

    /// Nested maps `n -> m [-> l] -> count` with numeric keys in order.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        #[serde(untagged)]
        enum Inner {
            Flat(BTreeMap<usize, u128>),
            ByLength(BTreeMap<usize, BTreeMap<usize, u128>>),
        }
        #[derive(Serialize)]
        struct Doc {
            kind: String,
            statistic: Statistic,
            k: Option<Gap>,
            counts: BTreeMap<u64, Inner>,
        }
        let mut counts: BTreeMap<u64, Inner> = BTreeMap::new();
        for (key, &count) in &self.entries {
            let inner = counts.entry(key.n).or_insert_with(|| {
                if self.has_length() {
                    Inner::ByLength(BTreeMap::new())
                } else {
                    Inner::Flat(BTreeMap::new())
                }
            });
            match (inner, key.l) {
                (Inner::Flat(map), None) => {
                    map.insert(key.m, count);
                }
                (Inner::ByLength(map), Some(l)) => {
                    map.entry(key.m).or_default().insert(l, count);
                }
                _ => unreachable!("key shape matches table kind"),
            }
        }
        let doc = Doc {
            kind: self.kind.to_string(),
            statistic: self.statistic,
            k: self.k,
            counts,
        };
        serde_json::to_string_pretty(&doc).expect("count tables always serialize")
    }
}

fn key(n: u64, m: usize) -> CountKey {
    CountKey { n, m, l: None }
}

/// Counts `#{p |- n : stat(p) = m}` with explicit zero rows for `m <= bound(n)`.
fn tabulate_exact<F, B>(
    kind: CountKind,
    statistic: Statistic,
    k: Option<Gap>,
    n_max: u64,
    bound: B,
    stat: F,
) -> CountTable
where
    F: Fn(&Partition) -> usize + Sync,
    B: Fn(u64) -> usize + Sync,
{
    let shards: Vec<BTreeMap<CountKey, u128>> = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let mut local: BTreeMap<CountKey, u128> =
                (0..=bound(n)).map(|m| (key(n, m), 0)).collect();
            for p in enumerate_partitions(n) {
                *local.entry(key(n, stat(&p))).or_insert(0) += 1;
            }
            local
        })
        .collect();
    let mut table = CountTable::new(kind, statistic, k);
    for shard in shards {
        table.merge(shard);
    }
    table
}

/// Counts `#{p |- n : holds(p, m)}` for every `m <= bound(n)`.
fn tabulate_at_least<F, B>(
    kind: CountKind,
    statistic: Statistic,
    k: Option<Gap>,
    n_max: u64,
    bound: B,
    holds: F,
) -> CountTable
where
    F: Fn(&Partition, usize) -> bool + Sync,
    B: Fn(u64) -> usize + Sync,
{
    let shards: Vec<BTreeMap<CountKey, u128>> = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let top = bound(n);
            let mut counts = vec![0u128; top + 1];
            for p in enumerate_partitions(n) {
                for (m, slot) in counts.iter_mut().enumerate() {
                    if holds(&p, m) {
                        *slot += 1;
                    }
                }
            }
            counts.into_iter().enumerate().map(|(m, c)| (key(n, m), c)).collect()
        })
        .collect();
    let mut table = CountTable::new(kind, statistic, k);
    for shard in shards {
        table.merge(shard);
    }
    table
}

/// `a_k(n, m)`: partitions of `n` with k-measure exactly `m`.
pub fn table_a(k: Gap, n_max: u64) -> CountTable {
    tabulate_exact(CountKind::A, Statistic::KMeasure, Some(k), n_max, |n| order_bound(n, k), |p| {
        k_measure(p, k)
    })
}

/// `b(n, m)`: partitions of `n` with Durfee square of side `m`.
pub fn table_b_durfee(n_max: u64) -> CountTable {
    let two = Gap::new(2).expect("2 is a valid gap");
    tabulate_exact(CountKind::B, Statistic::DurfeeSide, None, n_max, |n| order_bound(n, two), durfee_side)
}

/// Partitions of `n` whose (k,m)-Durfee polygon has order exactly `m`.
pub fn table_polygon_order(k: Gap, n_max: u64) -> CountTable {
    tabulate_exact(
        CountKind::PolygonOrder,
        Statistic::PolygonOrder,
        Some(k),
        n_max,
        |n| order_bound(n, k),
        |p| durfee_polygon_order(p, k),
    )
}

/// `c_k(n, m)`: partitions of `n` with k-measure at least `m`.
pub fn table_c(k: Gap, n_max: u64) -> CountTable {
    tabulate_at_least(CountKind::C, Statistic::KMeasure, Some(k), n_max, |n| order_bound(n, k), |p, m| {
        k_measure(p, k) >= m
    })
}

/// `d_k(n, m)`: partitions of `n` containing the (k,m)-polygon.
pub fn table_d(k: Gap, n_max: u64) -> CountTable {
    tabulate_at_least(
        CountKind::D,
        Statistic::PolygonOrder,
        Some(k),
        n_max,
        |n| order_bound(n, k),
        |p, m| contains_km_polygon(p, k, m),
    )
}

/// Length-refined counts for both sides of the refined identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ByLengthTables {
    pub measure: CountTable,
    pub polygon: CountTable,
}

/// `(n, m, l)` counts of k-measure and of polygon order, nonzero entries
/// only.
pub fn table_by_length(k: Gap, n_max: u64) -> ByLengthTables {
    let shards: Vec<(BTreeMap<CountKey, u128>, BTreeMap<CountKey, u128>)> = (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let mut measure = BTreeMap::new();
            let mut polygon = BTreeMap::new();
            for p in enumerate_partitions(n) {
                let l = Some(p.len());
                *measure.entry(CountKey { n, m: k_measure(&p, k), l }).or_insert(0) += 1;
                *polygon.entry(CountKey { n, m: durfee_polygon_order(&p, k), l }).or_insert(0) += 1;
            }
            (measure, polygon)
        })
        .collect();
    let mut measure = CountTable::new(CountKind::ByLength, Statistic::KMeasure, Some(k));
    let mut polygon = CountTable::new(CountKind::ByLength, Statistic::PolygonOrder, Some(k));
    for (a, b) in shards {
        measure.merge(a);
        polygon.merge(b);
    }
    ByLengthTables { measure, polygon }
}

/// `E(n) = Σ_{p |- n} (-1)^{l(p) + μ_2(p)}` for `n <= n_max`.
pub fn signed_excess(n_max: u64) -> Vec<i128> {
    let two = Gap::new(2).expect("2 is a valid gap");
    (0..=n_max)
        .into_par_iter()
        .map(|n| {
            enumerate_partitions(n)
                .map(|p| if (p.len() + k_measure(&p, two)) % 2 == 0 { 1 } else { -1 })
                .sum()
        })
        .collect()
}

/// Partitions into distinct odd parts: coefficients of `Π (1 + q^{2i-1})`.
pub fn distinct_odd_count(n_max: u64) -> Vec<i128> {
    let degree = n_max as usize;
    let mut s = SeriesPoly::one(degree);
    for part in (1..=degree).step_by(2) {
        s.mul_binomial(1, part);
    }
    s.coefficients().to_vec()
}

/// Partitions into distinct odd parts, counted by enumeration.
pub fn distinct_odd_count_direct(n_max: u64) -> Vec<u128> {
    (0..=n_max)
        .into_par_iter()
        .map(|n| {
            enumerate_partitions(n)
                .filter(|p| {
                    p.parts().iter().all(|v| v % 2 == 1) && p.distinct_values() == p.len()
                })
                .count() as u128
        })
        .collect()
}

/// Coefficients of `q^{m^2} / ((1-q)(1-q^2)..(1-q^m))^2` up to `q^{n_max}`.
pub fn durfee_gf_oracle(m: usize, n_max: u64) -> Vec<i128> {
    let mut s = SeriesPoly::one(n_max as usize);
    for i in 1..=m {
        s.div_one_minus(i);
        s.div_one_minus(i);
    }
    s.shift(m * m);
    s.coefficients().to_vec()
}
