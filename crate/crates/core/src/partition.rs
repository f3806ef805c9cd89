//! Canonical integer partitions.
//!
//! A [`Partition`] is stored as an explicit list of parts in non-increasing
//! order. All positions are 0-based; where a formula is written with 1-based
//! `λ_i`, the caller translates `i` to `i - 1` once.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition of `weight()` into `len()` positive parts, largest first.
///
/// The derived ordering is lexicographic on the part list.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    /// Builds a partition from values given in any order.
    ///
    /// Rejects zero and negative values; the empty input is the empty
    /// partition of 0.
    pub fn new<I>(values: I) -> Result<Self>
    where
        I: IntoIterator<Item = i64>,
    {
        let parts = values
            .into_iter()
            .map(|v| if v >= 1 { Ok(v as u64) } else { Err(Error::NonPositivePart(v)) })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_unsorted(parts))
    }

    /// Like [`Partition::new`] for unsigned input.
    pub fn from_parts(mut parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::NonPositivePart(0));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    // Caller guarantees positivity.
    pub(crate) fn from_unsorted(mut parts: Vec<u64>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    // Caller guarantees positivity and non-increasing order.
    pub(crate) fn from_canonical(parts: Vec<u64>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&v| v >= 1));
        Self { parts }
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    /// The number being partitioned.
    pub fn weight(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part at 0-based position `i`, or 0 past the end (the Ferrers diagram
    /// has empty rows below the last part).
    pub fn part(&self, i: usize) -> u64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of parts that are at least `threshold`.
    pub fn count_at_least(&self, threshold: u64) -> usize {
        self.parts.partition_point(|&v| v >= threshold)
    }

    /// Number of distinct part values.
    pub fn distinct_values(&self) -> usize {
        let mut count = 0;
        let mut last = None;
        for &v in &self.parts {
            if last != Some(v) {
                count += 1;
                last = Some(v);
            }
        }
        count
    }

    /// Values at the positions in `s`, in index order.
    pub fn subsequence_values(&self, s: &PartIndexSet) -> Result<Vec<u64>> {
        s.check_range(self.len())?;
        Ok(s.indices().iter().map(|&i| self.parts[i]).collect())
    }

    /// Replaces the parts at the positions in `s` by `new_values` and
    /// re-sorts. Parts outside `s` are left unchanged.
    pub fn replace_parts(&self, s: &PartIndexSet, new_values: &[i64]) -> Result<Partition> {
        s.check_range(self.len())?;
        if new_values.len() != s.len() {
            return Err(Error::LengthMismatch { expected: s.len(), got: new_values.len() });
        }
        let mut parts = self.parts.clone();
        for (&i, &v) in s.indices().iter().zip(new_values) {
            if v < 1 {
                return Err(Error::NonPositivePart(v));
            }
            parts[i] = v as u64;
        }
        Ok(Self::from_unsorted(parts))
    }
}

impl TryFrom<Vec<u64>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u64>) -> Result<Self> {
        Self::from_parts(parts)
    }
}

impl From<Partition> for Vec<u64> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Parses `"9,9,8,7,4,3,1"` or `"9+9+8+7+4+3+1"` in any order. Whitespace is
/// ignored and the empty string is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(Self::empty());
        }
        let parse_err = |reason: String| Error::Parse { input: s.to_string(), reason };
        let values = trimmed
            .split([',', '+'])
            .map(|tok| {
                let tok = tok.trim();
                tok.parse::<i64>()
                    .map_err(|e| parse_err(format!("{tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(values).map_err(|e| parse_err(e.to_string()))
    }
}

/// Strictly increasing positions into a partition's part list.
///
/// Because parts are non-increasing, the referenced values always form a
/// non-increasing subsequence.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct PartIndexSet {
    indices: Vec<usize>,
}

impl PartIndexSet {
    pub fn new(indices: Vec<usize>) -> Result<Self> {
        if indices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::IndicesNotIncreasing);
        }
        Ok(Self { indices })
    }

    /// `{0, 1, .., len - 1}`.
    pub fn all(len: usize) -> Self {
        Self { indices: (0..len).collect() }
    }

    pub(crate) fn from_sorted(indices: Vec<usize>) -> Self {
        debug_assert!(indices.windows(2).all(|w| w[0] < w[1]));
        Self { indices }
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    fn check_range(&self, len: usize) -> Result<()> {
        match self.indices.last() {
            Some(&index) if index >= len => Err(Error::IndexOutOfRange { index, len }),
            _ => Ok(()),
        }
    }
}
