//! The balancing maps between `C_{k,m}` (partitions with a length-`m`
//! subsequence of gap `>= k`) and `D_{k,m}` (partitions containing the
//! (k,m)-polygon).
//!
//! `phi` shifts a selected gap-`k` subsequence by the [`OffsetVector`] so the
//! lower bounds `1 + k(m - i)` are levelled to the polygon rows; `psi` applies
//! the negated offsets. Which parts get selected is not determined by the
//! construction, so every entry point takes an explicit [`SelectionStrategy`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{PartIndexSet, Partition};
use crate::statistics::{k_measure, Gap, PolygonThresholds};

/// The `m` signed adjustments applied to a selected subsequence.
///
/// Position `j` (1-based) in the first half moves down by
/// `floor(k(m + 1 - 2j) / 2)`; position `j` in the second half moves up by
/// `floor(k(2j - m - 1) / 2)`. The vector sums to zero and is antisymmetric.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OffsetVector {
    pub k: Gap,
    pub m: usize,
    pub deltas: Vec<i64>,
}

pub fn offset_vector(k: Gap, m: usize) -> OffsetVector {
    let k64 = k.get() as i64;
    let m64 = m as i64;
    let deltas = (1..=m64)
        .map(|j| {
            if j <= m64 / 2 {
                -(k64 * (m64 + 1 - 2 * j)).div_euclid(2)
            } else {
                (k64 * (2 * j - m64 - 1)).div_euclid(2)
            }
        })
        .collect();
    OffsetVector { k, m, deltas }
}

/// Rule resolving which parts the maps act on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SelectionStrategy {
    /// Largest parts first.
    GreedyTop,
    /// Smallest parts first.
    GreedyBottom,
    /// Lexicographically smallest valid index set.
    MinIndexLex,
    /// Lexicographically largest valid index set.
    MaxIndexLex,
}

impl SelectionStrategy {
    pub const ALL: [SelectionStrategy; 4] = [
        SelectionStrategy::GreedyTop,
        SelectionStrategy::GreedyBottom,
        SelectionStrategy::MinIndexLex,
        SelectionStrategy::MaxIndexLex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SelectionStrategy::GreedyTop => "greedy-top",
            SelectionStrategy::GreedyBottom => "greedy-bottom",
            SelectionStrategy::MinIndexLex => "min-index-lex",
            SelectionStrategy::MaxIndexLex => "max-index-lex",
        }
    }
}

impl fmt::Display for SelectionStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SelectionStrategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|st| st.name() == s)
            .ok_or_else(|| Error::UnknownStrategy(s.to_string()))
    }
}

/// Picks the lexicographically smallest or largest index sequence of length
/// `m`, where `allowed(t, prev, i)` says index `i` may sit at position `t`
/// after `prev`, and `completes(t, i)` says the remaining positions can still
/// be filled after placing `i` at `t`.
fn lex_extreme(
    len: usize,
    m: usize,
    largest: bool,
    allowed: impl Fn(usize, Option<usize>, usize) -> bool,
    completes: impl Fn(usize, usize) -> bool,
) -> Option<Vec<usize>> {
    let mut chosen = Vec::with_capacity(m);
    let mut prev = None;
    for t in 0..m {
        let start = prev.map_or(0, |p| p + 1);
        let mut candidates = (start..len).filter(|&i| allowed(t, prev, i) && completes(t, i));
        let pick = if largest { candidates.last() } else { candidates.next() }?;
        chosen.push(pick);
        prev = Some(pick);
    }
    Some(chosen)
}

/// Indices of `m` parts forming a subsequence with consecutive gaps `>= k`.
pub fn select_forward(
    p: &Partition,
    k: Gap,
    m: usize,
    strategy: SelectionStrategy,
) -> Result<PartIndexSet> {
    let measure = k_measure(p, k);
    if measure < m {
        return Err(Error::NotInC { k: k.get(), m, measure });
    }
    let parts = p.parts();
    let gap = k.get();
    let indices = match strategy {
        SelectionStrategy::GreedyTop => {
            let mut chosen = Vec::with_capacity(m);
            for (i, &v) in parts.iter().enumerate() {
                if chosen.len() == m {
                    break;
                }
                if chosen.last().map_or(true, |&j| parts[j] >= v + gap) {
                    chosen.push(i);
                }
            }
            chosen
        }
        SelectionStrategy::GreedyBottom => {
            let mut chosen = Vec::with_capacity(m);
            for (i, &v) in parts.iter().enumerate().rev() {
                if chosen.len() == m {
                    break;
                }
                if chosen.last().map_or(true, |&j| v >= parts[j] + gap) {
                    chosen.push(i);
                }
            }
            chosen.reverse();
            chosen
        }
        SelectionStrategy::MinIndexLex | SelectionStrategy::MaxIndexLex => {
            // chain_from[i]: longest gap-k chain starting at position i
            let mut chain_from = vec![1usize; parts.len()];
            for i in (0..parts.len()).rev() {
                for j in i + 1..parts.len() {
                    if parts[i] >= parts[j] + gap {
                        chain_from[i] = chain_from[i].max(chain_from[j] + 1);
                    }
                }
            }
            lex_extreme(
                parts.len(),
                m,
                strategy == SelectionStrategy::MaxIndexLex,
                |_, prev, i| prev.map_or(true, |j| parts[j] >= parts[i] + gap),
                |t, i| chain_from[i] >= m - t,
            )
            .expect("k-measure guarantees a selection exists")
        }
    };
    debug_assert_eq!(indices.len(), m);
    Ok(PartIndexSet::from_sorted(indices))
}

/// Indices of `m` parts meeting the `D_{k,m}` thresholds position by
/// position: the first `floor(m/2)` at least `1 + ceil(k(m-1)/2)`, the rest
/// at least `1 + floor(k(m-1)/2)`.
pub fn select_inverse(
    p: &Partition,
    k: Gap,
    m: usize,
    strategy: SelectionStrategy,
) -> Result<PartIndexSet> {
    let t = PolygonThresholds::new(k, m);
    if let Some(detail) = t.violation(p) {
        return Err(Error::NotInD { k: k.get(), m, detail });
    }
    let parts = p.parts();
    let indices = match strategy {
        SelectionStrategy::GreedyTop => (0..m).collect(),
        SelectionStrategy::GreedyBottom => {
            let upper = p.count_at_least(t.upper_min);
            let lower = p.count_at_least(t.lower_min);
            let lower_start = lower - t.lower_count;
            let upper_end = upper.min(lower_start);
            (upper_end - t.upper_count..upper_end).chain(lower_start..lower).collect()
        }
        SelectionStrategy::MinIndexLex | SelectionStrategy::MaxIndexLex => lex_extreme(
            parts.len(),
            m,
            strategy == SelectionStrategy::MaxIndexLex,
            |pos, _, i| parts[i] >= t.min_at(pos),
            |pos, i| (pos + 1..m).all(|s| parts.get(i + s - pos).is_some_and(|&v| v >= t.min_at(s))),
        )
        .expect("thresholds guarantee a selection exists"),
    };
    debug_assert_eq!(indices.len(), m);
    Ok(PartIndexSet::from_sorted(indices))
}

/// A map application together with the parts it touched.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MapOutcome {
    pub image: Partition,
    pub selected: PartIndexSet,
    pub selected_values: Vec<u64>,
    pub offsets: Vec<i64>,
}

fn shift(p: &Partition, selected: PartIndexSet, offsets: Vec<i64>) -> Result<MapOutcome> {
    let selected_values = p.subsequence_values(&selected)?;
    let new_values: Vec<i64> = selected_values
        .iter()
        .zip(&offsets)
        .map(|(&v, &d)| v as i64 + d)
        .collect();
    let image = p.replace_parts(&selected, &new_values)?;
    Ok(MapOutcome { image, selected, selected_values, offsets })
}

/// Forward map with the selection and offsets exposed.
pub fn phi_traced(
    p: &Partition,
    k: Gap,
    m: usize,
    strategy: SelectionStrategy,
) -> Result<MapOutcome> {
    let selected = select_forward(p, k, m, strategy)?;
    let outcome = shift(p, selected, offset_vector(k, m).deltas)?;
    debug_assert!(
        PolygonThresholds::new(k, m).satisfied_by(&outcome.image),
        "phi left D_{{{k},{m}}} on {p}"
    );
    Ok(outcome)
}

/// Inverse map with the selection and offsets exposed. The offsets reported
/// are the negated [`OffsetVector`].
pub fn psi_traced(
    p: &Partition,
    k: Gap,
    m: usize,
    strategy: SelectionStrategy,
) -> Result<MapOutcome> {
    let selected = select_inverse(p, k, m, strategy)?;
    let negated = offset_vector(k, m).deltas.into_iter().map(|d| -d).collect();
    shift(p, selected, negated)
}

/// Maps `p` in `C_{k,m}` into `D_{k,m}`, preserving weight and length.
pub fn phi(p: &Partition, k: Gap, m: usize, strategy: SelectionStrategy) -> Result<Partition> {
    phi_traced(p, k, m, strategy).map(|o| o.image)
}

/// Applies the negated offsets to a threshold-meeting selection of `p` in
/// `D_{k,m}`.
///
/// The image is not guaranteed to lie in `C_{k,m}`: when `k` is odd and `m`
/// is even the two middle offsets differ by only `k - 1`.
pub fn psi(p: &Partition, k: Gap, m: usize, strategy: SelectionStrategy) -> Result<Partition> {
    psi_traced(p, k, m, strategy).map(|o| o.image)
}

/// Whether `psi(phi(p)) == p` under `strategy`.
pub fn round_trip_check(
    p: &Partition,
    k: Gap,
    m: usize,
    strategy: SelectionStrategy,
) -> Result<bool> {
    let image = phi(p, k, m, strategy)?;
    Ok(psi(&image, k, m, strategy)? == *p)
}
