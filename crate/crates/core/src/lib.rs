//! Integer partition statistics around the k-measure: the longest
//! subsequence of parts with consecutive differences at least `k`.
//!
//! - [`partition`]: canonical partitions and part selections.
//! - [`statistics`]: k-measure, Durfee square, (k,m)-polygons.
//! - [`bijection`]: the offset maps between `C_{k,m}` and `D_{k,m}`.
//! - [`counting`]: enumeration, exact count tables, series oracles.
//! - [`verify`]: exhaustive identity checks with JSON reports.

pub mod bijection;
pub mod counting;
pub mod error;
pub mod partition;
pub mod series;
pub mod statistics;
pub mod verify;

pub use bijection::{offset_vector, phi, psi, round_trip_check, OffsetVector, SelectionStrategy};
pub use error::{Error, Result};
pub use partition::{PartIndexSet, Partition};
pub use statistics::{
    contains_km_polygon, durfee_polygon_order, durfee_side, k_measure, k_measure_oracle,
    km_polygon_shape, Gap, PolygonShape,
};
