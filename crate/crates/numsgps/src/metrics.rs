//! The Wilf number, the Eliahou number, and the threshold-interval
//! decomposition they are built from.
//!
//! For a numerical semigroup with primitives `P`, left elements `L`,
//! conductor `c`, multiplicity `m` and depth `q`:
//!
//! ```text
//! W = |P| * |L| - c
//! E = |P ∩ L| * |L| - q * |D| + q*m - c
//! ```
//!
//! where `D` is the set of non-primitives in the threshold interval
//! `{c, ..., c+m-1}`. Writing `P_R` for the primitives in the threshold
//! interval, the two numbers are tied together by
//!
//! ```text
//! W - E = |P_R| * (|L| - q)
//! ```
//!
//! and `|L| >= q` always, so a nonnegative Eliahou number forces a
//! nonnegative Wilf number. Wilf's conjecture asserts `W >= 0` for every
//! numerical semigroup.

use std::ops::Range;

use crate::semigroup::NumericalSemigroup;

/// The threshold interval `{c, ..., c+m-1}` split into primitives and
/// non-primitives, plus the primitives below the conductor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdPartition {
    /// `c..c+m` as a half-open range.
    pub threshold: Range<u64>,
    /// Primitives strictly below the conductor (`P ∩ L`).
    pub left_primitives: Vec<u64>,
    /// Primitives inside the threshold interval (`P_R`).
    pub right_primitives: Vec<u64>,
    /// Non-primitives inside the threshold interval (`D`).
    pub decomposables: Vec<u64>,
}

pub fn threshold_partition(s: &NumericalSemigroup) -> ThresholdPartition {
    let c = s.conductor();
    let m = s.multiplicity();
    let prims = s.minimal_generators();
    let left_primitives: Vec<u64> = prims.iter().copied().filter(|&p| p < c).collect();
    let right_primitives: Vec<u64> = prims
        .iter()
        .copied()
        .filter(|&p| p >= c && p < c + m)
        .collect();
    let decomposables: Vec<u64> = (c..c + m)
        .filter(|v| !right_primitives.contains(v))
        .collect();
    ThresholdPartition {
        threshold: c..c + m,
        left_primitives,
        right_primitives,
        decomposables,
    }
}

/// Wilf number `W = |P| * |L| - c`; nonnegative iff the semigroup is Wilf.
pub fn wilf_number(s: &NumericalSemigroup) -> i64 {
    let e = s.embedding_dimension() as i128;
    let l = s.left_count() as i128;
    let c = s.conductor() as i128;
    (e * l - c) as i64
}

/// Eliahou number `E = |P ∩ L| * |L| - q*|D| + q*m - c` with
/// `D = {c,...,c+m-1} \ P`.
pub fn eliahou_number(s: &NumericalSemigroup) -> i64 {
    let c = s.conductor();
    let m = s.multiplicity();
    let prims = s.minimal_generators();
    let pl = prims.iter().filter(|&&p| p < c).count() as i128;
    let pr = prims.iter().filter(|&&p| p >= c && p < c + m).count() as i128;
    let l = s.left_count() as i128;
    let q = s.depth() as i128;
    let d = m as i128 - pr;
    (pl * l - q * d + q * m as i128 - c as i128) as i64
}
