//! Exact counts for the mirror-shift construction.
//!
//! Everything here is arbitrary precision: factorials leave the `u64` range at
//! `n = 21`. The ring-order recurrence is kept in its original recursive form
//! so that it checks the closed forms instead of restating them.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::{Error, Result};

pub fn factorial(n: usize) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// `(2n - 1)(n - 1)! - sum_{i=1}^{n-2} i^2 i!`: all bead symbols minus all overlaps.
pub fn length_closed_form(n: usize) -> BigUint {
    assert!(n >= 1, "length is defined for n >= 1");
    let beads = factorial(n - 1) * (2 * n - 1);
    let overlap: BigUint = (1..n.saturating_sub(1))
        .map(|i| factorial(i) * (i * i))
        .sum();
    beads - overlap
}

/// `1! + 2! + ... + n!`.
pub fn length_sum_factorials(n: usize) -> BigUint {
    let mut term = BigUint::one();
    let mut total = BigUint::zero();
    for k in 1..=n {
        term *= k;
        total += &term;
    }
    total
}

/// Number of overlaps of length `j` in the output: `j * j!`.
pub fn intersection_count(j: usize) -> BigUint {
    factorial(j) * j
}

/// Number of overlaps between consecutive `k`-rings, from the ring-order recurrence
/// `i(k) = (n - k - 1)! - 1 - sum_{j=k+1}^{n-3} i(j)`.
pub fn intersections_by_ring_order(n: usize, k: usize) -> Result<BigUint> {
    if n < 3 || k > n - 3 {
        return Err(Error::RingOrderOutOfRange { r: k, n, max: n.saturating_sub(3) });
    }
    // Bottom-up from the top order n-3 down to k.
    let mut higher_sum = BigUint::zero();
    let mut value = BigUint::zero();
    for order in (k..=n - 3).rev() {
        value = factorial(n - order - 1) - 1u32 - &higher_sum;
        higher_sum += &value;
    }
    Ok(value)
}

/// Mirror-shift operations performed by the generator: `(n - 1)! - 1`.
pub fn operation_count(n: usize) -> BigUint {
    assert!(n >= 1, "operation count is defined for n >= 1");
    factorial(n - 1) - 1u32
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LengthReport {
    pub n: usize,
    #[serde(serialize_with = "decimal")]
    pub length_closed_form: BigUint,
    #[serde(serialize_with = "decimal")]
    pub length_sum_factorials: BigUint,
    #[serde(serialize_with = "decimal")]
    pub bead_count: BigUint,
    /// Overlap length to number of overlaps of that length, for `1 <= len <= n - 2`.
    #[serde(serialize_with = "decimal_map")]
    pub intersection_histogram: BTreeMap<usize, BigUint>,
    #[serde(serialize_with = "decimal")]
    pub operation_count: BigUint,
}

impl LengthReport {
    /// Beads times bead length minus the symbols saved by overlaps.
    pub fn accounted_length(&self) -> BigUint {
        let saved: BigUint = self
            .intersection_histogram
            .iter()
            .map(|(&len, count)| count * len)
            .sum();
        &self.bead_count * (2 * self.n - 1) - saved
    }
}

pub fn length_report(n: usize) -> Result<LengthReport> {
    if n == 0 {
        return Err(Error::EmptyAlphabet);
    }
    Ok(LengthReport {
        n,
        length_closed_form: length_closed_form(n),
        length_sum_factorials: length_sum_factorials(n),
        bead_count: factorial(n - 1),
        intersection_histogram: (1..n.saturating_sub(1))
            .map(|j| (j, intersection_count(j)))
            .collect(),
        operation_count: operation_count(n),
    })
}

// JSON cannot carry integers past 2^53 losslessly, so big values go out as decimal strings.
pub(crate) fn decimal<S: Serializer>(value: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(value)
}

pub(crate) fn decimal_map<S: Serializer>(
    map: &BTreeMap<usize, BigUint>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(map.iter().map(|(k, v)| (k, v.to_string())))
}
