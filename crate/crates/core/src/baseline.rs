//! Classical recursive construction, kept as an independent cross-check.
//!
//! Level `n` is built from level `n - 1`: every permutation `p` of the smaller
//! alphabet, taken in order of first appearance, becomes the block `p + new + p`,
//! and consecutive blocks are chained with their longest suffix/prefix overlap.
//! The output is fully materialized, so memory grows as `n!`.

use crate::verifier::permutations_in_order;
use crate::{Error, Result, Symbol};

/// Default ceiling for [`recursive_superperm`].
pub const DEFAULT_MAX_N: usize = 9;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecursiveBuild {
    pub n: usize,
    pub sequence: Vec<Symbol>,
}

pub fn recursive_superperm(n: usize) -> Result<RecursiveBuild> {
    recursive_superperm_with_limit(n, DEFAULT_MAX_N)
}

pub fn recursive_superperm_with_limit(n: usize, max_n: usize) -> Result<RecursiveBuild> {
    if n == 0 {
        return Err(Error::EmptyAlphabet);
    }
    if n > max_n {
        return Err(Error::LimitExceeded { what: "baseline", n, max: max_n });
    }
    let mut sequence: Vec<Symbol> = vec![0];
    for level in 2..=n {
        sequence = extend_level(&sequence, level);
    }
    Ok(RecursiveBuild { n, sequence })
}

fn extend_level(previous: &[Symbol], level: usize) -> Vec<Symbol> {
    let new_symbol = (level - 1) as Symbol;
    let mut out: Vec<Symbol> = Vec::new();
    let mut block = Vec::with_capacity(2 * level - 1);
    for p in permutations_in_order(previous, level - 1) {
        block.clear();
        block.extend_from_slice(&p);
        block.push(new_symbol);
        block.extend_from_slice(&p);
        let overlap = longest_overlap(&out, &block);
        out.extend_from_slice(&block[overlap..]);
    }
    out
}

/// Longest `k < block.len()` such that `acc` ends with `block[..k]`.
fn longest_overlap(acc: &[Symbol], block: &[Symbol]) -> usize {
    let max = acc.len().min(block.len() - 1);
    (1..=max)
        .rev()
        .find(|&k| acc[acc.len() - k..] == block[..k])
        .unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::length_sum_factorials;
    use crate::{verify, Alphabet};

    fn text(b: &RecursiveBuild) -> String {
        Alphabet::standard(b.n).unwrap().render(&b.sequence)
    }

    #[test]
    fn small_builds() {
        assert_eq!(text(&recursive_superperm(1).unwrap()), "1");
        assert_eq!(text(&recursive_superperm(2).unwrap()), "121");
        assert_eq!(text(&recursive_superperm(3).unwrap()), "123121321");
    }

    #[test]
    fn n5_is_complete_with_expected_length() {
        let b = recursive_superperm(5).unwrap();
        assert_eq!(b.sequence.len(), 153);
        assert!(verify(&b.sequence, 5, false).unwrap().complete);
    }

    #[test]
    fn lengths_match_sum_of_factorials() {
        for n in 1..=7 {
            let b = recursive_superperm(n).unwrap();
            assert_eq!(num_bigint::BigUint::from(b.sequence.len()), length_sum_factorials(n));
        }
    }

    #[test]
    fn deterministic() {
        assert_eq!(recursive_superperm(6).unwrap(), recursive_superperm(6).unwrap());
    }

    #[test]
    fn limits() {
        assert!(matches!(recursive_superperm(10), Err(Error::LimitExceeded { .. })));
        assert_eq!(recursive_superperm(0), Err(Error::EmptyAlphabet));
        assert!(recursive_superperm_with_limit(4, 3).is_err());
    }

    #[test]
    fn overlap_helper() {
        assert_eq!(longest_overlap(&[], &[0, 1, 0]), 0);
        assert_eq!(longest_overlap(&[0, 1, 2, 0, 1], &[0, 1, 3, 0, 1]), 2);
        assert_eq!(longest_overlap(&[0, 1, 0], &[0, 1, 0]), 1);
        assert_eq!(longest_overlap(&[2, 0, 1], &[0, 1, 2, 0, 1]), 2);
    }
}
