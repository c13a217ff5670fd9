//! Brute-force oracles shared by the integration tests. None of these go
//! through the code paths they are used to check.
#![allow(dead_code)]

use std::collections::HashSet;

use superperm::{Bead, ShiftPosition, Symbol};

/// Last bead of the `r`-ring led by `lead`, found by walking the ring: an
/// `r`-ring is `n - r` `(r-1)`-rings whose leading beads are successive
/// straight shifts to position `n - r`.
pub fn trailing_bead_by_traversal(lead: &Bead, r: usize) -> Bead {
    let n = lead.n();
    if r == 0 {
        return lead.clone();
    }
    let mut sub_lead = lead.clone();
    for _ in 0..n - r - 1 {
        sub_lead = sub_lead.straight_shift(ShiftPosition(n - r)).unwrap();
    }
    trailing_bead_by_traversal(&sub_lead, r - 1)
}

/// Every permutation of `0..n` in lexicographic order, by recursion.
pub fn all_permutations(n: usize) -> Vec<Vec<Symbol>> {
    fn go(prefix: &mut Vec<Symbol>, used: &mut [bool], out: &mut Vec<Vec<Symbol>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for s in 0..used.len() {
            if !used[s] {
                used[s] = true;
                prefix.push(s as Symbol);
                go(prefix, used, out);
                prefix.pop();
                used[s] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Distinct permutation windows of `seq`, by hashing every window.
pub fn distinct_permutation_windows(seq: &[Symbol], n: usize) -> HashSet<Vec<Symbol>> {
    seq.windows(n)
        .filter(|w| {
            let mut sorted = w.to_vec();
            sorted.sort_unstable();
            sorted.iter().enumerate().all(|(i, &s)| s as usize == i)
        })
        .map(|w| w.to_vec())
        .collect()
}

/// `1! + 2! + ... + n!` with plain integers.
pub fn sum_factorials(n: u64) -> u128 {
    let mut term = 1u128;
    let mut total = 0u128;
    for k in 1..=n as u128 {
        term *= k;
        total += term;
    }
    total
}

pub fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}
