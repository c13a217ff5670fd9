//! Superpermutation checking over a symbol stream.
//!
//! A sliding length-`n` window is kept as a ring buffer with per-symbol
//! counts, so recognizing a permutation window is O(1) per symbol. Each
//! permutation window is ranked (Lehmer code) into a flat `n!`-bit coverage map.

use serde::Serialize;

use crate::generator::SymbolSink;
use crate::{Error, Result, Symbol};

/// Largest `n` whose coverage map is allocated by default: 12! bits, about 60 MB.
pub const DEFAULT_MAX_COVERAGE_N: usize = 12;

/// Hard ceiling on the coverage map: 20! still fits a `u64` rank.
const RANK_LIMIT_N: usize = 20;

/// Lexicographic index of a permutation of `0..n`, in `[0, n!)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct PermutationRank(pub u64);

fn factorials(n: usize) -> Vec<u64> {
    let mut f = vec![1u64; n + 1];
    for k in 1..=n {
        f[k] = f[k - 1] * k as u64;
    }
    f
}

/// Lehmer rank of `window`, or `None` when it is not a permutation of `0..len`.
pub fn rank_permutation(window: &[Symbol]) -> Option<PermutationRank> {
    let n = window.len();
    if n > RANK_LIMIT_N {
        return None;
    }
    let fact = factorials(n);
    rank_with(window, &fact)
}

#[inline]
fn rank_with(window: &[Symbol], fact: &[u64]) -> Option<PermutationRank> {
    let n = window.len();
    let mut unused: u64 = (1u64 << n) - 1;
    let mut rank = 0u64;
    for (i, &s) in window.iter().enumerate() {
        let bit = 1u64.checked_shl(s as u32)?;
        if unused & bit == 0 {
            return None;
        }
        let smaller = (unused & (bit - 1)).count_ones() as u64;
        rank += smaller * fact[n - 1 - i];
        unused &= !bit;
    }
    Some(PermutationRank(rank))
}

/// Inverse of [`rank_permutation`].
pub fn unrank_permutation(rank: PermutationRank, n: usize) -> Option<Vec<Symbol>> {
    if n > RANK_LIMIT_N {
        return None;
    }
    let fact = factorials(n);
    if rank.0 >= fact[n] {
        return None;
    }
    let mut remaining: Vec<Symbol> = (0..n).map(|i| i as Symbol).collect();
    let mut r = rank.0;
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let f = fact[n - 1 - i];
        out.push(remaining.remove((r / f) as usize));
        r %= f;
    }
    Some(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub length: u64,
    /// Distinct permutations seen as windows.
    pub covered: u64,
    pub complete: bool,
    /// Windows that were permutations, counting repeats.
    pub permutation_windows: u64,
    /// `permutation_windows - covered`: how many permutation windows were repeats.
    pub repeated_windows: u64,
    /// `None` when the palindrome check was not requested.
    pub is_palindrome: Option<bool>,
    pub first_missing: Option<PermutationRank>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyOptions {
    pub check_palindrome: bool,
    pub max_n: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { check_palindrome: false, max_n: DEFAULT_MAX_COVERAGE_N }
    }
}

/// Incremental verifier: feed symbols with [`Verifier::push`], then call [`Verifier::finish`].
#[derive(Debug, Clone)]
pub struct Verifier {
    n: usize,
    fact: Vec<u64>,
    ring: Vec<Symbol>,
    head: usize,
    counts: Vec<u32>,
    distinct: usize,
    ordered: Vec<Symbol>,
    coverage: Vec<u64>,
    covered: u64,
    permutation_windows: u64,
    length: u64,
    retained: Option<Vec<Symbol>>,
}

impl Verifier {
    pub fn new(n: usize, options: VerifyOptions) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyAlphabet);
        }
        let max = options.max_n.min(RANK_LIMIT_N);
        if n > max {
            return Err(Error::LimitExceeded { what: "coverage", n, max });
        }
        let fact = factorials(n);
        let words = fact[n].div_ceil(64) as usize;
        Ok(Self {
            n,
            ring: vec![0; n],
            head: 0,
            counts: vec![0; n],
            distinct: 0,
            ordered: vec![0; n],
            coverage: vec![0; words],
            covered: 0,
            permutation_windows: 0,
            length: 0,
            retained: options.check_palindrome.then(Vec::new),
            fact,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Symbols consumed so far.
    pub fn len(&self) -> u64 {
        self.length
    }

    pub fn is_empty(&self) -> bool {
        self.length == 0
    }

    pub fn push(&mut self, symbol: Symbol) -> Result<()> {
        let n = self.n;
        if symbol as usize >= n {
            return Err(Error::SymbolOutOfRange { index: symbol as u64, offset: self.length, n });
        }
        if self.length >= n as u64 {
            let old = self.ring[self.head] as usize;
            self.counts[old] -= 1;
            if self.counts[old] == 0 {
                self.distinct -= 1;
            }
        }
        self.ring[self.head] = symbol;
        self.head = (self.head + 1) % n;
        let c = &mut self.counts[symbol as usize];
        *c += 1;
        if *c == 1 {
            self.distinct += 1;
        }
        self.length += 1;
        if let Some(all) = &mut self.retained {
            all.push(symbol);
        }
        if self.distinct == n {
            self.record_window();
        }
        Ok(())
    }

    pub fn push_all(&mut self, symbols: &[Symbol]) -> Result<()> {
        symbols.iter().try_for_each(|&s| self.push(s))
    }

    fn record_window(&mut self) {
        // After a push the oldest symbol sits at head.
        let (older, newer) = self.ring.split_at(self.head);
        self.ordered[..newer.len()].copy_from_slice(newer);
        self.ordered[newer.len()..].copy_from_slice(older);
        let rank = rank_with(&self.ordered, &self.fact)
            .expect("window with n distinct symbols is a permutation")
            .0;
        let (word, bit) = ((rank / 64) as usize, rank % 64);
        if self.coverage[word] & (1 << bit) == 0 {
            self.coverage[word] |= 1 << bit;
            self.covered += 1;
        }
        self.permutation_windows += 1;
    }

    fn first_missing(&self) -> Option<PermutationRank> {
        let total = self.fact[self.n];
        self.coverage.iter().enumerate().find_map(|(i, &word)| {
            let free = !word;
            if free == 0 {
                return None;
            }
            let rank = i as u64 * 64 + free.trailing_zeros() as u64;
            (rank < total).then_some(PermutationRank(rank))
        })
    }

    pub fn finish(self) -> VerificationReport {
        let total = self.fact[self.n];
        let is_palindrome = self
            .retained
            .as_ref()
            .map(|all| all.iter().eq(all.iter().rev()));
        VerificationReport {
            n: self.n,
            length: self.length,
            covered: self.covered,
            complete: self.covered == total,
            permutation_windows: self.permutation_windows,
            repeated_windows: self.permutation_windows - self.covered,
            is_palindrome,
            first_missing: self.first_missing(),
        }
    }
}

impl SymbolSink for Verifier {
    type Error = Error;

    fn write_symbols(&mut self, symbols: &[Symbol]) -> Result<()> {
        self.push_all(symbols)
    }
}

/// Verifies a fully materialized sequence.
pub fn verify(symbols: &[Symbol], n: usize, check_palindrome: bool) -> Result<VerificationReport> {
    let mut v = Verifier::new(n, VerifyOptions { check_palindrome, ..VerifyOptions::default() })?;
    v.push_all(symbols)?;
    Ok(v.finish())
}

/// Collects the distinct permutation windows of `symbols` in order of first appearance.
pub fn permutations_in_order(symbols: &[Symbol], n: usize) -> Vec<Vec<Symbol>> {
    let fact = factorials(n.min(RANK_LIMIT_N));
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for w in symbols.windows(n) {
        if let Some(rank) = rank_with(w, &fact) {
            if seen.insert(rank) {
                out.push(w.to_vec());
            }
        }
    }
    out
}
