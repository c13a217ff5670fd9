//! Beads and the shift operators that move between them.
//!
//! A bead over `n` symbols is stored as its `n`-symbol core `x`; the full
//! `2n - 1` form is `x` followed by `x[..n-1]` and is only ever derived.
//!
//! All positions are 0-based. Straight shifts are parameterized by the
//! position `p` (`2 <= p <= n - 1`) the leading symbol moves to. Mirror shifts
//! are parameterized by the ring order `r`: the leading `r + 1` symbols leave
//! the front and come back reversed just before the final symbol, which is
//! exactly the jump from the trailing bead of an `r`-ring to the leading bead
//! of the next one.

use std::fmt;

use crate::{Alphabet, Error, Result, Symbol, MAX_SYMBOLS};

/// Target position of a straight shift, `2 <= p <= n - 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShiftPosition(pub usize);

impl ShiftPosition {
    pub fn new(p: usize, n: usize) -> Result<Self> {
        if p < 2 || p + 1 > n {
            return Err(Error::ShiftPositionOutOfRange { p, n, max: n.saturating_sub(1) });
        }
        Ok(Self(p))
    }
}

/// Order of a ring: a 0-ring is a bead, an `r`-ring is a cycle of `n - r` `(r-1)`-rings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RingOrder(pub usize);

impl RingOrder {
    /// Ring orders that occur in a construction over `n` symbols: `0..=n-3`.
    pub fn new(r: usize, n: usize) -> Result<Self> {
        check_ring(r, n, n.saturating_sub(3))?;
        Ok(Self(r))
    }
}

fn check_ring(r: usize, n: usize, max: usize) -> Result<()> {
    if n < 2 || r > max {
        return Err(Error::RingOrderOutOfRange { r, n, max });
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bead {
    core: Vec<Symbol>,
}

impl Bead {
    /// The leading bead of the construction: the identity permutation.
    pub fn identity(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyAlphabet);
        }
        if n > MAX_SYMBOLS {
            return Err(Error::AlphabetTooLarge { n, max: MAX_SYMBOLS });
        }
        Ok(Self { core: (0..n).map(|i| i as Symbol).collect() })
    }

    /// Wraps a core after checking that it is a permutation of `0..n`.
    pub fn from_core(core: Vec<Symbol>) -> Result<Self> {
        let n = core.len();
        if n == 0 {
            return Err(Error::EmptyAlphabet);
        }
        if !is_permutation(&core) {
            return Err(Error::NotAPermutation { n });
        }
        Ok(Self { core })
    }

    /// Parses a core written in `alphabet`'s glyphs, e.g. `"12345"`.
    pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Self> {
        let core = alphabet.parse(text)?;
        if core.len() != alphabet.size() {
            return Err(Error::NotAPermutation { n: alphabet.size() });
        }
        Self::from_core(core)
    }

    pub fn n(&self) -> usize {
        self.core.len()
    }

    pub fn core(&self) -> &[Symbol] {
        &self.core
    }

    pub fn into_core(self) -> Vec<Symbol> {
        self.core
    }

    /// Full `2n - 1` symbol form: the core followed by its first `n - 1` symbols.
    pub fn expand(&self) -> Vec<Symbol> {
        let n = self.n();
        let mut full = Vec::with_capacity(2 * n - 1);
        full.extend_from_slice(&self.core);
        full.extend_from_slice(&self.core[..n - 1]);
        full
    }

    /// Iterates the `n` windows of the expanded bead.
    pub fn windows(&self) -> impl Iterator<Item = Vec<Symbol>> + '_ {
        let n = self.n();
        (0..n).map(move |start| (0..n).map(|i| self.core[(start + i) % n]).collect())
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        alphabet.render(&self.core)
    }

    /// Moves the leading symbol to position `p`; everything from `p` on is fixed.
    pub fn straight_shift(&self, p: ShiftPosition) -> Result<Self> {
        let p = ShiftPosition::new(p.0, self.n())?.0;
        let mut core = self.core.clone();
        core[..p].rotate_left(1);
        Ok(Self { core })
    }

    /// Inverse of [`Bead::straight_shift`]: the symbol at position `p - 1` becomes the leader.
    pub fn straight_unshift(&self, p: ShiftPosition) -> Result<Self> {
        let p = ShiftPosition::new(p.0, self.n())?.0;
        let mut core = self.core.clone();
        core[..p].rotate_right(1);
        Ok(Self { core })
    }

    /// Drops the leading `r + 1` symbols and re-inserts them reversed before the last symbol.
    ///
    /// Accepts `0 <= r <= n - 2`; the generator only uses `r <= n - 3`.
    pub fn mirror_shift(&self, r: RingOrder) -> Result<Self> {
        let n = self.n();
        check_ring(r.0, n, n.saturating_sub(2))?;
        let mut core = self.core.clone();
        let mut scratch = Vec::with_capacity(n);
        mirror_shift_in_place(&mut core, r.0, &mut scratch);
        Ok(Self { core })
    }

    /// Inverse of [`Bead::mirror_shift`].
    pub fn mirror_unshift(&self, r: RingOrder) -> Result<Self> {
        let n = self.n();
        check_ring(r.0, n, n.saturating_sub(2))?;
        let r = r.0;
        let x = &self.core;
        let mut core = Vec::with_capacity(n);
        core.extend((0..=r).map(|i| x[n - 2 - i]));
        core.extend_from_slice(&x[..n - r - 2]);
        core.push(x[n - 1]);
        Ok(Self { core })
    }

    /// Last bead of the `r`-ring whose leading bead is `self`, in closed form.
    ///
    /// The core is `x[n-2], x[n-3], .., x[n-r-1]` followed by `x[0..n-r-1]` and `x[n-1]`.
    pub fn trailing_bead(&self, r: RingOrder) -> Result<Self> {
        let n = self.n();
        check_ring(r.0, n, n.saturating_sub(3))?;
        let r = r.0;
        let x = &self.core;
        let mut core = Vec::with_capacity(n);
        core.extend((1..=r).map(|j| x[n - 1 - j]));
        core.extend_from_slice(&x[..n - r - 1]);
        core.push(x[n - 1]);
        Ok(Self { core })
    }
}

impl fmt::Display for Bead {
    /// Symbols are printed 1-based and concatenated for `n <= 9`, comma separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() <= 9 { "" } else { "," };
        for (i, s) in self.core.iter().enumerate() {
            if i > 0 {
                f.write_str(sep)?;
            }
            write!(f, "{}", *s as usize + 1)?;
        }
        Ok(())
    }
}

/// Hot-path mirror shift on a bare core. `scratch` is reused between calls and
/// never grows beyond `r + 1` symbols.
#[inline]
pub fn mirror_shift_in_place(core: &mut [Symbol], r: usize, scratch: &mut Vec<Symbol>) {
    let n = core.len();
    debug_assert!(r + 2 <= n);
    scratch.clear();
    scratch.extend_from_slice(&core[..=r]);
    core.copy_within(r + 1..n - 1, 0);
    let start = n - r - 2;
    for (dst, &s) in core[start..n - 1].iter_mut().zip(scratch.iter().rev()) {
        *dst = s;
    }
}

/// Reverses a sequence: reflecting every element across the center.
pub fn mirror_sequence<T: Clone>(sequence: &[T]) -> Vec<T> {
    sequence.iter().rev().cloned().collect()
}

/// True when `symbols` contains each of `0..symbols.len()` exactly once.
pub fn is_permutation(symbols: &[Symbol]) -> bool {
    let n = symbols.len();
    let mut seen = vec![false; n];
    for &s in symbols {
        let s = s as usize;
        if s >= n || seen[s] {
            return false;
        }
        seen[s] = true;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alpha(n: usize) -> Alphabet {
        Alphabet::standard(n).unwrap()
    }

    fn bead(s: &str) -> Bead {
        Bead::parse(s, &alpha(s.len())).unwrap()
    }

    fn full(b: &Bead) -> String {
        alpha(b.n()).render(&b.expand())
    }

    #[test]
    fn identity_and_expand() {
        let a5 = alpha(5);
        let b = Bead::identity(5).unwrap();
        assert_eq!(b.core(), &[0, 1, 2, 3, 4]);
        assert_eq!(a5.render(&b.expand()), "123451234");
        assert_eq!(full(&Bead::identity(3).unwrap()), "12312");
        assert_eq!(Bead::identity(1).unwrap().expand(), vec![0]);
        assert_eq!(Bead::identity(0), Err(Error::EmptyAlphabet));
    }

    #[test]
    fn bead_windows_are_distinct_permutations() {
        let b = bead("31524");
        let windows: Vec<_> = b.windows().collect();
        assert_eq!(windows.len(), 5);
        for (i, w) in windows.iter().enumerate() {
            assert!(is_permutation(w));
            assert_eq!(&b.expand()[i..i + 5], &w[..]);
            assert!(!windows[..i].contains(w));
        }
    }

    #[test]
    fn from_core_rejects_non_permutations() {
        assert_eq!(Bead::from_core(vec![0, 0, 1]), Err(Error::NotAPermutation { n: 3 }));
        assert_eq!(Bead::from_core(vec![0, 3, 1]), Err(Error::NotAPermutation { n: 3 }));
        assert_eq!(Bead::from_core(vec![]), Err(Error::EmptyAlphabet));
        assert!(Bead::parse("1234", &alpha(5)).is_err());
    }

    #[test]
    fn straight_shift_examples() {
        let b = bead("12345");
        let y = b.straight_shift(ShiftPosition(3)).unwrap();
        assert_eq!(y.render(&alpha(5)), "23145");
        assert_eq!(full(&y), "231452314");
        assert_eq!(b.straight_shift(ShiftPosition(4)).unwrap().render(&alpha(5)), "23415");
    }

    #[test]
    fn straight_unshift_examples() {
        let b = bead("12345");
        assert_eq!(b.straight_unshift(ShiftPosition(3)).unwrap().render(&alpha(5)), "31245");
        assert_eq!(b.straight_unshift(ShiftPosition(4)).unwrap().render(&alpha(5)), "41235");
    }

    #[test]
    fn shift_position_bounds() {
        let b = bead("12345");
        for p in [0, 1, 5, 6] {
            assert!(matches!(
                b.straight_shift(ShiftPosition(p)),
                Err(Error::ShiftPositionOutOfRange { .. })
            ));
            assert!(b.straight_unshift(ShiftPosition(p)).is_err());
        }
        assert!(ShiftPosition::new(2, 3).is_ok());
        assert!(ShiftPosition::new(2, 2).is_err());
    }

    #[test]
    fn mirror_shift_examples() {
        let a = alpha(5);
        let b = bead("12345");
        let y = b.mirror_shift(RingOrder(1)).unwrap();
        assert_eq!(y.render(&a), "34215");
        assert_eq!(full(&y), "342153421");
        let y0 = b.mirror_shift(RingOrder(0)).unwrap();
        assert_eq!(y0.render(&a), "23415");
        assert_eq!(y0, b.straight_shift(ShiftPosition(4)).unwrap());
        assert_eq!(bead("123").mirror_shift(RingOrder(0)).unwrap().render(&alpha(3)), "213");
    }

    #[test]
    fn mirror_unshift_examples() {
        let a = alpha(5);
        assert_eq!(bead("12345").mirror_unshift(RingOrder(1)).unwrap().render(&a), "43125");
        assert_eq!(bead("34215").mirror_unshift(RingOrder(1)).unwrap().render(&a), "12345");
    }

    #[test]
    fn mirror_ring_bounds() {
        let b = bead("12345");
        assert!(b.mirror_shift(RingOrder(3)).is_ok());
        assert!(matches!(b.mirror_shift(RingOrder(4)), Err(Error::RingOrderOutOfRange { .. })));
        assert!(b.mirror_unshift(RingOrder(4)).is_err());
        assert!(b.trailing_bead(RingOrder(3)).is_err());
        assert!(RingOrder::new(2, 5).is_ok());
        assert!(RingOrder::new(3, 5).is_err());
        assert!(RingOrder::new(0, 3).is_ok());
    }

    #[test]
    fn trailing_bead_examples() {
        assert_eq!(bead("1234").trailing_bead(RingOrder(1)).unwrap(), bead("3124"));
        assert_eq!(bead("12345").trailing_bead(RingOrder(2)).unwrap(), bead("43125"));
        let b = bead("25143");
        assert_eq!(b.trailing_bead(RingOrder(0)).unwrap(), b);
    }

    #[test]
    fn in_place_matches_value_operator() {
        let b = bead("5132647");
        for r in 0..=5 {
            let mut core = b.core().to_vec();
            let mut scratch = Vec::new();
            mirror_shift_in_place(&mut core, r, &mut scratch);
            assert_eq!(core, b.mirror_shift(RingOrder(r)).unwrap().core());
            assert!(scratch.len() <= r + 1);
        }
    }

    #[test]
    fn mirror_sequence_reverses() {
        let a = alpha(3);
        let s = a.parse("123121321").unwrap();
        assert_eq!(mirror_sequence(&s), s);
        assert_eq!(mirror_sequence::<Symbol>(&[]), Vec::<Symbol>::new());
        assert_eq!(mirror_sequence(&['a', 'b', 'c']), vec!['c', 'b', 'a']);
    }

    #[test]
    fn display_is_one_based() {
        assert_eq!(bead("3124").to_string(), "3124");
        let ten = Bead::identity(10).unwrap();
        assert_eq!(ten.to_string(), "1,2,3,4,5,6,7,8,9,10");
    }
}
