//! Superpermutation construction by mirror-shifting beads.
//!
//! A *bead* is a `2n - 1` symbol string whose `n` length-`n` windows are
//! pairwise distinct permutations. Chaining beads with maximal overlaps, and
//! moving between rings of beads with a single mirror-shift, yields a
//! superpermutation of length `1! + 2! + ... + n!` while the generator only
//! ever holds one bead core in memory.
//!
//! The crate is organized as:
//!
//! * [`bead`]: the bead type and the straight/mirror shift operators.
//! * [`generator`]: the streaming driver that emits the full sequence to a [`SymbolSink`].
//! * [`analysis`]: exact closed forms for length, intersection and operation counts.
//! * [`verifier`]: window scanning and coverage accounting over all `n!` permutations.
//! * [`baseline`]: the classical recursive construction, used for cross-checks.
//! * [`format`]: glyph tables and the plain/CSV file formats.

pub mod alphabet;
pub mod analysis;
pub mod baseline;
pub mod bead;
mod error;
pub mod format;
pub mod generator;
pub mod verifier;

pub use alphabet::Alphabet;
pub use bead::{Bead, RingOrder, ShiftPosition};
pub use error::{Error, Result};
pub use generator::{generate, GenerationStats, GeneratorConfig, Mode, SymbolSink};
pub use verifier::{rank_permutation, unrank_permutation, verify, PermutationRank, VerificationReport, Verifier};

/// Dense symbol index in `0..n`. Glyphs only appear at the I/O boundary.
pub type Symbol = u8;

/// Largest alphabet the symbol representation can address.
pub const MAX_SYMBOLS: usize = Symbol::MAX as usize + 1;
