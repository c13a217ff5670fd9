use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("alphabet must contain at least one symbol")]
    EmptyAlphabet,
    #[error("alphabet of {n} symbols exceeds the limit of {max}")]
    AlphabetTooLarge { n: usize, max: usize },
    #[error("glyph {0:?} appears more than once in the alphabet")]
    DuplicateGlyph(char),
    #[error("bead core is not a permutation of 0..{n}")]
    NotAPermutation { n: usize },
    #[error("shift position {p} is outside 2..={max} for n = {n}")]
    ShiftPositionOutOfRange { p: usize, n: usize, max: usize },
    #[error("ring order {r} is outside 0..={max} for n = {n}")]
    RingOrderOutOfRange { r: usize, n: usize, max: usize },
    #[error("palindrome mode requires n >= 3, got {0}")]
    PalindromeTooSmall(usize),
    #[error("unknown glyph {glyph:?} at offset {offset}")]
    UnknownGlyph { glyph: char, offset: u64 },
    #[error("symbol index {index} at offset {offset} is outside 0..{n}")]
    SymbolOutOfRange { index: u64, offset: u64, n: usize },
    #[error("malformed input at offset {offset}: {reason}")]
    Malformed { offset: u64, reason: String },
    #[error("n = {n} exceeds the {what} limit of {max}")]
    LimitExceeded { what: &'static str, n: usize, max: usize },
}
