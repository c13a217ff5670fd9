use crate::{Error, Result, Symbol, MAX_SYMBOLS};

/// Glyph table used by the plain text format: `1`-`9`, then `A`-`Z`, then `a`-`z`.
pub const STANDARD_GLYPHS: &str = "123456789ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz";

/// Number of glyphs in [`STANDARD_GLYPHS`].
pub const STANDARD_GLYPH_COUNT: usize = 61;

/// Ordered set of distinct glyphs; position `i` renders symbol index `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    glyphs: Vec<char>,
}

impl Alphabet {
    pub fn new(glyphs: impl IntoIterator<Item = char>) -> Result<Self> {
        let glyphs: Vec<char> = glyphs.into_iter().collect();
        if glyphs.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        if glyphs.len() > MAX_SYMBOLS {
            return Err(Error::AlphabetTooLarge { n: glyphs.len(), max: MAX_SYMBOLS });
        }
        for (i, g) in glyphs.iter().enumerate() {
            if glyphs[..i].contains(g) {
                return Err(Error::DuplicateGlyph(*g));
            }
        }
        Ok(Self { glyphs })
    }

    /// The first `n` glyphs of [`STANDARD_GLYPHS`].
    pub fn standard(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyAlphabet);
        }
        if n > STANDARD_GLYPH_COUNT {
            return Err(Error::AlphabetTooLarge { n, max: STANDARD_GLYPH_COUNT });
        }
        Ok(Self { glyphs: STANDARD_GLYPHS.chars().take(n).collect() })
    }

    pub fn size(&self) -> usize {
        self.glyphs.len()
    }

    pub fn glyphs(&self) -> &[char] {
        &self.glyphs
    }

    pub fn glyph(&self, symbol: Symbol) -> Option<char> {
        self.glyphs.get(symbol as usize).copied()
    }

    pub fn index_of(&self, glyph: char) -> Option<Symbol> {
        self.glyphs.iter().position(|&g| g == glyph).map(|i| i as Symbol)
    }

    /// Renders symbol indices as glyphs. Panics on an index outside the alphabet.
    pub fn render(&self, symbols: &[Symbol]) -> String {
        symbols.iter().map(|&s| self.glyphs[s as usize]).collect()
    }

    /// Parses a glyph string into symbol indices.
    pub fn parse(&self, text: &str) -> Result<Vec<Symbol>> {
        text.chars()
            .enumerate()
            .map(|(offset, glyph)| {
                self.index_of(glyph).ok_or(Error::UnknownGlyph { glyph, offset: offset as u64 })
            })
            .collect()
    }
}
