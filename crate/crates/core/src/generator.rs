//! Streaming mirror-shift driver.
//!
//! The whole superpermutation is produced from a single bead core. The driver
//! walks ring depths `d = 2..n-1`; at depth `d` it visits `d` sub-rings, and
//! between two of them applies one mirror-shift of ring order `n - d - 1` and
//! writes the new bead with its first `d - 1` symbols (the overlap) skipped.
//!
//! Retained state is the core, a scratch buffer for the mirrored prefix, the
//! recursion (at most `n - 2` frames) and a few counters. Nothing grows with the
//! output length in [`Mode::Stream`].

use std::collections::BTreeMap;
use std::convert::Infallible;
use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::analysis::{decimal, decimal_map, length_sum_factorials};
use crate::bead::mirror_shift_in_place;
use crate::{Error, Result, Symbol, MAX_SYMBOLS};

/// Append-only consumer of generated symbols, called in output order.
pub trait SymbolSink {
    type Error;

    fn write_symbols(&mut self, symbols: &[Symbol]) -> Result<(), Self::Error>;
}

impl SymbolSink for Vec<Symbol> {
    type Error = Infallible;

    fn write_symbols(&mut self, symbols: &[Symbol]) -> Result<(), Infallible> {
        self.extend_from_slice(symbols);
        Ok(())
    }
}

impl<S: SymbolSink + ?Sized> SymbolSink for &mut S {
    type Error = S::Error;

    fn write_symbols(&mut self, symbols: &[Symbol]) -> Result<(), S::Error> {
        (**self).write_symbols(symbols)
    }
}

/// Sink that only counts what it receives.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct CountingSink {
    pub symbols: u128,
    pub writes: u64,
}

impl SymbolSink for CountingSink {
    type Error = Infallible;

    fn write_symbols(&mut self, symbols: &[Symbol]) -> Result<(), Infallible> {
        self.symbols += symbols.len() as u128;
        self.writes += 1;
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Emit as the driver runs; O(n) state.
    #[default]
    Stream,
    /// Run the driver for the first half only, buffer it, and emit it followed by its mirror.
    PalindromeBuffer,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Stream => "stream",
            Mode::PalindromeBuffer => "palindrome",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorConfig {
    n: usize,
    mode: Mode,
}

impl GeneratorConfig {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_mode(n, Mode::Stream)
    }

    pub fn with_mode(n: usize, mode: Mode) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyAlphabet);
        }
        if n > MAX_SYMBOLS {
            return Err(Error::AlphabetTooLarge { n, max: MAX_SYMBOLS });
        }
        if mode == Mode::PalindromeBuffer && n < 3 {
            return Err(Error::PalindromeTooSmall(n));
        }
        Ok(Self { n, mode })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }
}

/// What the generator held while running.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct StateFootprint {
    /// Capacity, in symbols, of every buffer the driver owns (core plus scratch).
    pub retained_symbols: usize,
    /// Deepest simultaneous recursion observed.
    pub peak_frames: usize,
    /// Symbols held by the palindrome buffer; zero in stream mode.
    pub buffered_symbols: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenerationStats {
    pub n: usize,
    pub mode: Mode,
    #[serde(serialize_with = "decimal")]
    pub symbols_emitted: BigUint,
    /// Mirror-shifts actually performed. In palindrome mode only the first half is driven.
    #[serde(serialize_with = "decimal")]
    pub mirror_shift_count: BigUint,
    /// Overlap length to number of emissions that skipped that many symbols.
    #[serde(serialize_with = "decimal_map")]
    pub intersection_histogram: BTreeMap<usize, BigUint>,
    pub footprint: StateFootprint,
}

impl GenerationStats {
    /// `(2n - 1) + sum over emissions of (2n - 1 - overlap)`; holds for stream mode.
    pub fn accounted_length(&self) -> BigUint {
        let bead_len = 2 * self.n - 1;
        let mut total = BigUint::from(bead_len);
        for (&overlap, count) in &self.intersection_histogram {
            total += count * (bead_len - overlap);
        }
        total
    }
}

enum Halt<E> {
    Sink(E),
    /// The emission cap was reached.
    Done,
}

struct Driver<'s, S: ?Sized> {
    n: usize,
    core: Vec<Symbol>,
    scratch: Vec<Symbol>,
    sink: &'s mut S,
    cap: u128,
    emitted: u128,
    // shifts[d] counts mirror-shifts made at depth d, i.e. emissions skipping d - 1 symbols.
    shifts: Vec<u128>,
    frames: usize,
    peak_frames: usize,
}

impl<S: SymbolSink + ?Sized> Driver<'_, S> {
    fn new(n: usize, sink: &mut S, cap: u128) -> Driver<'_, S> {
        Driver {
            n,
            core: (0..n).map(|i| i as Symbol).collect(),
            scratch: Vec::with_capacity(n),
            sink,
            cap,
            emitted: 0,
            shifts: vec![0; n],
            frames: 0,
            peak_frames: 0,
        }
    }

    fn emit(&mut self, symbols: &[Symbol]) -> Result<(), Halt<S::Error>> {
        let room = self.cap - self.emitted;
        if (symbols.len() as u128) < room {
            self.emitted += symbols.len() as u128;
            return self.sink.write_symbols(symbols).map_err(Halt::Sink);
        }
        let take = room as usize;
        self.emitted += room;
        self.sink.write_symbols(&symbols[..take]).map_err(Halt::Sink)?;
        Err(Halt::Done)
    }

    /// Writes the expanded bead with the first `skip` symbols dropped.
    fn emit_bead(&mut self, skip: usize) -> Result<(), Halt<S::Error>> {
        let n = self.n;
        let core = std::mem::take(&mut self.core);
        let result = self
            .emit(&core[skip..])
            .and_then(|()| self.emit(&core[..n - 1]));
        self.core = core;
        result
    }

    fn descend(&mut self, depth: usize) -> Result<(), Halt<S::Error>> {
        if depth >= self.n {
            return Ok(());
        }
        self.frames += 1;
        self.peak_frames = self.peak_frames.max(self.frames);
        let ring = self.n - depth - 1;
        for i in 0..depth {
            self.descend(depth + 1)?;
            if i == depth - 1 {
                break;
            }
            mirror_shift_in_place(&mut self.core, ring, &mut self.scratch);
            self.shifts[depth] = self.shifts[depth]
                .checked_add(1)
                .expect("mirror-shift counter overflow");
            self.emit_bead(depth - 1)?;
        }
        self.frames -= 1;
        Ok(())
    }

    fn run(&mut self) -> Result<(), Halt<S::Error>> {
        match self.n {
            1 => self.emit(&[0]),
            2 => self.emit(&[0, 1, 0]),
            _ => {
                self.emit_bead(0)?;
                self.descend(2)
            }
        }
    }

    fn footprint(&self) -> StateFootprint {
        StateFootprint {
            retained_symbols: self.core.capacity() + self.scratch.capacity(),
            peak_frames: self.peak_frames,
            buffered_symbols: 0,
        }
    }

    fn histogram(&self) -> BTreeMap<usize, BigUint> {
        (2..self.n)
            .map(|depth| (depth - 1, BigUint::from(self.shifts[depth])))
            .collect()
    }
}

/// Runs the generator in the mode `config` asks for.
pub fn generate<S: SymbolSink + ?Sized>(
    config: &GeneratorConfig,
    sink: &mut S,
) -> Result<GenerationStats, S::Error> {
    match config.mode {
        Mode::Stream => generate_stream(config.n, sink),
        Mode::PalindromeBuffer => generate_palindrome(config.n, sink),
    }
}

fn generate_stream<S: SymbolSink + ?Sized>(n: usize, sink: &mut S) -> Result<GenerationStats, S::Error> {
    let mut driver = Driver::new(n, sink, u128::MAX);
    match driver.run() {
        Ok(()) => {}
        Err(Halt::Sink(e)) => return Err(e),
        Err(Halt::Done) => unreachable!("stream mode has no emission cap"),
    }
    let total: u128 = driver.shifts.iter().sum();
    Ok(GenerationStats {
        n,
        mode: Mode::Stream,
        symbols_emitted: BigUint::from(driver.emitted),
        mirror_shift_count: BigUint::from(total),
        intersection_histogram: driver.histogram(),
        footprint: driver.footprint(),
    })
}

/// Drives only the first `(l(n) + 1) / 2` symbols and completes the output by
/// mirroring them. `l(n)` is a sum of factorials and always odd, so the output
/// has a single central symbol.
fn generate_palindrome<S: SymbolSink + ?Sized>(
    n: usize,
    sink: &mut S,
) -> Result<GenerationStats, S::Error> {
    assert!(n >= 3, "palindrome mode requires n >= 3");
    let length: u128 = length_sum_factorials(n)
        .try_into()
        .expect("sequence length exceeds u128");
    let half = length.div_ceil(2);
    let mut buffer: Vec<Symbol> = Vec::with_capacity(half.min(1 << 28) as usize);
    let mut driver = Driver::new(n, &mut buffer, half);
    match driver.run() {
        Err(Halt::Done) => {}
        Ok(()) => unreachable!("the driver finished before reaching half the output"),
        Err(Halt::Sink(e)) => match e {},
    }
    let total: u128 = driver.shifts.iter().sum();
    let histogram = driver.histogram();
    let mut footprint = driver.footprint();
    drop(driver);

    footprint.buffered_symbols = buffer.capacity();
    sink.write_symbols(&buffer)?;
    const CHUNK: usize = 1 << 16;
    let mut mirrored = Vec::with_capacity(CHUNK.min(buffer.len()));
    for chunk in buffer[..buffer.len() - 1].rchunks(CHUNK) {
        mirrored.clear();
        mirrored.extend(chunk.iter().rev());
        sink.write_symbols(&mirrored)?;
    }
    Ok(GenerationStats {
        n,
        mode: Mode::PalindromeBuffer,
        symbols_emitted: BigUint::from(2 * half - 1),
        mirror_shift_count: BigUint::from(total),
        intersection_histogram: histogram,
        footprint,
    })
}

/// Materializes the superpermutation for `n` symbols.
pub fn superpermutation(n: usize) -> Result<Vec<Symbol>> {
    let config = GeneratorConfig::new(n)?;
    let mut out = Vec::new();
    let Ok(_) = generate(&config, &mut out);
    Ok(out)
}
