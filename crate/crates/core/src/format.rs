//! On-disk sequence formats.
//!
//! * `plain`: one line of glyphs from [`STANDARD_GLYPHS`](crate::alphabet::STANDARD_GLYPHS)
//!   and a single trailing newline. Only usable for `n <= 61`.
//! * `csv`: 0-based decimal symbol indices separated by commas, one trailing newline.
//!
//! Readers accept at most one trailing `\n`, and treat anything else as malformed.

use std::fmt;
use std::io::{self, BufRead, Write};
use std::str::FromStr;

use crate::alphabet::{Alphabet, STANDARD_GLYPH_COUNT};
use crate::generator::SymbolSink;
use crate::{Error, Result, Symbol};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Plain,
    Csv,
}

impl OutputFormat {
    /// Rejects `plain` for alphabets larger than the glyph table.
    pub fn check(self, n: usize) -> Result<()> {
        if self == OutputFormat::Plain && n > STANDARD_GLYPH_COUNT {
            return Err(Error::AlphabetTooLarge { n, max: STANDARD_GLYPH_COUNT });
        }
        Ok(())
    }
}

impl fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutputFormat::Plain => "plain",
            OutputFormat::Csv => "csv",
        })
    }
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "plain" => Ok(OutputFormat::Plain),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(format!("unknown format {other:?} (expected plain or csv)")),
        }
    }
}

/// Writes symbols in one of the [`OutputFormat`]s. Call [`SequenceWriter::finish`]
/// to append the trailing newline and flush.
pub struct SequenceWriter<W: Write> {
    out: W,
    format: OutputFormat,
    glyphs: Vec<u8>,
    line: Vec<u8>,
    first: bool,
}

impl<W: Write> SequenceWriter<W> {
    pub fn new(out: W, format: OutputFormat, n: usize) -> Result<Self> {
        format.check(n)?;
        let glyphs = match format {
            OutputFormat::Plain => Alphabet::standard(n)?
                .glyphs()
                .iter()
                .map(|&c| c as u8)
                .collect(),
            OutputFormat::Csv => Vec::new(),
        };
        Ok(Self { out, format, glyphs, line: Vec::with_capacity(1 << 12), first: true })
    }

    pub fn finish(mut self) -> io::Result<W> {
        self.out.write_all(b"\n")?;
        self.out.flush()?;
        Ok(self.out)
    }
}

impl<W: Write> SymbolSink for SequenceWriter<W> {
    type Error = io::Error;

    fn write_symbols(&mut self, symbols: &[Symbol]) -> io::Result<()> {
        self.line.clear();
        match self.format {
            OutputFormat::Plain => self.line.extend(symbols.iter().map(|&s| self.glyphs[s as usize])),
            OutputFormat::Csv => {
                for &s in symbols {
                    if !self.first {
                        self.line.push(b',');
                    }
                    self.first = false;
                    write!(self.line, "{s}")?;
                }
            }
        }
        self.out.write_all(&self.line)
    }
}

/// Renders a whole sequence to a string in `format`, trailing newline included.
pub fn render(symbols: &[Symbol], n: usize, format: OutputFormat) -> Result<String> {
    let mut w = SequenceWriter::new(Vec::new(), format, n)?;
    w.write_symbols(symbols).expect("writing to memory");
    let bytes = w.finish().expect("writing to memory");
    Ok(String::from_utf8(bytes).expect("formats are ASCII"))
}

/// Streams symbols out of `input`, handing them to `sink` in chunks.
pub fn read_sequence<R: BufRead, S>(
    mut input: R,
    format: OutputFormat,
    n: usize,
    sink: &mut S,
) -> Result<u64>
where
    S: SymbolSink<Error = Error> + ?Sized,
{
    format.check(n)?;
    let mut decoder = Decoder::new(format, n)?;
    let mut chunk = Vec::with_capacity(1 << 14);
    loop {
        let buf = match input.fill_buf() {
            Ok(buf) => buf,
            Err(e) if e.kind() == io::ErrorKind::Interrupted => continue,
            Err(e) => {
                return Err(Error::Malformed { offset: decoder.offset, reason: e.to_string() })
            }
        };
        if buf.is_empty() {
            break;
        }
        chunk.clear();
        decoder.feed(buf, &mut chunk)?;
        let used = buf.len();
        input.consume(used);
        sink.write_symbols(&chunk)?;
    }
    chunk.clear();
    decoder.end(&mut chunk)?;
    sink.write_symbols(&chunk)?;
    Ok(decoder.symbols)
}

/// Parses an in-memory document.
pub fn parse_sequence(text: &str, format: OutputFormat, n: usize) -> Result<Vec<Symbol>> {
    let mut out = Vec::new();
    read_sequence(text.as_bytes(), format, n, &mut Collect(&mut out))?;
    Ok(out)
}

struct Collect<'a>(&'a mut Vec<Symbol>);

impl SymbolSink for Collect<'_> {
    type Error = Error;

    fn write_symbols(&mut self, symbols: &[Symbol]) -> Result<()> {
        self.0.extend_from_slice(symbols);
        Ok(())
    }
}

struct Decoder {
    format: OutputFormat,
    n: usize,
    lookup: [Option<Symbol>; 256],
    offset: u64,
    symbols: u64,
    saw_newline: bool,
    // csv only
    value: Option<u64>,
    value_start: u64,
}

impl Decoder {
    fn new(format: OutputFormat, n: usize) -> Result<Self> {
        let mut lookup = [None; 256];
        if format == OutputFormat::Plain {
            for (i, &g) in Alphabet::standard(n)?.glyphs().iter().enumerate() {
                lookup[g as usize] = Some(i as Symbol);
            }
        }
        Ok(Self {
            format,
            n,
            lookup,
            offset: 0,
            symbols: 0,
            saw_newline: false,
            value: None,
            value_start: 0,
        })
    }

    fn feed(&mut self, bytes: &[u8], out: &mut Vec<Symbol>) -> Result<()> {
        for &b in bytes {
            if self.saw_newline {
                return Err(Error::Malformed {
                    offset: self.offset,
                    reason: "data after the trailing newline".into(),
                });
            }
            match (self.format, b) {
                (_, b'\n') => {
                    self.saw_newline = true;
                    if self.format == OutputFormat::Csv {
                        self.close_value(out, true)?;
                    }
                }
                (OutputFormat::Plain, _) => match self.lookup[b as usize] {
                    Some(s) => {
                        out.push(s);
                        self.symbols += 1;
                    }
                    None => {
                        return Err(Error::UnknownGlyph { glyph: b as char, offset: self.offset })
                    }
                },
                (OutputFormat::Csv, b'0'..=b'9') => {
                    if self.value.is_none() {
                        self.value_start = self.offset;
                    }
                    let digit = (b - b'0') as u64;
                    let v = self.value.unwrap_or(0);
                    let v = v.checked_mul(10).and_then(|v| v.checked_add(digit)).ok_or_else(|| {
                        Error::Malformed {
                            offset: self.value_start,
                            reason: "index does not fit in 64 bits".into(),
                        }
                    })?;
                    self.value = Some(v);
                }
                (OutputFormat::Csv, b',') => self.close_value(out, false)?,
                (OutputFormat::Csv, _) => {
                    return Err(Error::Malformed {
                        offset: self.offset,
                        reason: format!("unexpected byte {:?}", b as char),
                    })
                }
            }
            self.offset += 1;
        }
        Ok(())
    }

    fn close_value(&mut self, out: &mut Vec<Symbol>, at_end: bool) -> Result<()> {
        match self.value.take() {
            Some(v) if v < self.n as u64 => {
                out.push(v as Symbol);
                self.symbols += 1;
                Ok(())
            }
            Some(v) => Err(Error::SymbolOutOfRange { index: v, offset: self.value_start, n: self.n }),
            // an empty document is allowed; an empty field is not
            None if at_end && self.symbols == 0 && self.offset == 0 => Ok(()),
            None => Err(Error::Malformed { offset: self.offset, reason: "empty field".into() }),
        }
    }

    fn end(&mut self, out: &mut Vec<Symbol>) -> Result<()> {
        if self.format == OutputFormat::Csv && !self.saw_newline && self.offset > 0 {
            self.close_value(out, true)?;
        }
        Ok(())
    }
}
