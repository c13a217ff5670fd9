//! Browser bindings for the superpermutation generator.
//!
//! Three operations are exported, each returning a JSON string for the page
//! in `www/` to render:
//!
//! * [`trace`]: the full sequence for small `n`, split into the emitted blocks.
//! * [`apply_operator`]: one straight/mirror shift (or the trailing bead) on a bead core.
//! * [`length_table`]: exact length and operation counts for `1..=max_n`.

use std::convert::Infallible;

use serde::Serialize;
use superperm::analysis::length_report;
use superperm::{generate, verify, Alphabet, Bead, GeneratorConfig, RingOrder, ShiftPosition, Symbol, SymbolSink};
use wasm_bindgen::prelude::*;

/// Largest `n` the page will trace symbol by symbol (46,233 symbols).
pub const MAX_TRACE_N: usize = 8;

#[derive(Debug, Serialize)]
pub struct Block {
    /// Symbols of the previous block reused as the start of this bead.
    pub skip: usize,
    pub text: String,
}

#[derive(Debug, Serialize)]
pub struct Trace {
    pub n: usize,
    pub sequence: String,
    pub blocks: Vec<Block>,
    pub mirror_shifts: String,
    pub covered: u64,
    pub complete: bool,
    pub palindrome: bool,
}

#[derive(Default)]
struct Writes(Vec<Vec<Symbol>>);

impl SymbolSink for Writes {
    type Error = Infallible;

    fn write_symbols(&mut self, symbols: &[Symbol]) -> Result<(), Infallible> {
        self.0.push(symbols.to_vec());
        Ok(())
    }
}

pub fn trace_of(n: usize) -> Result<Trace, String> {
    if n == 0 || n > MAX_TRACE_N {
        return Err(format!("n must be between 1 and {MAX_TRACE_N}"));
    }
    let alphabet = Alphabet::standard(n).map_err(|e| e.to_string())?;
    let config = GeneratorConfig::new(n).map_err(|e| e.to_string())?;
    let mut writes = Writes::default();
    let Ok(stats) = generate(&config, &mut writes);

    // Beads go out as two writes: the core past the overlap, then the duplicated prefix.
    let bead_len = 2 * n - 1;
    let blocks: Vec<Block> = if n < 3 {
        writes.0.iter().map(|w| Block { skip: 0, text: alphabet.render(w) }).collect()
    } else {
        writes
            .0
            .chunks(2)
            .map(|pair| {
                let symbols: Vec<Symbol> = pair.concat();
                Block { skip: bead_len - symbols.len(), text: alphabet.render(&symbols) }
            })
            .collect()
    };
    let sequence: Vec<Symbol> = writes.0.concat();
    let report = verify(&sequence, n, true).map_err(|e| e.to_string())?;
    Ok(Trace {
        n,
        sequence: alphabet.render(&sequence),
        blocks,
        mirror_shifts: stats.mirror_shift_count.to_string(),
        covered: report.covered,
        complete: report.complete,
        palindrome: report.is_palindrome == Some(true),
    })
}

#[derive(Debug, Serialize)]
pub struct OperatorResult {
    pub core: String,
    pub full: String,
    pub windows: Vec<String>,
}

pub fn operator_on(core: &str, op: &str, param: usize) -> Result<OperatorResult, String> {
    let n = core.chars().count();
    let alphabet = Alphabet::standard(n).map_err(|e| e.to_string())?;
    let bead = Bead::parse(core, &alphabet).map_err(|e| e.to_string())?;
    let out = match op {
        "identity" => Ok(bead),
        "ss" => bead.straight_shift(ShiftPosition(param)),
        "su" => bead.straight_unshift(ShiftPosition(param)),
        "ms" => bead.mirror_shift(RingOrder(param)),
        "mu" => bead.mirror_unshift(RingOrder(param)),
        "trailing" => bead.trailing_bead(RingOrder(param)),
        other => return Err(format!("unknown operator {other:?}")),
    }
    .map_err(|e| e.to_string())?;
    Ok(OperatorResult {
        core: out.render(&alphabet),
        full: alphabet.render(&out.expand()),
        windows: out.windows().map(|w| alphabet.render(&w)).collect(),
    })
}

#[derive(Debug, Serialize)]
pub struct LengthRow {
    pub n: usize,
    pub length: String,
    pub beads: String,
    pub operations: String,
    /// Overlap counts for lengths `1..=n-2`.
    pub intersections: Vec<String>,
}

pub fn length_rows(max_n: usize) -> Result<Vec<LengthRow>, String> {
    (1..=max_n.clamp(1, 40))
        .map(|n| {
            let r = length_report(n).map_err(|e| e.to_string())?;
            Ok(LengthRow {
                n,
                length: r.length_closed_form.to_string(),
                beads: r.bead_count.to_string(),
                operations: r.operation_count.to_string(),
                intersections: r.intersection_histogram.values().map(|v| v.to_string()).collect(),
            })
        })
        .collect()
}

fn to_json<T: Serialize>(value: Result<T, String>) -> Result<String, JsError> {
    let value = value.map_err(|e| JsError::new(&e))?;
    serde_json::to_string(&value).map_err(|e| JsError::new(&e.to_string()))
}

/// Generates the sequence for `n <= 8` and returns it with its emitted blocks.
#[wasm_bindgen]
pub fn trace(n: u32) -> Result<String, JsError> {
    to_json(trace_of(n as usize))
}

/// Applies `op` (`ss`, `su`, `ms`, `mu`, `trailing`, `identity`) to a core such as `"12345"`.
#[wasm_bindgen(js_name = applyOperator)]
pub fn apply_operator(core: &str, op: &str, param: u32) -> Result<String, JsError> {
    to_json(operator_on(core, op, param as usize))
}

#[wasm_bindgen(js_name = lengthTable)]
pub fn length_table(max_n: u32) -> Result<String, JsError> {
    to_json(length_rows(max_n as usize))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trace_n4_blocks() {
        let t = trace_of(4).unwrap();
        assert_eq!(t.sequence.len(), 33);
        assert!(t.complete && t.palindrome);
        assert_eq!(t.blocks.len(), 6);
        assert_eq!(t.blocks[0].text, "1234123");
        assert_eq!(t.blocks[0].skip, 0);
        let skips: Vec<usize> = t.blocks.iter().map(|b| b.skip).collect();
        assert_eq!(skips, vec![0, 2, 2, 1, 2, 2]);
        let joined: String = t.blocks.iter().map(|b| b.text.as_str()).collect();
        assert_eq!(joined, t.sequence);
        assert_eq!(t.mirror_shifts, "5");
    }

    #[test]
    fn trace_small_and_bounds() {
        assert_eq!(trace_of(1).unwrap().sequence, "1");
        assert_eq!(trace_of(2).unwrap().sequence, "121");
        assert!(trace_of(0).is_err());
        assert!(trace_of(9).is_err());
    }

    #[test]
    fn operators() {
        assert_eq!(operator_on("12345", "ss", 3).unwrap().full, "231452314");
        assert_eq!(operator_on("12345", "su", 3).unwrap().core, "31245");
        assert_eq!(operator_on("12345", "ms", 1).unwrap().core, "34215");
        assert_eq!(operator_on("12345", "mu", 1).unwrap().core, "43125");
        assert_eq!(operator_on("12345", "trailing", 2).unwrap().core, "43125");
        assert_eq!(operator_on("312", "identity", 0).unwrap().windows, vec!["312", "123", "231"]);
        assert!(operator_on("12345", "ss", 5).is_err());
        assert!(operator_on("1224", "ss", 2).is_err());
        assert!(operator_on("123", "rot", 1).is_err());
    }

    #[test]
    fn table() {
        let rows = length_rows(6).unwrap();
        assert_eq!(rows.len(), 6);
        assert_eq!(rows[5].length, "873");
        assert_eq!(rows[3].intersections, vec!["1", "4"]);
        assert_eq!(rows[0].intersections.len(), 0);
    }
}
