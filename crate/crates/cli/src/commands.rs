use std::fmt;
use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use num_bigint::BigUint;
use serde::Serialize;
use superperm::analysis::{length_report, length_sum_factorials};
use superperm::baseline::recursive_superperm;
use superperm::format::{read_sequence, OutputFormat, SequenceWriter};
use superperm::generator::CountingSink;
use superperm::verifier::VerifyOptions;
use superperm::{GeneratorConfig, Mode, SymbolSink, VerificationReport, Verifier};

/// Exit 2 for bad invocations or unreadable input, exit 1 for I/O or a failed check.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Io(String),
    Check(String),
    /// A report was already printed; nothing more to say.
    Rejected,
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Io(_) | Failure::Check(_) | Failure::Rejected => 1,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Io(m) | Failure::Check(m) => f.write_str(m),
            Failure::Rejected => f.write_str("rejected"),
        }
    }
}

impl From<superperm::Error> for Failure {
    fn from(e: superperm::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn io_failure(path: Option<&Path>) -> impl Fn(io::Error) -> Failure + '_ {
    move |e| match path {
        Some(p) => Failure::Io(format!("{}: {e}", p.display())),
        None => Failure::Io(e.to_string()),
    }
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::with_capacity(1 << 16, File::create(p).map_err(io_failure(Some(p)))?)),
        None => Box::new(BufWriter::with_capacity(1 << 16, io::stdout().lock())),
    })
}

fn sidecar_path(output: &Path) -> PathBuf {
    let mut name = output.as_os_str().to_owned();
    name.push(".stats.json");
    PathBuf::from(name)
}

pub fn generate(
    n: usize,
    output: Option<&Path>,
    mode: Mode,
    format: OutputFormat,
    with_stats: bool,
) -> Result<(), Failure> {
    let config = GeneratorConfig::with_mode(n, mode)?;
    let mut writer = SequenceWriter::new(open_output(output)?, format, n)?;
    let stats = superperm::generate(&config, &mut writer).map_err(io_failure(output))?;
    writer.finish().map_err(io_failure(output))?;

    if with_stats {
        let json = serde_json::to_string_pretty(&stats).expect("stats serialize");
        match output {
            Some(path) => {
                let sidecar = sidecar_path(path);
                std::fs::write(&sidecar, json + "\n").map_err(io_failure(Some(&sidecar)))?;
            }
            None => eprintln!("{json}"),
        }
    }
    Ok(())
}

fn open_input(path: &Path) -> Result<Box<dyn BufRead>, Failure> {
    if path.as_os_str() == "-" {
        return Ok(Box::new(BufReader::new(io::stdin().lock())));
    }
    // An unreadable input is an invocation problem, same as a malformed one.
    let file = File::open(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(Box::new(BufReader::with_capacity(1 << 16, file)))
}

fn print_report(report: &VerificationReport, expect_length: Option<u64>) {
    let total: u64 = (1..=report.n as u64).product();
    println!("n: {}", report.n);
    println!("length: {}", report.length);
    if let Some(expected) = expect_length {
        println!("expected length: {expected}");
    }
    println!("covered: {} / {total}", report.covered);
    println!("complete: {}", report.complete);
    println!("permutation windows: {}", report.permutation_windows);
    println!("repeated windows: {}", report.repeated_windows);
    if let Some(p) = report.is_palindrome {
        println!("palindrome: {p}");
    }
    if let Some(rank) = report.first_missing {
        let perm = superperm::unrank_permutation(rank, report.n).unwrap_or_default();
        let shown: Vec<String> = perm.iter().map(|s| (*s as usize + 1).to_string()).collect();
        println!("first missing: rank {} ({})", rank.0, shown.join(","));
    }
}

pub fn verify(
    n: usize,
    input: &Path,
    format: OutputFormat,
    check_palindrome: bool,
    expect_length: Option<u64>,
    json: bool,
) -> Result<(), Failure> {
    let mut verifier = Verifier::new(n, VerifyOptions { check_palindrome, ..VerifyOptions::default() })?;
    let reader = open_input(input)?;
    read_sequence(reader, format, n, &mut verifier)?;
    let report = verifier.finish();

    if json {
        #[derive(Serialize)]
        struct Out<'a> {
            #[serde(flatten)]
            report: &'a VerificationReport,
            expected_length: Option<u64>,
        }
        let out = Out { report: &report, expected_length: expect_length };
        println!("{}", serde_json::to_string_pretty(&out).expect("report serializes"));
    } else {
        print_report(&report, expect_length);
    }

    let length_ok = expect_length.is_none_or(|l| l == report.length);
    let palindrome_ok = report.is_palindrome != Some(false);
    if report.complete && length_ok && palindrome_ok {
        Ok(())
    } else {
        Err(Failure::Rejected)
    }
}

pub fn stats(n: usize, json: bool) -> Result<(), Failure> {
    let report = length_report(n)?;
    if json {
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
        return Ok(());
    }
    println!("n: {}", report.n);
    println!("length: {}", report.length_closed_form);
    println!("length (sum of factorials): {}", report.length_sum_factorials);
    println!("beads: {}", report.bead_count);
    println!("operations: {}", report.operation_count);
    for (len, count) in &report.intersection_histogram {
        println!("intersections of length {len}: {count}");
    }
    Ok(())
}

pub fn baseline(n: usize, output: Option<&Path>, format: OutputFormat) -> Result<(), Failure> {
    let build = recursive_superperm(n)?;
    let mut writer = SequenceWriter::new(open_output(output)?, format, n)?;
    writer.write_symbols(&build.sequence).map_err(io_failure(output))?;
    writer.finish().map_err(io_failure(output))?;

    let report = superperm::verify(&build.sequence, n, false)?;
    let expected = length_sum_factorials(n);
    eprintln!(
        "baseline n={n}: length {} covered {} complete {}",
        report.length, report.covered, report.complete
    );
    if !report.complete || BigUint::from(report.length) != expected {
        return Err(Failure::Check(format!(
            "baseline failed verification (length {}, expected {expected})",
            report.length
        )));
    }
    Ok(())
}

pub fn bench(n: usize, reps: u32) -> Result<(), Failure> {
    let config = GeneratorConfig::new(n)?;
    let expected = length_sum_factorials(n);
    let mut best = f64::INFINITY;
    let mut total = 0.0;
    let mut emitted = BigUint::default();
    for rep in 1..=reps {
        let mut sink = CountingSink::default();
        let start = Instant::now();
        let Ok(stats) = superperm::generate(&config, &mut sink);
        let secs = start.elapsed().as_secs_f64();
        best = best.min(secs);
        total += secs;
        if stats.symbols_emitted != expected || BigUint::from(sink.symbols) != expected {
            return Err(Failure::Check(format!(
                "rep {rep}: emitted {} symbols, expected {expected}",
                stats.symbols_emitted
            )));
        }
        emitted = stats.symbols_emitted;
    }
    let symbols = emitted.to_string().parse::<f64>().unwrap_or(f64::NAN);
    println!("n: {n}");
    println!("emitted: {emitted} (expected {expected})");
    println!("reps: {reps}");
    println!("best: {:.6} s", best);
    println!("mean: {:.6} s", total / reps as f64);
    if best > 0.0 {
        println!("throughput: {:.3e} symbols/s", symbols / best);
    }
    Ok(())
}
