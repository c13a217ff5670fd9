use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

mod commands;

use commands::Failure;

/// Generate, verify and analyze superpermutations built by mirror-shifting beads.
#[derive(Debug, Parser)]
#[command(name = "superperm", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Stream the superpermutation for n symbols to a file or stdout.
    Generate {
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..=256))]
        n: u16,
        /// Destination file; stdout when omitted.
        #[arg(long)]
        output: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value_t = ModeArg::Stream)]
        mode: ModeArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
        format: FormatArg,
        /// Write generation statistics as JSON (to `<output>.stats.json`, or stderr).
        #[arg(long)]
        stats: bool,
    },
    /// Check that a sequence contains every permutation of n symbols.
    Verify {
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..=256))]
        n: u16,
        /// Input file, or `-` for stdin.
        #[arg(long)]
        input: std::path::PathBuf,
        #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
        format: FormatArg,
        #[arg(long)]
        check_palindrome: bool,
        #[arg(long)]
        expect_length: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Print exact length, intersection and operation counts.
    Stats {
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..=1000))]
        n: u16,
        #[arg(long)]
        json: bool,
    },
    /// Build the classical recursive superpermutation, write it, and verify it.
    Baseline {
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..=1000))]
        n: u16,
        #[arg(long)]
        output: Option<std::path::PathBuf>,
        #[arg(long, value_enum, default_value_t = FormatArg::Plain)]
        format: FormatArg,
    },
    /// Time stream-mode generation into a counting sink.
    Bench {
        #[arg(long, value_parser = clap::value_parser!(u16).range(1..=256))]
        n: u16,
        #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..=1000))]
        reps: u32,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Stream,
    Palindrome,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Plain,
    Csv,
}

impl From<ModeArg> for superperm::Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Stream => superperm::Mode::Stream,
            ModeArg::Palindrome => superperm::Mode::PalindromeBuffer,
        }
    }
}

impl From<FormatArg> for superperm::format::OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Plain => Self::Plain,
            FormatArg::Csv => Self::Csv,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Generate { n, output, mode, format, stats } => {
            commands::generate(n.into(), output.as_deref(), mode.into(), format.into(), stats)
        }
        Command::Verify { n, input, format, check_palindrome, expect_length, json } => {
            commands::verify(n.into(), &input, format.into(), check_palindrome, expect_length, json)
        }
        Command::Stats { n, json } => commands::stats(n.into(), json),
        Command::Baseline { n, output, format } => {
            commands::baseline(n.into(), output.as_deref(), format.into())
        }
        Command::Bench { n, reps } => commands::bench(n.into(), reps),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            if !matches!(failure, Failure::Rejected) {
                eprintln!("error: {failure}");
            }
            ExitCode::from(failure.exit_code())
        }
    }
}
