//! The `edsmatch` command line.
//!
//! Exit codes: 0 ok, 1 I/O failure, 2 parse or validation error, 3 oracle
//! budget exceeded, 4 `check` mismatch.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use thiserror::Error;

use crate::eds::{
    from_reference_and_variants, generate_random, parse_eds, parse_reference, parse_variants,
    serialize_eds, EdsText, GeneratorParams, LenRange, Occurrence,
};
use crate::matcher::{search, validate_pattern};
use crate::naive::{naive_occurrences, BudgetExceeded, ExpansionBudget};

#[derive(Debug, Parser)]
#[command(
    name = "edsmatch",
    version,
    about = "Find a solid pattern in an elastic-degenerate text"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print every occurrence as `head<TAB>tail`.
    Match(MatchArgs),
    /// Compare the matcher against the brute-force oracle.
    Check(CheckArgs),
    /// Print n, N, k and alpha of a text.
    Stats(TextArg),
    /// Write a random text.
    Generate(GenerateArgs),
    /// Build a text from a reference and a variants file.
    Convert(ConvertArgs),
}

#[derive(Debug, Args)]
pub struct TextArg {
    /// EDS file, or `-` for standard input.
    #[arg(short, long)]
    pub text: String,
}

#[derive(Debug, Args)]
pub struct BudgetArgs {
    /// Largest number of spellings the oracle may expand.
    #[arg(long, default_value_t = ExpansionBudget::default().max_strings)]
    pub max_strings: u64,
    /// Largest combined length of the spellings the oracle may expand.
    #[arg(long, default_value_t = ExpansionBudget::default().max_total_letters)]
    pub max_letters: u64,
}

impl BudgetArgs {
    fn budget(&self) -> ExpansionBudget {
        ExpansionBudget {
            max_strings: self.max_strings,
            max_total_letters: self.max_letters,
        }
    }
}

#[derive(Debug, Args)]
pub struct MatchArgs {
    /// Pattern, or `@FILE` to read it from a file.
    #[arg(short, long)]
    pub pattern: String,
    #[command(flatten)]
    pub text: TextArg,
    /// Emit one JSON document with occurrences and text statistics.
    #[arg(long)]
    pub json: bool,
    /// Use the brute-force oracle instead of the matcher.
    #[arg(long)]
    pub oracle: bool,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(short, long)]
    pub pattern: String,
    #[command(flatten)]
    pub text: TextArg,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// RNG seed.
    #[arg(long)]
    pub seed: u64,
    /// Number of seeds, `A..B` inclusive.
    #[arg(long, default_value = "1..5")]
    pub k: LenRange,
    #[arg(long, default_value = "0..5")]
    pub seed_len: LenRange,
    /// Alternatives per symbol.
    #[arg(long, default_value = "2..4")]
    pub alts: LenRange,
    #[arg(long, default_value = "0..5")]
    pub alt_len: LenRange,
    /// Alphabet size.
    #[arg(long, default_value_t = 4)]
    pub sigma: usize,
    /// Probability that an alternative is empty.
    #[arg(long, default_value_t = 0.0)]
    pub empty_prob: f64,
    /// Output file; standard output when omitted or `-`.
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    /// Reference sequence (lines starting with `>` are skipped).
    #[arg(long = "ref")]
    pub reference: PathBuf,
    /// Variants TSV: `pos<TAB>ref<TAB>alt1,alt2,...`.
    #[arg(long)]
    pub vars: PathBuf,
    #[arg(short, long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Invalid(String),
    #[error("oracle budget exceeded: {0}")]
    Budget(#[from] BudgetExceeded),
    #[error("matcher and oracle disagree")]
    Mismatch,
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Io(_) => 1,
            Self::Invalid(_) => 2,
            Self::Budget(_) => 3,
            Self::Mismatch => 4,
        }
    }
}

fn io_error(what: impl std::fmt::Display, e: io::Error) -> CliError {
    CliError::Io(format!("{what}: {e}"))
}

/// Standard streams, swappable in tests.
pub struct Streams<'a> {
    pub stdin: &'a mut dyn Read,
    pub stdout: &'a mut dyn Write,
    pub stderr: &'a mut dyn Write,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, streams: &mut Streams<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(streams.stderr, "{}", e.render());
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli.command, streams) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(streams.stderr, "error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(command: &Command, s: &mut Streams<'_>) -> Result<(), CliError> {
    match command {
        Command::Match(args) => cmd_match(args, s),
        Command::Check(args) => cmd_check(args, s),
        Command::Stats(args) => cmd_stats(args, s),
        Command::Generate(args) => cmd_generate(args, s),
        Command::Convert(args) => cmd_convert(args, s),
    }
}

/// Inline pattern, or `@FILE` whose single trailing newline is dropped.
pub fn read_pattern(source: &str) -> Result<Vec<u8>, CliError> {
    let pattern = match source.strip_prefix('@') {
        Some(path) => {
            let mut bytes = fs::read(path).map_err(|e| io_error(path, e))?;
            if bytes.last() == Some(&b'\n') {
                bytes.pop();
                if bytes.last() == Some(&b'\r') {
                    bytes.pop();
                }
            }
            bytes
        }
        None => source.as_bytes().to_vec(),
    };
    validate_pattern(&pattern).map_err(|e| CliError::Invalid(e.to_string()))?;
    Ok(pattern)
}

fn read_text(source: &str, s: &mut Streams<'_>) -> Result<EdsText, CliError> {
    let bytes = if source == "-" {
        let mut buf = Vec::new();
        s.stdin
            .read_to_end(&mut buf)
            .map_err(|e| io_error("standard input", e))?;
        buf
    } else {
        fs::read(source).map_err(|e| io_error(source, e))?
    };
    let text = parse_eds(&bytes).map_err(|e| CliError::Invalid(format!("{source}: {e}")))?;

    let singles: Vec<usize> = text.singleton_symbols().collect();
    if let Some(&first) = singles.first() {
        let count = singles.len();
        let _ = writeln!(
            s.stderr,
            "warning: {count} symbol(s) have a single alternative (first at position {})",
            text.symbol_position(first)
        );
    }
    Ok(text)
}

fn write_output(path: Option<&Path>, bytes: &[u8], s: &mut Streams<'_>) -> Result<(), CliError> {
    match path {
        Some(p) if p != Path::new("-") => fs::write(p, bytes).map_err(|e| io_error(p.display(), e)),
        _ => s
            .stdout
            .write_all(bytes)
            .map_err(|e| io_error("standard output", e)),
    }
}

#[derive(Serialize)]
struct MatchDocument<'a> {
    occurrences: &'a [Occurrence],
    n: usize,
    #[serde(rename = "N")]
    total_size: usize,
    k: usize,
    alpha: usize,
    gamma: usize,
}

pub fn cmd_match(args: &MatchArgs, s: &mut Streams<'_>) -> Result<(), CliError> {
    let pattern = read_pattern(&args.pattern)?;
    let text = read_text(&args.text.text, s)?;
    let (occurrences, gamma) = if args.oracle {
        let occ = naive_occurrences(&pattern, &text, args.budget.budget())?;
        let gamma = occ
            .iter()
            .map(|o| text.symbols_between(o.head, o.tail))
            .max()
            .unwrap_or(0);
        (occ, gamma)
    } else {
        let report = search(&pattern, &text).map_err(|e| CliError::Invalid(e.to_string()))?;
        (report.occurrences, report.gamma)
    };

    let mut out = Vec::new();
    if args.json {
        let stats = text.stats();
        let doc = MatchDocument {
            occurrences: &occurrences,
            n: stats.n,
            total_size: stats.total_size,
            k: stats.k,
            alpha: stats.alpha,
            gamma,
        };
        serde_json::to_writer(&mut out, &doc).expect("serializing to memory");
        out.push(b'\n');
    } else {
        for o in &occurrences {
            writeln!(out, "{}\t{}", o.head, o.tail).expect("writing to memory");
        }
    }
    write_output(None, &out, s)
}

pub fn cmd_check(args: &CheckArgs, s: &mut Streams<'_>) -> Result<(), CliError> {
    let pattern = read_pattern(&args.pattern)?;
    let text = read_text(&args.text.text, s)?;
    let expected = naive_occurrences(&pattern, &text, args.budget.budget())?;
    let got = search(&pattern, &text)
        .map_err(|e| CliError::Invalid(e.to_string()))?
        .occurrences;

    let mut out = Vec::new();
    if got == expected {
        writeln!(out, "ok\t{}", got.len()).expect("writing to memory");
        return write_output(None, &out, s);
    }
    for o in got.iter().filter(|o| expected.binary_search(o).is_err()) {
        writeln!(out, "matcher-only\t{}\t{}", o.head, o.tail).expect("writing to memory");
    }
    for o in expected.iter().filter(|o| got.binary_search(o).is_err()) {
        writeln!(out, "oracle-only\t{}\t{}", o.head, o.tail).expect("writing to memory");
    }
    write_output(None, &out, s)?;
    Err(CliError::Mismatch)
}

pub fn cmd_stats(args: &TextArg, s: &mut Streams<'_>) -> Result<(), CliError> {
    let stats = read_text(&args.text, s)?.stats();
    let out = format!(
        "n={}\nN={}\nk={}\nalpha={}\n",
        stats.n, stats.total_size, stats.k, stats.alpha
    );
    write_output(None, out.as_bytes(), s)
}

pub fn cmd_generate(args: &GenerateArgs, s: &mut Streams<'_>) -> Result<(), CliError> {
    let params = GeneratorParams {
        k: args.k,
        seed_len: args.seed_len,
        alts: args.alts,
        alt_len: args.alt_len,
        sigma: args.sigma,
        empty_prob: args.empty_prob,
    };
    let text = generate_random(&params, args.seed).map_err(|e| CliError::Invalid(e.to_string()))?;
    let mut out = serialize_eds(&text);
    out.push(b'\n');
    write_output(args.output.as_deref(), &out, s)
}

pub fn cmd_convert(args: &ConvertArgs, s: &mut Streams<'_>) -> Result<(), CliError> {
    let read = |p: &Path| fs::read(p).map_err(|e| io_error(p.display(), e));
    let invalid =
        |p: &Path, e: &dyn std::fmt::Display| CliError::Invalid(format!("{}: {e}", p.display()));

    let reference =
        parse_reference(&read(&args.reference)?).map_err(|e| invalid(&args.reference, &e))?;
    let variants = parse_variants(&read(&args.vars)?).map_err(|e| invalid(&args.vars, &e))?;
    let text =
        from_reference_and_variants(&reference, &variants).map_err(|e| invalid(&args.vars, &e))?;
    let mut out = serialize_eds(&text);
    out.push(b'\n');
    write_output(args.output.as_deref(), &out, s)
}
