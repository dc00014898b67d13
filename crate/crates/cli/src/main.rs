//! `pm`: approximate pattern matching from the command line.
//!
//! `pm search` reports the `k`-mismatch or `k`-edit occurrences of a pattern
//! in a text. Each side is a raw file, a grammar file or an inline literal.
//! `pm analyze` prints the structure found in a pattern.
//!
//! # Algorithm
//!
//! 1. Load both sides. Grammar files are parsed and validated, and plain
//!    inputs are taken byte for byte.
//! 2. Choose a pipeline:
//!    * plain text: index pattern and text with the standard backend and
//!      run the matcher;
//!    * grammar text: run the compressed driver, or with `--direct` run the
//!      matcher through the grammar backend itself;
//!    * `--oracle`: expand everything and use the brute-force reference.
//! 3. Print the canonical progressions `start:diff:count`, then
//!    `total=<n>`. Alternatively print only the total, or one JSON object.
//!
//! # Invariants
//!
//! * Output is byte-identical across runs. The only randomness is the
//!   fingerprint seed (`--seed`, or `PM_SEED`), and it cannot change the
//!   answer.
//! * Exit codes: 0 success, 2 unreadable input or bad usage, 3 malformed
//!   grammar (the message names the line), 4 invalid `k` or empty pattern.
//!
//! # Design Notes
//!
//! A plain pattern paired with a grammar text is wrapped in a balanced
//! grammar, so every grammar-text run goes through one code path.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use backend_slp::{Slp, SlpBackend, SlpError};
use backend_standard::StandardIndex;
use clap::{Args, Parser, Subcommand, ValueEnum};
use compressed_driver::{build_pattern_once, report_with, DriverError, DriverOptions, Metric};
use match_edit::{analyze_ed, edit_occurrences, PatternAnalysisED};
use match_hamming::{analyze_hd, mismatch_occurrences, PatternAnalysisHD};
use pillar_core::{Frag, OccurrenceSet, Pillar};
use serde::Serialize;
use thiserror::Error;

/// Fingerprint seed used when neither `--seed` nor `PM_SEED` is given.
const DEFAULT_SEED: u64 = 0x5eed_0f9a_77e2;

#[derive(Parser)]
#[command(
    name = "pm",
    version,
    about = "Approximate pattern matching with k mismatches or k edits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report the occurrences of a pattern in a text.
    Search(SearchArgs),
    /// Print the structure of a pattern for a given budget.
    Analyze(AnalyzeArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MetricArg {
    Hamming,
    Edit,
}

impl MetricArg {
    fn name(self) -> &'static str {
        match self {
            MetricArg::Hamming => "hamming",
            MetricArg::Edit => "edit",
        }
    }

    fn metric(self) -> Metric {
        match self {
            MetricArg::Hamming => Metric::Hamming,
            MetricArg::Edit => Metric::Edit,
        }
    }
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct PatternSource {
    /// Pattern as a raw file.
    #[arg(long, value_name = "FILE")]
    pattern: Option<PathBuf>,
    /// Pattern as a grammar file.
    #[arg(long, value_name = "FILE")]
    pattern_slp: Option<PathBuf>,
    /// Pattern given inline.
    #[arg(long, value_name = "TEXT")]
    pattern_lit: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct TextSource {
    /// Text as a raw file.
    #[arg(long, value_name = "FILE")]
    text: Option<PathBuf>,
    /// Text as a grammar file.
    #[arg(long, value_name = "FILE")]
    text_slp: Option<PathBuf>,
    /// Text given inline.
    #[arg(long, value_name = "TEXT")]
    text_lit: Option<String>,
}

#[derive(Args)]
struct SearchArgs {
    /// Distance between the pattern and text fragments.
    #[arg(long, value_enum, default_value = "hamming")]
    metric: MetricArg,
    /// Maximum number of mismatches or edits.
    #[arg(short, long)]
    k: usize,
    #[command(flatten)]
    pattern: PatternSource,
    #[command(flatten)]
    text: TextSource,
    /// Print only `total=<n>`.
    #[arg(long, conflicts_with = "json")]
    count: bool,
    /// Print a single JSON object.
    #[arg(long)]
    json: bool,
    /// Use the brute-force reference instead of the fast algorithms.
    #[arg(long, hide = true)]
    oracle: bool,
    /// With a grammar text, query the grammar directly instead of solving
    /// boundary windows.
    #[arg(long, conflicts_with = "oracle")]
    direct: bool,
    /// Fingerprint seed for grammar queries.
    #[arg(long, env = "PM_SEED")]
    seed: Option<u64>,
    /// Worker threads for the compressed driver.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Distance the analysis is made for.
    #[arg(long, value_enum, default_value = "hamming")]
    metric: MetricArg,
    /// Budget the analysis is made for (at least 1).
    #[arg(short, long)]
    k: usize,
    #[command(flatten)]
    pattern: PatternSource,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("cannot read {path}: {source}")]
    Unreadable { path: PathBuf, source: std::io::Error },
    #[error("{path}: malformed grammar: {source}")]
    MalformedSlp { path: PathBuf, source: SlpError },
    #[error("k = {k} is not allowed for a pattern of length {m}")]
    BadK { k: usize, m: usize },
    #[error("the pattern is empty")]
    EmptyPattern,
    #[error(transparent)]
    Driver(#[from] DriverError),
    #[error("cannot write output: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Unreadable { .. } | CliError::Output(_) => 2,
            CliError::MalformedSlp { .. } => 3,
            CliError::BadK { .. } | CliError::EmptyPattern | CliError::Driver(_) => 4,
        }
    }
}

/// One side of a search, as loaded.
enum Input {
    Plain(Vec<u8>),
    Grammar(Slp),
}

impl Input {
    fn len(&self) -> u64 {
        match self {
            Input::Plain(b) => b.len() as u64,
            Input::Grammar(g) => g.len(),
        }
    }

    fn bytes(&self) -> Vec<u8> {
        match self {
            Input::Plain(b) => b.clone(),
            Input::Grammar(g) => g.decompress(),
        }
    }

    fn into_grammar(self) -> Slp {
        match self {
            Input::Plain(b) => Slp::from_bytes(&b),
            Input::Grammar(g) => g,
        }
    }
}

fn read(path: &Path) -> Result<Vec<u8>, CliError> {
    std::fs::read(path).map_err(|source| CliError::Unreadable {
        path: path.to_owned(),
        source,
    })
}

fn load(raw: &Option<PathBuf>, slp: &Option<PathBuf>, lit: &Option<String>) -> Result<Input, CliError> {
    if let Some(path) = raw {
        return Ok(Input::Plain(read(path)?));
    }
    if let Some(path) = slp {
        let g = Slp::parse(&read(path)?).map_err(|source| CliError::MalformedSlp {
            path: path.clone(),
            source,
        })?;
        return Ok(Input::Grammar(g));
    }
    Ok(Input::Plain(lit.clone().unwrap_or_default().into_bytes()))
}

fn load_pattern(src: &PatternSource) -> Result<Input, CliError> {
    let p = load(&src.pattern, &src.pattern_slp, &src.pattern_lit)?;
    if p.len() == 0 {
        return Err(CliError::EmptyPattern);
    }
    Ok(p)
}

#[derive(Serialize)]
struct JsonProgression {
    start: usize,
    diff: usize,
    count: usize,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    metric: &'a str,
    k: usize,
    progressions: Vec<JsonProgression>,
    total: usize,
}

fn search(args: &SearchArgs, out: &mut impl Write) -> Result<(), CliError> {
    let pattern = load_pattern(&args.pattern)?;
    let text = load(&args.text.text, &args.text.text_slp, &args.text.text_lit)?;
    let m = pattern.len();
    if args.k as u64 > m {
        return Err(CliError::BadK {
            k: args.k,
            m: m as usize,
        });
    }
    let seed = args.seed.unwrap_or(DEFAULT_SEED);
    let occ = if args.oracle {
        let (p, t) = (pattern.bytes(), text.bytes());
        let found = match args.metric {
            MetricArg::Hamming => oracle::brute_hd_occurrences(&p, &t, args.k),
            MetricArg::Edit => oracle::brute_ed_occurrences(&p, &t, args.k),
        };
        OccurrenceSet::from_positions(found)
    } else {
        match text {
            Input::Plain(t) => {
                let (b, h) = StandardIndex::build(&[pattern.bytes(), t]);
                matcher(args.metric, &b, h[0], h[1], args.k)
            }
            Input::Grammar(t) if args.direct => {
                let mut b = SlpBackend::new(seed);
                let p = b.add(pattern.into_grammar());
                let t = b.add(t);
                matcher(args.metric, &b, p, t, args.k)
            }
            Input::Grammar(t) => {
                let cache = build_pattern_once(&pattern.into_grammar(), args.k, args.metric.metric())?;
                report_with(&t, &cache, DriverOptions { jobs: args.jobs })?
            }
        }
    };
    let total = occ.len();
    if args.json {
        let report = JsonReport {
            metric: args.metric.name(),
            k: args.k,
            progressions: occ
                .progressions()
                .iter()
                .map(|ap| JsonProgression {
                    start: ap.first,
                    diff: ap.diff,
                    count: ap.count,
                })
                .collect(),
            total,
        };
        serde_json::to_writer(&mut *out, &report).map_err(std::io::Error::from)?;
        writeln!(out)?;
    } else {
        if !args.count {
            for ap in occ.progressions() {
                writeln!(out, "{}:{}:{}", ap.first, ap.diff, ap.count)?;
            }
        }
        writeln!(out, "total={total}")?;
    }
    Ok(())
}

fn matcher<B: Pillar + ?Sized>(metric: MetricArg, b: &B, p: Frag, t: Frag, k: usize) -> OccurrenceSet {
    match metric {
        MetricArg::Hamming => mismatch_occurrences(b, p, t, k),
        MetricArg::Edit => edit_occurrences(b, p, t, k),
    }
}

fn analyze(args: &AnalyzeArgs, out: &mut impl Write) -> Result<(), CliError> {
    let p = load_pattern(&args.pattern)?.bytes();
    let m = p.len();
    if args.k == 0 || args.k > m {
        return Err(CliError::BadK { k: args.k, m });
    }
    let (b, h) = StandardIndex::build(&[&p]);
    let show = |f: Frag| b.bytes(f).escape_ascii().to_string();
    let lines: Vec<String> = match args.metric {
        MetricArg::Hamming => match analyze_hd(&b, h[0], args.k) {
            PatternAnalysisHD::Breaks(bs) => std::iter::once(format!("breaks count={}", bs.len()))
                .chain(bs.iter().map(|x| format!("break offset={} len={}", x.offset, x.len)))
                .collect(),
            PatternAnalysisHD::RepetitiveRegions(rs) => std::iter::once(format!("regions count={}", rs.len()))
                .chain(
                    rs.iter()
                        .map(|r| format!("region offset={} len={} period={}", r.offset, r.len, show(r.period))),
                )
                .collect(),
            PatternAnalysisHD::ApproxPeriod(q) => vec![format!("approximate-period period={}", show(q))],
        },
        MetricArg::Edit => match analyze_ed(&b, h[0], args.k) {
            PatternAnalysisED::Breaks(bs) => std::iter::once(format!("breaks count={}", bs.len()))
                .chain(bs.iter().map(|x| format!("break offset={} len={}", x.offset, x.len)))
                .collect(),
            PatternAnalysisED::RepetitiveRegions(rs) => std::iter::once(format!("regions count={}", rs.len()))
                .chain(
                    rs.iter()
                        .map(|r| format!("region offset={} len={} period={}", r.offset, r.len, show(r.period))),
                )
                .collect(),
            PatternAnalysisED::ApproxPeriod(q) => vec![format!("approximate-period period={}", show(q))],
        },
    };
    writeln!(out, "metric={} k={} m={m}", args.metric.name(), args.k)?;
    for line in lines {
        writeln!(out, "{line}")?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    let result = match &cli.command {
        Command::Search(args) => search(args, &mut out),
        Command::Analyze(args) => analyze(args, &mut out),
    };
    let result = result.and_then(|()| out.flush().map_err(CliError::from));
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("pm: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
