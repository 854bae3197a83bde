//! `cyclic-words`: generate words, tabulate their complexities and run the
//! verification suites.
//!
//! Exit status is 0 on success, 1 when a check fails or the prefix budget is
//! exhausted, and 2 on invalid input.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use cyclic_words::generators::WordSpec;
use cyclic_words::harness::{
    emit_report, emit_table, run_complexity, run_language, run_suite, Format, LengthRange,
    RunConfig, SuiteId,
};
use cyclic_words::sturmian::christoffel_array;
use cyclic_words::NamedWord;

#[derive(Parser)]
#[command(name = "cyclic-words", version, about = "Factor, abelian and cyclic complexity of words")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Default)]
struct Common {
    /// Built-in word name, e.g. thue-morse, fibonacci, regular-paperfolding.
    #[arg(long)]
    word: Option<String>,
    /// JSON run configuration; flags given on the command line override it.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Lengths, as A..B (inclusive), A..=B or N.
    #[arg(long)]
    n: Option<LengthRange>,
    /// csv or json.
    #[arg(long)]
    format: Option<Format>,
    /// Longest prefix, in letters, that may be read from a word.
    #[arg(long)]
    budget: Option<usize>,
    /// Write output to this file instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print a prefix of a word.
    Generate {
        #[command(flatten)]
        common: Common,
        /// Prefix length.
        #[arg(long, default_value_t = 64)]
        len: usize,
    },
    /// Tabulate n, p(n), a(n), c(n), mf(n).
    Complexity {
        #[command(flatten)]
        common: Common,
    },
    /// Print the Christoffel array of a coprime pair.
    Christoffel {
        r: u64,
        s: u64,
        #[command(flatten)]
        common: Common,
    },
    /// Tabulate the complexities of the language avoiding a set of words.
    Language {
        /// Forbidden words, comma separated, e.g. 11,000.
        #[arg(long, value_delimiter = ',')]
        forbidden: Vec<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Run verification suites.
    Verify {
        /// Suite ids; every suite when empty.
        suites: Vec<String>,
        /// Print the available suites and exit.
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        common: Common,
    },
}

fn load_config(common: &Common) -> Result<RunConfig> {
    let mut cfg = match &common.config {
        Some(path) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))?;
            RunConfig::from_json(&text)?
        }
        None => RunConfig::default(),
    };
    if let Some(name) = &common.word {
        let name: NamedWord = serde_json::from_value(serde_json::Value::String(name.clone()))
            .with_context(|| format!("unknown word {name:?}"))?;
        cfg.word = Some(WordSpec::Named { name });
    }
    if common.n.is_some() {
        cfg.n = common.n;
    }
    if common.format.is_some() {
        cfg.format = common.format;
    }
    if common.budget.is_some() {
        cfg.budget = common.budget;
    }
    Ok(cfg)
}

/// Writes to a sibling temporary file and renames it into place.
fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
    let name = path.file_name().context("output path has no file name")?;
    let tmp = dir.join(format!(".{}.tmp{}", name.to_string_lossy(), std::process::id()));
    fs::write(&tmp, bytes).with_context(|| format!("writing {}", tmp.display()))?;
    fs::rename(&tmp, path).with_context(|| format!("renaming into {}", path.display()))?;
    Ok(())
}

fn output(common: &Common, text: &str) -> Result<()> {
    match &common.out {
        Some(path) => write_atomic(path, text.as_bytes()),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Generate { common, len } => {
            let cfg = load_config(&common)?;
            let word = cfg.source()?.prefix(len)?;
            output(&common, &format!("{word}\n"))?;
            Ok(true)
        }
        Command::Complexity { common } => {
            let cfg = load_config(&common)?;
            let started = Instant::now();
            let table = run_complexity(&cfg)?;
            eprintln!("{}: {} rows in {:.2?}", table.word, table.rows.len(), started.elapsed());
            output(&common, &emit_table(&table, cfg.format.unwrap_or(Format::Csv)))?;
            if table.exhausted() {
                eprintln!("prefix budget of {} letters exhausted", cfg.budget());
            }
            Ok(!table.exhausted())
        }
        Command::Christoffel { r, s, common } => {
            let cfg = load_config(&common)?;
            let array = christoffel_array(r, s)?;
            let text = match cfg.format.unwrap_or(Format::Csv) {
                Format::Csv => array.to_string(),
                Format::Json => {
                    let rows: Vec<String> = array.rows.iter().map(|w| w.to_string()).collect();
                    let mut s = serde_json::to_string_pretty(&serde_json::json!({
                        "r": r, "s": s, "rows": rows,
                    }))?;
                    s.push('\n');
                    s
                }
            };
            output(&common, &text)?;
            Ok(true)
        }
        Command::Language { forbidden, common } => {
            let mut cfg = load_config(&common)?;
            if !forbidden.is_empty() {
                cfg.forbidden = Some(forbidden);
            }
            let table = run_language(&cfg)?;
            output(&common, &emit_table(&table, cfg.format.unwrap_or(Format::Csv)))?;
            Ok(true)
        }
        Command::Verify { suites, list, common } => {
            if list {
                let mut text = String::new();
                for id in SuiteId::ALL {
                    text.push_str(&format!("{id}\t{}\n", id.anchor()));
                }
                output(&common, &text)?;
                return Ok(true);
            }
            let cfg = load_config(&common)?;
            let mut ids: Vec<SuiteId> =
                suites.iter().map(|s| s.parse()).collect::<Result<_, _>>()?;
            if ids.is_empty() {
                ids = if cfg.suites.is_empty() { SuiteId::ALL.to_vec() } else { cfg.suites.clone() };
            }
            let format = cfg.format.unwrap_or(Format::Json);
            let mut reports = Vec::new();
            for id in ids {
                let report = run_suite(id, &cfg)?;
                eprintln!(
                    "{:<16} {} ({} checks, {:.2?})",
                    id.id(),
                    if report.pass { "PASS" } else { "FAIL" },
                    report.checks.len(),
                    report.runtime
                );
                for c in report.failures() {
                    eprintln!("  failed: {}", c.claim);
                }
                reports.push(report);
            }
            let text = match format {
                Format::Json if reports.len() == 1 => emit_report(&reports[0], Format::Json),
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&reports)?;
                    s.push('\n');
                    s
                }
                Format::Csv => {
                    let mut s = String::new();
                    for (i, r) in reports.iter().enumerate() {
                        let body = emit_report(r, Format::Csv);
                        let skip = if i == 0 { 0 } else { body.find('\n').map_or(0, |k| k + 1) };
                        s.push_str(&body[skip..]);
                    }
                    s
                }
            };
            output(&common, &text)?;
            Ok(reports.iter().all(|r| r.pass))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

