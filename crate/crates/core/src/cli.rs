//! The `downset` command line.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use clap::{Parser, Subcommand};
use serde_json::json;

use crate::code::CodeSpec;
use crate::decoder::{decoding_radius, weighted_downset_decode};
use crate::fuzz::{run_fuzz, FuzzConfig};
use crate::io::{
    decoded_document, failure_document, parse_coefficients, parse_spec, parse_word, write_word,
};
use crate::weighted::weighted_distance;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_NO_CODEWORD: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "downset", about = "Encode, decode and inspect downset codes over finite grids")]
pub struct Cli {
    /// Worker threads for column decoding and fuzz cases.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate a coefficient table on the grid.
    Encode {
        spec: PathBuf,
        coefficients: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decode a received word to the unique codeword within half the distance.
    Decode {
        spec: PathBuf,
        word: PathBuf,
        /// Each line carries a weight `num/den` in [0, 1].
        #[arg(long)]
        weighted: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print the minimum distance and a maximal monomial attaining it.
    Distance { spec: PathBuf },
    /// Check whether a word is a codeword.
    Verify { spec: PathBuf, word: PathBuf },
    /// Run the seeded oracle-equivalence suite.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: u64,
        #[arg(long = "max-p", default_value_t = 13)]
        max_p: u64,
        #[arg(long = "max-m", default_value_t = 3)]
        max_m: usize,
        #[arg(long = "max-grid", default_value_t = 5)]
        max_grid: usize,
    },
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load_spec(path: &Path) -> anyhow::Result<CodeSpec> {
    parse_spec(&read(path)?).with_context(|| format!("{}", path.display()))
}

fn emit(out: &mut Vec<u8>, path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => out.write_all(text.as_bytes()).context("cannot write output"),
    }
}

/// Runs a parsed command, writing results to `out`. Returns the exit code;
/// usage and format problems come back as errors (exit code 1).
pub fn run(cli: Cli, out: &mut dyn Write) -> anyhow::Result<i32> {
    if cli.threads == 0 {
        bail!("--threads must be at least 1");
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build()
        .context("cannot start worker threads")?;
    let mut buffer = Vec::new();
    let code = pool.install(|| dispatch(cli.command, &mut buffer));
    out.write_all(&buffer).context("cannot write output")?;
    out.flush().context("cannot write output")?;
    code
}

fn dispatch(command: Command, out: &mut Vec<u8>) -> anyhow::Result<i32> {
    match command {
        Command::Encode {
            spec,
            coefficients,
            output,
        } => {
            let spec = load_spec(&spec)?;
            let poly = parse_coefficients(&read(&coefficients)?, &spec)
                .with_context(|| format!("{}", coefficients.display()))?;
            let word = spec.encode(&poly)?;
            emit(out, output.as_deref(), &write_word(&spec, &word, None))?;
            Ok(EXIT_OK)
        }
        Command::Decode {
            spec,
            word,
            weighted,
            output,
        } => {
            let spec = load_spec(&spec)?;
            let w = parse_word(&read(&word)?, &spec, weighted)
                .with_context(|| format!("{}", word.display()))?;
            let poly = weighted_downset_decode(&spec, &w)?;
            let radius = decoding_radius(&spec);
            // recompute the distance here rather than trusting the decoder
            let verified = match spec.encode(&poly) {
                Ok(table) => {
                    let d = weighted_distance(&w, &table)?;
                    (d < radius).then_some(d)
                }
                Err(_) => None,
            };
            let (doc, code) = match verified {
                Some(d) => (decoded_document(&poly, &d), EXIT_OK),
                None => (failure_document(&radius), EXIT_NO_CODEWORD),
            };
            let text = serde_json::to_string_pretty(&doc)? + "\n";
            emit(out, output.as_deref(), &text)?;
            Ok(code)
        }
        Command::Distance { spec } => {
            let spec = load_spec(&spec)?;
            let (mu, alpha) = spec.min_distance_witness();
            let doc = json!({ "mu": mu, "alpha": alpha.as_slice() });
            emit(out, None, &(serde_json::to_string(&doc)? + "\n"))?;
            Ok(EXIT_OK)
        }
        Command::Verify { spec, word } => {
            let spec = load_spec(&spec)?;
            let w = parse_word(&read(&word)?, &spec, false)
                .with_context(|| format!("{}", word.display()))?;
            let member = spec.is_codeword(w.values())?;
            let doc = json!({ "codeword": member });
            emit(out, None, &(serde_json::to_string(&doc)? + "\n"))?;
            Ok(if member { EXIT_OK } else { EXIT_NO_CODEWORD })
        }
        Command::Fuzz {
            seed,
            cases,
            max_p,
            max_m,
            max_grid,
        } => {
            let config = FuzzConfig {
                seed,
                cases,
                max_p,
                max_m,
                max_grid,
                ..FuzzConfig::default()
            };
            let report = run_fuzz(&config)?;
            emit(out, None, &report.render())?;
            Ok(if report.all_passed() { EXIT_OK } else { EXIT_USAGE })
        }
    }
}
