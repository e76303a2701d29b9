//! `pap`: tables, orbits, censuses and verification runs for
//! parity-alternate permutations.
//!
//! Exit status: 0 when everything checked passed, 1 when a check failed,
//! 2 for usage or configuration errors, 3 for anything else.

mod commands;
mod config;
mod output;
mod tables;

use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pap_core::{Kind, Operator, Permutation, Suite, DEFAULT_N_MAX};

use config::{Method, OutputFormat, RunConfig};

/// A problem with the request itself rather than with the mathematics.
#[derive(Debug)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

const EXIT_FAILED: u8 = 1;
const EXIT_CONFIG: u8 = 2;
const EXIT_RUNTIME: u8 = 3;

#[derive(Parser)]
#[command(
    name = "pap",
    version,
    about = "Parity-alternate permutations and signed Eulerian numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct Common {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Pretty)]
    format: OutputFormat,

    /// Number of rank ranges for the parallel full scan
    #[arg(long, global = true, default_value_t = 4, value_parser = clap::value_parser!(u32).range(1..))]
    chunks: u32,

    /// Directory for cached triangles
    #[arg(long, global = true, env = "PAP_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print one of the triangles A, B, C, D, S, P, Q, R
    Triangle {
        #[arg(long, value_parser = parse_kind)]
        kind: Kind,
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// Print the sigma or tau orbit of a permutation
    Orbit {
        #[arg(long, value_parser = parse_perm)]
        perm: Permutation,
        #[arg(long, value_parser = parse_op)]
        op: Operator,
    },
    /// Apply sigma or tau once
    Apply {
        #[arg(long, value_parser = parse_perm)]
        perm: Permutation,
        #[arg(long, value_parser = parse_op)]
        op: Operator,
    },
    /// Tau-orbit census of canonical PAPs of [n] by period
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long, conflicts_with = "all_k", required_unless_present = "all_k")]
        k: Option<usize>,
        #[arg(long)]
        all_k: bool,
    },
    /// Run verification suites
    Verify {
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: SuiteSelector,
        #[arg(long, default_value_t = DEFAULT_N_MAX)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Auto)]
        method: Method,
    },
    /// List the PAPs of [n]
    Paps {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Clone)]
struct SuiteSelector(Vec<Suite>);

fn parse_kind(s: &str) -> Result<Kind, String> {
    s.parse().map_err(|e: pap_core::Error| e.to_string())
}

fn parse_perm(s: &str) -> Result<Permutation, String> {
    Permutation::parse_literal(s).map_err(|e| e.to_string())
}

fn parse_op(s: &str) -> Result<Operator, String> {
    s.parse().map_err(|e: pap_core::Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<SuiteSelector, String> {
    if s == "all" {
        return Ok(SuiteSelector(Suite::ALL.to_vec()));
    }
    let suite = s.parse().map_err(|e: pap_core::Error| e.to_string())?;
    Ok(SuiteSelector(vec![suite]))
}

fn run(cli: Cli, out: &mut impl Write) -> anyhow::Result<bool> {
    let mut cfg = RunConfig {
        n_max: DEFAULT_N_MAX,
        method: Method::Auto,
        chunks: cli.common.chunks as usize,
        cache_dir: cli.common.cache_dir,
        output_format: cli.common.format,
    };
    let passed = match cli.command {
        Command::Triangle { kind, n, method } => {
            cfg.n_max = n;
            cfg.method = method;
            cfg.validate()?;
            commands::triangle(out, kind, &cfg)?
        }
        Command::Orbit { perm, op } => commands::orbit_cmd(out, &perm, op, &cfg)?,
        Command::Apply { perm, op } => commands::apply_cmd(out, &perm, op, &cfg)?,
        Command::Census { n, k, all_k: _ } => commands::census(out, n, k, &cfg)?,
        Command::Verify { suite, n, method } => {
            cfg.n_max = n;
            cfg.method = method;
            cfg.validate()?;
            commands::verify(out, &suite.0, &cfg)?
        }
        Command::Paps { n } => {
            cfg.n_max = n;
            cfg.validate()?;
            commands::paps(out, &cfg)?
        }
    };
    out.flush()?;
    Ok(passed)
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.is::<ConfigError>() {
        return EXIT_CONFIG;
    }
    match err.downcast_ref::<pap_core::Error>() {
        Some(pap_core::Error::Inconsistent(_) | pap_core::Error::PeriodBound { .. }) => {
            EXIT_RUNTIME
        }
        Some(_) => EXIT_CONFIG,
        None => EXIT_RUNTIME,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match run(cli, &mut out) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_FAILED),
        Err(err) => {
            let _ = out.flush();
            // a closed pipe (e.g. `pap paps --n 12 | head`) is not an error
            if let Some(io) = err.downcast_ref::<io::Error>() {
                if io.kind() == io::ErrorKind::BrokenPipe {
                    return ExitCode::SUCCESS;
                }
            }
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
