//! Rendering results as pretty text, JSON or CSV. Everything ends with a
//! newline.

use std::io::Write;

use anyhow::Result;
use pap_core::{OrbitCensus, OrbitRecord, Permutation, Report, Triangle};
use serde::Serialize;

use crate::config::OutputFormat;

/// Space-separated values: unambiguous for any size and CSV-safe.
fn spaced(p: &Permutation) -> String {
    let parts: Vec<String> = p.entries().iter().map(u8::to_string).collect();
    parts.join(" ")
}

fn json_line<W: Write>(out: &mut W, value: &impl Serialize) -> Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn csv_writer<W: Write>(out: W) -> csv::Writer<W> {
    csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out)
}

pub fn triangle<W: Write>(out: &mut W, t: &Triangle, format: OutputFormat) -> Result<()> {
    match format {
        OutputFormat::Json => json_line(out, t),
        OutputFormat::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["n", "k", "value"])?;
            for n in 1..=t.n_max() {
                for (k, v) in t.row(n).iter().enumerate() {
                    w.serialize((n, k, v))?;
                }
            }
            w.flush()?;
            Ok(())
        }
        OutputFormat::Pretty => {
            let label = format!("n = {}", t.n_max()).len();
            let width = t
                .rows()
                .iter()
                .flatten()
                .map(|v| v.to_string().len())
                .chain([(t.n_max() - 1).to_string().len()])
                .max()
                .unwrap_or(1);
            writeln!(out, "{}_{{n,k}} ({})", t.kind(), t.provenance())?;
            write!(out, "{:label$}", "k")?;
            for k in 0..t.n_max() {
                write!(out, "  {k:>width$}")?;
            }
            writeln!(out)?;
            for n in 1..=t.n_max() {
                write!(out, "{:label$}", format!("n = {n}"))?;
                for v in t.row(n) {
                    write!(out, "  {v:>width$}")?;
                }
                writeln!(out)?;
            }
            Ok(())
        }
    }
}

pub fn orbit<W: Write>(out: &mut W, o: &OrbitRecord, format: OutputFormat) -> Result<()> {
    match format {
        OutputFormat::Json => json_line(out, o),
        OutputFormat::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["step", "permutation"])?;
            for (i, e) in o.elements.iter().enumerate() {
                w.serialize((i + 1, spaced(e)))?;
            }
            w.flush()?;
            Ok(())
        }
        OutputFormat::Pretty => {
            writeln!(out, "base: {}", o.base)?;
            writeln!(out, "operator: {}", o.operator)?;
            writeln!(out, "period: {}", o.period)?;
            for (i, e) in o.elements.iter().enumerate() {
                writeln!(out, "{:>4}: {e}", i + 1)?;
            }
            Ok(())
        }
    }
}

pub fn permutation<W: Write>(out: &mut W, p: &Permutation, format: OutputFormat) -> Result<()> {
    match format {
        OutputFormat::Json => json_line(out, p),
        OutputFormat::Csv => {
            writeln!(out, "permutation")?;
            writeln!(out, "{}", spaced(p))?;
            Ok(())
        }
        OutputFormat::Pretty => {
            writeln!(out, "{p}")?;
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct PapRow {
    permutation: Permutation,
    ascents: usize,
    inversions: u64,
    parity: String,
}

pub fn paps<W: Write>(
    out: &mut W,
    paps: impl Iterator<Item = Permutation>,
    format: OutputFormat,
) -> Result<()> {
    let rows = paps.map(|p| {
        let s = p.stats();
        PapRow {
            ascents: s.ascents,
            inversions: s.inversions,
            parity: s.parity.to_string(),
            permutation: p,
        }
    });
    match format {
        OutputFormat::Json => {
            // one object per line so large listings stream
            for row in rows {
                json_line(out, &row)?;
            }
        }
        OutputFormat::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["permutation", "ascents", "inversions", "parity"])?;
            for r in rows {
                w.serialize((spaced(&r.permutation), r.ascents, r.inversions, r.parity))?;
            }
            w.flush()?;
        }
        OutputFormat::Pretty => {
            for r in rows {
                writeln!(
                    out,
                    "{}  asc={} inv={} {}",
                    r.permutation, r.ascents, r.inversions, r.parity
                )?;
            }
        }
    }
    Ok(())
}

/// A census cell together with the counts its weighted sums must reproduce.
#[derive(Debug, Serialize)]
pub struct CensusCell {
    #[serde(flatten)]
    pub census: OrbitCensus,
    pub alpha_sum: u64,
    pub beta_sum: u64,
    pub p_target: i64,
    pub q_target: i64,
}

impl CensusCell {
    pub fn matches(&self) -> bool {
        self.alpha_sum as i64 == self.p_target && self.beta_sum as i64 == self.q_target
    }
}

pub fn census<W: Write>(out: &mut W, cells: &[CensusCell], format: OutputFormat) -> Result<()> {
    match format {
        OutputFormat::Json => json_line(out, &cells),
        OutputFormat::Csv => {
            let mut w = csv_writer(out);
            w.write_record(["n", "k", "d", "alpha", "beta"])?;
            for c in cells {
                for e in &c.census.entries {
                    w.serialize((c.census.n, c.census.k, e.d, e.alpha, e.beta))?;
                }
            }
            w.flush()?;
            Ok(())
        }
        OutputFormat::Pretty => {
            for (i, c) in cells.iter().enumerate() {
                let (n, k) = (c.census.n, c.census.k);
                if i > 0 {
                    writeln!(out)?;
                }
                writeln!(out, "n = {n}, k = {k}")?;
                writeln!(out, "{:>6}  {:>8}  {:>8}", "d", "alpha", "beta")?;
                for e in &c.census.entries {
                    writeln!(out, "{:>6}  {:>8}  {:>8}", e.d, e.alpha, e.beta)?;
                }
                let (row, col) = (n - 1, k as isize - 1);
                writeln!(
                    out,
                    "sum d*alpha = {} (P[{row},{col}] = {})",
                    c.alpha_sum, c.p_target
                )?;
                writeln!(
                    out,
                    "sum d*beta = {} (Q[{row},{col}] = {})",
                    c.beta_sum, c.q_target
                )?;
            }
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct ReportDoc<'a> {
    passed: bool,
    checked: usize,
    failed: usize,
    records: &'a [pap_core::CheckRecord],
}

pub fn report<W: Write>(out: &mut W, r: &Report, format: OutputFormat) -> Result<()> {
    let failed = r.failures().count();
    match format {
        OutputFormat::Json => json_line(
            out,
            &ReportDoc {
                passed: r.passed(),
                checked: r.len(),
                failed,
                records: &r.records,
            },
        ),
        OutputFormat::Csv => {
            let mut w = csv_writer(out);
            w.write_record([
                "suite",
                "tuple",
                "statistic",
                "value",
                "expected",
                "modulus",
                "pass",
            ])?;
            for rec in &r.records {
                w.serialize((
                    rec.suite.name(),
                    &rec.tuple,
                    &rec.statistic,
                    rec.value,
                    rec.expected,
                    rec.modulus,
                    rec.pass,
                ))?;
            }
            w.flush()?;
            Ok(())
        }
        OutputFormat::Pretty => {
            for rec in &r.records {
                writeln!(out, "{rec}")?;
            }
            writeln!(out, "{} checks, {} failed", r.len(), failed)?;
            Ok(())
        }
    }
}
