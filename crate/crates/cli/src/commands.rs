use std::cell::OnceCell;
use std::io::Write;

use anyhow::Result;
use pap_core::checks::{
    corollary_53_tuples, theorem_52_tuples, verify_census_sums, verify_corollary_53,
    verify_corollary_54, verify_d_equals_r, verify_eq_11_row, verify_theorem_41, verify_theorem_51,
    verify_theorem_52,
};
use pap_core::operators::{apply, orbit};
use pap_core::triangles::{
    bc_from_ad, check_symmetries, eulerian_recurrence, r_recurrence, signed_recurrence,
};
use pap_core::{
    enumerate_pap_triangles, enumerate_paps, enumerate_triangles, orbit_census, Kind, Operator,
    Permutation, Report, Suite, TriangleSet, FULL_SCAN_CAP, PAP_SCAN_CAP,
};

use crate::config::{Method, RunConfig};
use crate::output::{self, CensusCell};
use crate::{tables, ConfigError};

/// Whether the command's own checks held. Only `census` and `verify` can
/// report `false`.
pub type Passed = bool;

pub fn triangle<W: Write>(out: &mut W, kind: Kind, cfg: &RunConfig) -> Result<Passed> {
    let t = tables::build(kind, cfg)?;
    output::triangle(out, &t, cfg.output_format)?;
    Ok(true)
}

pub fn orbit_cmd<W: Write>(
    out: &mut W,
    perm: &Permutation,
    op: Operator,
    cfg: &RunConfig,
) -> Result<Passed> {
    output::orbit(out, &orbit(op, perm)?, cfg.output_format)?;
    Ok(true)
}

pub fn apply_cmd<W: Write>(
    out: &mut W,
    perm: &Permutation,
    op: Operator,
    cfg: &RunConfig,
) -> Result<Passed> {
    output::permutation(out, &apply(op, perm)?, cfg.output_format)?;
    Ok(true)
}

pub fn paps<W: Write>(out: &mut W, cfg: &RunConfig) -> Result<Passed> {
    if cfg.n_max > PAP_SCAN_CAP {
        return Err(ConfigError(format!(
            "n = {} is above the listing cap {PAP_SCAN_CAP}",
            cfg.n_max
        ))
        .into());
    }
    output::paps(out, enumerate_paps(cfg.n_max), cfg.output_format)?;
    Ok(true)
}

pub fn census<W: Write>(
    out: &mut W,
    n: usize,
    k: Option<usize>,
    cfg: &RunConfig,
) -> Result<Passed> {
    if !n.is_multiple_of(2) || n < 2 {
        return Err(ConfigError(format!("census needs an even n >= 2, got {n}")).into());
    }
    if n > PAP_SCAN_CAP {
        return Err(ConfigError(format!("n = {n} is above the census cap {PAP_SCAN_CAP}")).into());
    }
    let ks: Vec<usize> = match k {
        Some(k) if k == 0 || k >= n => {
            return Err(ConfigError(format!("k = {k} is outside 1..={}", n - 1)).into());
        }
        Some(k) => vec![k],
        None => (1..n).collect(),
    };
    let targets = enumerate_pap_triangles(n - 1)?;
    let (p, q) = (targets.require(Kind::P)?, targets.require(Kind::Q)?);
    let mut cells = Vec::with_capacity(ks.len());
    for k in ks {
        let census = orbit_census(n, k)?;
        let col = k as isize - 1;
        cells.push(CensusCell {
            alpha_sum: census.alpha_weighted_sum(),
            beta_sum: census.beta_weighted_sum(),
            p_target: p.at(n - 1, col),
            q_target: q.at(n - 1, col),
            census,
        });
    }
    output::census(out, &cells, cfg.output_format)?;
    Ok(cells.iter().all(CensusCell::matches))
}

const FULL_KINDS: [Kind; 5] = [Kind::A, Kind::B, Kind::C, Kind::D, Kind::R];
const PAP_KINDS: [Kind; 4] = [Kind::S, Kind::P, Kind::Q, Kind::R];

/// Tables shared by the verification suites, built on first use.
///
/// Verification treats enumeration as the reference, so `auto` means
/// "enumerate when within the cap, otherwise fall back to recurrences"
/// here, unlike `triangle`.
struct VerifyTables<'a> {
    cfg: &'a RunConfig,
    full: OnceCell<TriangleSet>,
    paps: OnceCell<TriangleSet>,
}

impl<'a> VerifyTables<'a> {
    fn new(cfg: &'a RunConfig) -> Self {
        VerifyTables {
            cfg,
            full: OnceCell::new(),
            paps: OnceCell::new(),
        }
    }

    /// `A`, `B`, `C`, `D`, `R`.
    fn full(&self) -> Result<&TriangleSet> {
        if let Some(set) = self.full.get() {
            return Ok(set);
        }
        let n = self.cfg.n_max;
        let enumerate = match self.cfg.method {
            Method::Enumerate if n > FULL_SCAN_CAP => {
                return Err(ConfigError(format!(
                    "n = {n} is above the full enumeration cap {FULL_SCAN_CAP}"
                ))
                .into());
            }
            Method::Enumerate => true,
            Method::Recurrence => false,
            Method::Auto => n <= FULL_SCAN_CAP,
        };
        let cfg = RunConfig {
            method: if enumerate {
                Method::Enumerate
            } else {
                Method::Recurrence
            },
            ..self.cfg.clone()
        };
        let set = tables::build_set(&FULL_KINDS, &cfg, || {
            if enumerate {
                let all = enumerate_triangles(n, cfg.chunks)?;
                Ok(all
                    .iter()
                    .filter(|t| FULL_KINDS.contains(&t.kind()))
                    .cloned()
                    .collect())
            } else {
                let (a, d) = (eulerian_recurrence(n)?, signed_recurrence(n)?);
                let (b, c) = bc_from_ad(&a, &d)?;
                Ok([a, b, c, d, r_recurrence(n)?].into_iter().collect())
            }
        })?;
        Ok(self.full.get_or_init(|| set))
    }

    /// `S`, `P`, `Q`, `R` from the PAP-only scan.
    fn paps(&self) -> Result<&TriangleSet> {
        if let Some(set) = self.paps.get() {
            return Ok(set);
        }
        let n = self.cfg.n_max;
        if self.cfg.method == Method::Recurrence {
            return Err(ConfigError(
                "S, P and Q have no recurrence for odd rows; use --method auto or enumerate".into(),
            )
            .into());
        }
        if n > PAP_SCAN_CAP {
            return Err(ConfigError(format!(
                "n = {n} is above the PAP enumeration cap {PAP_SCAN_CAP}"
            ))
            .into());
        }
        let cfg = RunConfig {
            method: Method::Enumerate,
            ..self.cfg.clone()
        };
        let set = tables::build_set(&PAP_KINDS, &cfg, || Ok(enumerate_pap_triangles(n)?))?;
        Ok(self.paps.get_or_init(|| set))
    }

    fn census_cap(&self) -> Result<()> {
        if self.cfg.n_max > PAP_SCAN_CAP {
            return Err(ConfigError(format!(
                "n = {} is above the census cap {PAP_SCAN_CAP}",
                self.cfg.n_max
            ))
            .into());
        }
        Ok(())
    }
}

fn run_suite(suite: Suite, t: &VerifyTables) -> Result<Report> {
    let n_max = t.cfg.n_max;
    let mut report = Report::new();
    match suite {
        Suite::DEqualsR => {
            let d = t.full()?.require(Kind::D)?;
            // prefer an enumerated R so recurrence mode is not compared with itself
            let r = match t.cfg.method {
                Method::Recurrence => t.full()?.require(Kind::R)?,
                _ if n_max <= PAP_SCAN_CAP => t.paps()?.require(Kind::R)?,
                _ => t.full()?.require(Kind::R)?,
            };
            report.extend(verify_d_equals_r(d, r)?);
        }
        Suite::Theorem41 => {
            let r = match t.cfg.method {
                Method::Recurrence => t.full()?.require(Kind::R)?,
                _ => t.paps()?.require(Kind::R)?,
            };
            report.extend(verify_theorem_41(r));
        }
        Suite::Theorem51 => {
            t.census_cap()?;
            let paps = t.paps()?;
            let (p, q) = (paps.require(Kind::P)?, paps.require(Kind::Q)?);
            for n in (2..=n_max).step_by(2) {
                for k in 1..n {
                    let census = orbit_census(n, k)?;
                    report.extend(verify_theorem_51(&census));
                    report.extend(verify_census_sums(&census, p, q)?);
                }
            }
        }
        Suite::Theorem52 => {
            let mut tables: TriangleSet = t.paps()?.iter().cloned().collect();
            // D joins the check whenever some method can produce it at this size
            if let Ok(full) = t.full() {
                tables.insert(full.require(Kind::D)?.clone());
            }
            for tuple in theorem_52_tuples(n_max) {
                let r = verify_theorem_52(tuple.p, tuple.m, tuple.n, tuple.k, &tables)?;
                report.extend(r.to_report(Suite::Theorem52));
            }
        }
        Suite::Corollary53 => {
            let full = t.full()?;
            for tuple in corollary_53_tuples(n_max) {
                let r = verify_corollary_53(tuple.p, tuple.m, tuple.n, tuple.k, full)?;
                report.extend(r.to_report(Suite::Corollary53));
            }
        }
        Suite::Corollary54 => {
            report.extend(verify_corollary_54(t.paps()?.require(Kind::S)?)?);
        }
        Suite::Eq11 => {
            let s = t.paps()?.require(Kind::S)?;
            for n in (2..=n_max).step_by(2) {
                report.extend(verify_eq_11_row(n, s)?);
            }
        }
        Suite::Symmetry => {
            report.extend(check_symmetries(t.paps()?));
        }
    }
    Ok(report)
}

pub fn verify<W: Write>(out: &mut W, suites: &[Suite], cfg: &RunConfig) -> Result<Passed> {
    let tables = VerifyTables::new(cfg);
    let mut report = Report::new();
    for &suite in suites {
        report.extend(run_suite(suite, &tables)?);
    }
    output::report(out, &report, cfg.output_format)?;
    Ok(report.passed())
}
