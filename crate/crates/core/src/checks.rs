//! Theorem-level verification over enumerated tables and orbit censuses.
//!
//! Every function returns records for each checked tuple; nothing is
//! sampled. Failures are report content, not errors. Errors are reserved for
//! malformed requests (a non-prime `p`, an odd `n` where an even one is
//! required, a table that does not cover the needed row).

use std::collections::BTreeMap;

use serde::Serialize;

use crate::census::{pap_end_order_counts, OrbitCensus};
use crate::error::{Error, Result};
use crate::report::{CheckRecord, Report, Suite};
use crate::triangles::{s_recurrence_even, Kind, Triangle, TriangleSet};

pub fn is_prime(p: u64) -> bool {
    p >= 2
        && (2..)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn require_rows(t: &Triangle, n: usize) -> Result<()> {
    if t.n_max() < n {
        return Err(Error::precondition(format!(
            "{} triangle has {} rows, row {n} is needed",
            t.kind(),
            t.n_max()
        )));
    }
    Ok(())
}

/// `R[n,k] = R[n-1,k-1] - R[n-1,k]` for even `n <= R.n_max()` and
/// `1 <= k <= n-2`.
pub fn verify_theorem_41(r: &Triangle) -> Report {
    let mut report = Report::new();
    for n in (2..=r.n_max()).step_by(2) {
        for k in 1..n.saturating_sub(1) {
            let k = k as isize;
            report.push(CheckRecord::equality(
                Suite::Theorem41,
                format!("n={n},k={k}"),
                format!("R[{n},{k}]"),
                r.at(n, k),
                r.at(n - 1, k - 1) - r.at(n - 1, k),
            ));
        }
    }
    report
}

/// `D[n,k] = R[n,k]` entrywise.
pub fn verify_d_equals_r(d: &Triangle, r: &Triangle) -> Result<Report> {
    if d.n_max() != r.n_max() {
        return Err(Error::Inconsistent(format!(
            "D has {} rows, R has {}",
            d.n_max(),
            r.n_max()
        )));
    }
    let mut report = Report::new();
    for n in 1..=d.n_max() {
        for k in 0..n as isize {
            report.push(CheckRecord::equality(
                Suite::DEqualsR,
                format!("n={n},k={k}"),
                format!("D[{n},{k}] vs R[{n},{k}]"),
                d.at(n, k),
                r.at(n, k),
            ));
        }
    }
    Ok(report)
}

/// `alpha_d = beta_d = 0` for every divisor `d` of `n` with
/// `gcd(k, n/d) > 1`.
pub fn verify_theorem_51(census: &OrbitCensus) -> Report {
    let n = census.n as u64;
    let k = census.k as u64;
    let mut report = Report::new();
    for e in census.entries.iter().filter(|e| gcd(k, n / e.d) > 1) {
        let tuple = format!("n={n},k={k},d={}", e.d);
        report.push(CheckRecord::equality(
            Suite::Theorem51,
            tuple.clone(),
            format!("alpha[{}]", e.d),
            e.alpha as i64,
            0,
        ));
        report.push(CheckRecord::equality(
            Suite::Theorem51,
            tuple,
            format!("beta[{}]", e.d),
            e.beta as i64,
            0,
        ));
    }
    report
}

/// Census sums against their targets:
/// `sum_d d alpha_d = P[n-1,k-1]` and `sum_d d beta_d = Q[n-1,k-1]`.
pub fn verify_census_sums(census: &OrbitCensus, p: &Triangle, q: &Triangle) -> Result<Report> {
    let n = census.n;
    require_rows(p, n - 1)?;
    require_rows(q, n - 1)?;
    let k = census.k as isize;
    let tuple = format!("n={n},k={k}");
    Ok([
        CheckRecord::equality(
            Suite::Theorem51,
            tuple.clone(),
            format!("sum d*alpha vs P[{},{}]", n - 1, k - 1),
            census.alpha_weighted_sum() as i64,
            p.at(n - 1, k - 1),
        ),
        CheckRecord::equality(
            Suite::Theorem51,
            tuple,
            format!("sum d*beta vs Q[{},{}]", n - 1, k - 1),
            census.beta_weighted_sum() as i64,
            q.at(n - 1, k - 1),
        ),
    ]
    .into_iter()
    .collect())
}

/// A `(p, m, n, k)` instance of a prime-power divisibility statement.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DivisibilityTuple {
    pub p: u64,
    pub m: u32,
    pub n: usize,
    pub k: usize,
}

impl DivisibilityTuple {
    pub fn modulus(&self) -> u64 {
        self.p.pow(self.m)
    }

    fn label(&self) -> String {
        format!("p={},m={},n={},k={}", self.p, self.m, self.n, self.k)
    }

    fn validate(&self) -> Result<()> {
        let DivisibilityTuple { p, m, n, k } = *self;
        if !is_prime(p) {
            return Err(Error::precondition(format!("p = {p} is not prime")));
        }
        if m == 0 {
            return Err(Error::precondition("m must be positive"));
        }
        let modulus = p.checked_pow(m).ok_or(Error::Overflow("prime power"))?;
        if !(n as u64).is_multiple_of(modulus) {
            return Err(Error::precondition(format!(
                "p^m = {modulus} does not divide n = {n}"
            )));
        }
        if !(k as u64).is_multiple_of(p) {
            return Err(Error::precondition(format!(
                "p = {p} does not divide k = {k}"
            )));
        }
        if k == 0 || k >= n {
            return Err(Error::precondition(format!(
                "k = {k} is outside 1..={}",
                n - 1
            )));
        }
        Ok(())
    }
}

/// Values of the checked statistics at `(n-1, k-1)` and whether `p^m`
/// divides each of them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DivisibilityReport {
    pub p: u64,
    pub m: u32,
    pub n: usize,
    pub k: usize,
    pub checked: BTreeMap<Kind, (i64, bool)>,
    pub overall: bool,
}

impl DivisibilityReport {
    fn build(tuple: DivisibilityTuple, values: Vec<(Kind, i64)>) -> Self {
        let modulus = tuple.modulus() as i64;
        let checked: BTreeMap<Kind, (i64, bool)> = values
            .into_iter()
            .map(|(kind, v)| (kind, (v, v % modulus == 0)))
            .collect();
        let overall = checked.values().all(|&(_, ok)| ok);
        DivisibilityReport {
            p: tuple.p,
            m: tuple.m,
            n: tuple.n,
            k: tuple.k,
            checked,
            overall,
        }
    }

    pub fn tuple(&self) -> DivisibilityTuple {
        DivisibilityTuple {
            p: self.p,
            m: self.m,
            n: self.n,
            k: self.k,
        }
    }

    pub fn to_report(&self, suite: Suite) -> Report {
        let t = self.tuple();
        let modulus = t.modulus() as i64;
        self.checked
            .iter()
            .map(|(kind, &(value, _))| {
                CheckRecord::divisibility(
                    suite,
                    t.label(),
                    format!("{kind}[{},{}]", t.n - 1, t.k - 1),
                    value,
                    modulus,
                )
            })
            .collect()
    }
}

/// `p^m` divides `S`, `P`, `Q`, `R` (and `D` when `tables` has it) at
/// `(n-1, k-1)`, for prime `p`, `p^m | n`, even `n`, `p | k`.
pub fn verify_theorem_52(
    p: u64,
    m: u32,
    n: usize,
    k: usize,
    tables: &TriangleSet,
) -> Result<DivisibilityReport> {
    let tuple = DivisibilityTuple { p, m, n, k };
    if !n.is_multiple_of(2) {
        return Err(Error::precondition(format!("n = {n} is not even")));
    }
    tuple.validate()?;
    let row = n - 1;
    let col = k as isize - 1;
    let mut values = Vec::new();
    for kind in [Kind::S, Kind::P, Kind::Q, Kind::R] {
        let t = tables.require(kind)?;
        require_rows(t, row)?;
        values.push((kind, t.at(row, col)));
    }
    if let Some(d) = tables.covering(Kind::D, row) {
        values.push((Kind::D, d.at(row, col)));
    }
    Ok(DivisibilityReport::build(tuple, values))
}

/// `p^m` divides `B` and `C` at `(n-1, k-1)` for an odd prime `p`,
/// `p^m | n`, `p | k`; `n` may be odd.
pub fn verify_corollary_53(
    p: u64,
    m: u32,
    n: usize,
    k: usize,
    tables: &TriangleSet,
) -> Result<DivisibilityReport> {
    if p == 2 {
        return Err(Error::precondition("p must be an odd prime"));
    }
    let tuple = DivisibilityTuple { p, m, n, k };
    tuple.validate()?;
    let row = n - 1;
    let col = k as isize - 1;
    let mut values = Vec::new();
    for kind in [Kind::B, Kind::C] {
        let t = tables.require(kind)?;
        require_rows(t, row)?;
        values.push((kind, t.at(row, col)));
    }
    Ok(DivisibilityReport::build(tuple, values))
}

fn prime_power_tuples(n: usize, odd_primes_only: bool) -> Vec<DivisibilityTuple> {
    let mut out = Vec::new();
    for p in (2..=n as u64).filter(|&p| is_prime(p) && !(odd_primes_only && p == 2)) {
        let mut m = 1;
        while (n as u64).is_multiple_of(p.pow(m)) {
            for k in (p as usize..n).step_by(p as usize) {
                out.push(DivisibilityTuple { p, m, n, k });
            }
            m += 1;
        }
    }
    out
}

/// Every admissible `(p, m, n, k)` for the `S/P/Q/R/D` divisibility
/// statement with even `n <= n_max`. `m` ranges over all exponents with
/// `p^m | n`, not just the largest.
pub fn theorem_52_tuples(n_max: usize) -> Vec<DivisibilityTuple> {
    (2..=n_max)
        .step_by(2)
        .flat_map(|n| prime_power_tuples(n, false))
        .collect()
}

/// Every admissible `(p, m, n, k)` for the `B/C` statement (odd `p`, any
/// `n <= n_max`).
pub fn corollary_53_tuples(n_max: usize) -> Vec<DivisibilityTuple> {
    (2..=n_max)
        .flat_map(|n| prime_power_tuples(n, true))
        .collect()
}

/// `S[n,k] = (n-k) S[n-1,k-1] + (k+1) S[n-1,k]` for every even
/// `n <= S.n_max()` and every `k`.
pub fn verify_corollary_54(s: &Triangle) -> Result<Report> {
    let mut report = Report::new();
    for n in (2..=s.n_max()).step_by(2) {
        let prev = s.row(n - 1);
        for k in 0..n {
            report.push(CheckRecord::equality(
                Suite::Corollary54,
                format!("n={n},k={k}"),
                format!("S[{n},{k}]"),
                s.at(n, k as isize),
                s_recurrence_even(prev, n, k)?,
            ));
        }
    }
    Ok(report)
}

fn eq_11_records(n: usize, k: usize, counts: (u64, u64), s: &Triangle) -> [CheckRecord; 2] {
    let tuple = format!("n={n},k={k}");
    let ki = k as isize;
    [
        CheckRecord::equality(
            Suite::Eq11,
            tuple.clone(),
            format!(
                "|PAPs with a_1<a_n, {k} ascents| vs (n-k)*S[{},{}]",
                n - 1,
                ki - 1
            ),
            counts.0 as i64,
            (n - k) as i64 * s.at(n - 1, ki - 1),
        ),
        CheckRecord::equality(
            Suite::Eq11,
            tuple,
            format!(
                "|PAPs with a_1>a_n, {k} ascents| vs (k+1)*S[{},{}]",
                n - 1,
                ki
            ),
            counts.1 as i64,
            (k + 1) as i64 * s.at(n - 1, ki),
        ),
    ]
}

fn check_eq_11_input(n: usize, s: &Triangle) -> Result<()> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::precondition(format!(
            "n = {n} must be even and at least 2"
        )));
    }
    require_rows(s, n - 1)
}

/// Counts PAPs of `[n]` with `k` ascents and `a_1 < a_n` directly and
/// compares with `(n-k) S[n-1,k-1]`; the `a_1 > a_n` complement is compared
/// with `(k+1) S[n-1,k]`.
pub fn verify_eq_11(n: usize, k: usize, s: &Triangle) -> Result<Report> {
    check_eq_11_input(n, s)?;
    if k >= n {
        return Err(Error::precondition(format!(
            "k = {k} out of range for n = {n}"
        )));
    }
    let counts = pap_end_order_counts(n)?;
    Ok(eq_11_records(n, k, counts[k], s).into_iter().collect())
}

/// `verify_eq_11` for every `k` of one even `n`, sharing a single scan.
pub fn verify_eq_11_row(n: usize, s: &Triangle) -> Result<Report> {
    check_eq_11_input(n, s)?;
    let counts = pap_end_order_counts(n)?;
    Ok(counts
        .into_iter()
        .enumerate()
        .flat_map(|(k, c)| eq_11_records(n, k, c, s))
        .collect())
}
