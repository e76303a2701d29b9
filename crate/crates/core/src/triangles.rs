//! `(n, k)`-indexed statistic tables and everything computed from them
//! without touching permutations: the Eulerian and signed recurrences,
//! the `B/C` and `P/Q` splits, closed-form PAP totals, and the reflection
//! symmetry laws.
//!
//! Any entry with `k < 0` or `k >= n` reads as zero.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::factorial;
use crate::report::{CheckRecord, Report, Suite};

/// Which statistic a triangle counts.
///
/// `A`: all permutations with `k` ascents; `B`/`C`: the even/odd ones;
/// `D = B - C`. `S`: parity-alternate ones; `P`/`Q`: even/odd PAPs;
/// `R = P - Q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Kind {
    A,
    B,
    C,
    D,
    S,
    P,
    Q,
    R,
}

impl Kind {
    pub const ALL: [Kind; 8] = [
        Kind::A,
        Kind::B,
        Kind::C,
        Kind::D,
        Kind::S,
        Kind::P,
        Kind::Q,
        Kind::R,
    ];

    pub fn is_signed(self) -> bool {
        matches!(self, Kind::D | Kind::R)
    }

    /// Counts only parity-alternate permutations.
    pub fn is_pap_statistic(self) -> bool {
        matches!(self, Kind::S | Kind::P | Kind::Q | Kind::R)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Kind::ALL
            .into_iter()
            .find(|k| k.to_string().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::precondition(format!("unknown triangle kind {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    Recurrence,
    Enumeration,
    ClosedForm,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Recurrence => "recurrence",
            Provenance::Enumeration => "enumeration",
            Provenance::ClosedForm => "closed-form",
        })
    }
}

/// Rows `n = 1..=n_max`; row `n` holds `n` entries for `k = 0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "TriangleDoc", try_from = "TriangleDoc")]
pub struct Triangle {
    kind: Kind,
    provenance: Provenance,
    rows: Vec<Vec<i64>>,
}

/// Wire form: `{"kind", "n_max", "provenance", "rows"}`.
#[derive(Serialize, Deserialize)]
struct TriangleDoc {
    kind: Kind,
    n_max: usize,
    provenance: Provenance,
    rows: Vec<Vec<i64>>,
}

impl From<Triangle> for TriangleDoc {
    fn from(t: Triangle) -> Self {
        TriangleDoc {
            kind: t.kind,
            n_max: t.rows.len(),
            provenance: t.provenance,
            rows: t.rows,
        }
    }
}

impl TryFrom<TriangleDoc> for Triangle {
    type Error = Error;

    fn try_from(doc: TriangleDoc) -> Result<Self> {
        if doc.n_max != doc.rows.len() {
            return Err(Error::Inconsistent(format!(
                "n_max {} but {} rows",
                doc.n_max,
                doc.rows.len()
            )));
        }
        Triangle::new(doc.kind, doc.provenance, doc.rows)
    }
}

impl Triangle {
    pub fn new(kind: Kind, provenance: Provenance, rows: Vec<Vec<i64>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Inconsistent(format!("{kind} triangle has no rows")));
        }
        for (i, row) in rows.iter().enumerate() {
            let n = i + 1;
            if row.len() != n {
                return Err(Error::Inconsistent(format!(
                    "{kind} row n = {n} has {} entries",
                    row.len()
                )));
            }
            if !kind.is_signed() {
                if let Some(k) = row.iter().position(|&v| v < 0) {
                    return Err(Error::Inconsistent(format!("{kind}[{n},{k}] is negative")));
                }
            }
        }
        Ok(Triangle {
            kind,
            provenance,
            rows,
        })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    pub fn n_max(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Row `n` (1-based). Panics if `n` is outside `1..=n_max`.
    pub fn row(&self, n: usize) -> &[i64] {
        assert!(
            (1..=self.n_max()).contains(&n),
            "{} triangle has no row {n}",
            self.kind
        );
        &self.rows[n - 1]
    }

    /// Entry `(n, k)`, zero when `k` is out of range. Panics if `n` is
    /// outside `1..=n_max`.
    pub fn at(&self, n: usize, k: isize) -> i64 {
        let row = self.row(n);
        usize::try_from(k)
            .ok()
            .and_then(|k| row.get(k).copied())
            .unwrap_or(0)
    }

    pub fn row_sum(&self, n: usize) -> i64 {
        self.row(n).iter().sum()
    }

    /// The first `n_max` rows.
    pub fn truncated(&self, n_max: usize) -> Result<Triangle> {
        if n_max == 0 || n_max > self.n_max() {
            return Err(Error::precondition(format!(
                "cannot truncate a {}-row triangle to {n_max} rows",
                self.n_max()
            )));
        }
        Ok(Triangle {
            kind: self.kind,
            provenance: self.provenance,
            rows: self.rows[..n_max].to_vec(),
        })
    }

    pub fn with_provenance(mut self, provenance: Provenance) -> Triangle {
        self.provenance = provenance;
        self
    }
}

/// A bag of triangles keyed by kind.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TriangleSet {
    triangles: BTreeMap<Kind, Triangle>,
}

impl TriangleSet {
    pub fn new() -> Self {
        TriangleSet::default()
    }

    pub fn insert(&mut self, t: Triangle) -> Option<Triangle> {
        self.triangles.insert(t.kind(), t)
    }

    pub fn get(&self, kind: Kind) -> Option<&Triangle> {
        self.triangles.get(&kind)
    }

    pub fn require(&self, kind: Kind) -> Result<&Triangle> {
        self.get(kind)
            .ok_or_else(|| Error::precondition(format!("no {kind} triangle available")))
    }

    /// The triangle of `kind`, if present and covering row `n`.
    pub fn covering(&self, kind: Kind, n: usize) -> Option<&Triangle> {
        self.get(kind).filter(|t| t.n_max() >= n)
    }

    pub fn iter(&self) -> impl Iterator<Item = &Triangle> {
        self.triangles.values()
    }

    pub fn kinds(&self) -> impl Iterator<Item = Kind> + '_ {
        self.triangles.keys().copied()
    }
}

impl FromIterator<Triangle> for TriangleSet {
    fn from_iter<I: IntoIterator<Item = Triangle>>(iter: I) -> Self {
        let mut set = TriangleSet::new();
        for t in iter {
            set.insert(t);
        }
        set
    }
}

fn build_recurrence(
    kind: Kind,
    n_max: usize,
    step: impl Fn(usize, usize, i64, i64) -> Option<i64>,
) -> Result<Triangle> {
    if n_max == 0 {
        return Err(Error::precondition("n_max must be at least 1"));
    }
    let mut rows: Vec<Vec<i64>> = vec![vec![1]];
    for n in 2..=n_max {
        let prev = &rows[n - 2];
        let row = (0..n)
            .map(|k| {
                let left = if k == 0 {
                    0
                } else {
                    prev.get(k - 1).copied().unwrap_or(0)
                };
                let right = prev.get(k).copied().unwrap_or(0);
                step(n, k, left, right).ok_or(Error::Overflow("triangle recurrence"))
            })
            .collect::<Result<Vec<_>>>()?;
        rows.push(row);
    }
    Triangle::new(kind, Provenance::Recurrence, rows)
}

/// `(n - k) * left + (k + 1) * right`
fn eulerian_step(n: usize, k: usize, left: i64, right: i64) -> Option<i64> {
    let a = ((n - k) as i64).checked_mul(left)?;
    let b = ((k + 1) as i64).checked_mul(right)?;
    a.checked_add(b)
}

fn signed_step(n: usize, k: usize, left: i64, right: i64) -> Option<i64> {
    if n % 2 == 1 {
        eulerian_step(n, k, left, right)
    } else {
        left.checked_sub(right)
    }
}

/// Eulerian numbers `A[n,k]` from `A[n,k] = (n-k) A[n-1,k-1] + (k+1) A[n-1,k]`.
pub fn eulerian_recurrence(n_max: usize) -> Result<Triangle> {
    build_recurrence(Kind::A, n_max, eulerian_step)
}

/// Signed Eulerian numbers `D[n,k]`: the Eulerian step for odd `n`,
/// `D[n-1,k-1] - D[n-1,k]` for even `n`.
pub fn signed_recurrence(n_max: usize) -> Result<Triangle> {
    build_recurrence(Kind::D, n_max, signed_step)
}

/// `R[n,k]` from the same two-branch recursion as `D`, base `R[1,0] = 1`.
pub fn r_recurrence(n_max: usize) -> Result<Triangle> {
    build_recurrence(Kind::R, n_max, signed_step)
}

/// Solves `x + y = total`, `x - y = diff` entrywise.
fn split_sum_difference(
    total: &Triangle,
    diff: &Triangle,
    kinds: (Kind, Kind),
) -> Result<(Triangle, Triangle)> {
    if total.n_max() != diff.n_max() {
        return Err(Error::Inconsistent(format!(
            "{} has {} rows but {} has {}",
            total.kind(),
            total.n_max(),
            diff.kind(),
            diff.n_max()
        )));
    }
    let mut plus = Vec::with_capacity(total.n_max());
    let mut minus = Vec::with_capacity(total.n_max());
    for (n, (trow, drow)) in total.rows().iter().zip(diff.rows()).enumerate() {
        let mut prow = Vec::with_capacity(trow.len());
        let mut mrow = Vec::with_capacity(trow.len());
        for (k, (&t, &d)) in trow.iter().zip(drow).enumerate() {
            if (t - d) % 2 != 0 {
                return Err(Error::Inconsistent(format!(
                    "{}[{},{k}] = {t} and {}[{},{k}] = {d} differ in parity",
                    total.kind(),
                    n + 1,
                    diff.kind(),
                    n + 1
                )));
            }
            prow.push((t + d) / 2);
            mrow.push((t - d) / 2);
        }
        plus.push(prow);
        minus.push(mrow);
    }
    Ok((
        Triangle::new(kinds.0, total.provenance(), plus)?,
        Triangle::new(kinds.1, total.provenance(), minus)?,
    ))
}

/// `B = (A + D) / 2`, `C = (A - D) / 2`. Inherits the provenance of `A`.
pub fn bc_from_ad(a: &Triangle, d: &Triangle) -> Result<(Triangle, Triangle)> {
    expect_kind(a, Kind::A)?;
    expect_kind(d, Kind::D)?;
    split_sum_difference(a, d, (Kind::B, Kind::C))
}

/// `P = (S + R) / 2`, `Q = (S - R) / 2`. Inherits the provenance of `S`.
pub fn pq_from_sr(s: &Triangle, r: &Triangle) -> Result<(Triangle, Triangle)> {
    expect_kind(s, Kind::S)?;
    expect_kind(r, Kind::R)?;
    split_sum_difference(s, r, (Kind::P, Kind::Q))
}

fn expect_kind(t: &Triangle, kind: Kind) -> Result<()> {
    if t.kind() == kind {
        Ok(())
    } else {
        Err(Error::precondition(format!(
            "expected a {kind} triangle, got {}",
            t.kind()
        )))
    }
}

fn checked_factorial(n: usize) -> Result<u64> {
    factorial(n).ok_or(Error::Overflow("factorial"))
}

/// Number of parity-alternate permutations of `[n]`:
/// `2 ((n/2)!)^2` for even `n`, `((n+1)/2)! ((n-1)/2)!` for odd `n`.
pub fn pap_total(n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::precondition("n must be at least 1"));
    }
    let overflow = Error::Overflow("PAP total");
    if n.is_multiple_of(2) {
        let f = checked_factorial(n / 2)?;
        f.checked_mul(f)
            .and_then(|sq| sq.checked_mul(2))
            .ok_or(overflow)
    } else {
        checked_factorial(n.div_ceil(2))?
            .checked_mul(checked_factorial(n / 2)?)
            .ok_or(overflow)
    }
}

/// Number of even parity-alternate permutations of `[n]`:
/// `((n/2)!)^2` for even `n`, `(n+1)/4 * (((n-1)/2)!)^2` for odd `n >= 3`,
/// and 1 for `n = 1`.
pub fn even_pap_total(n: usize) -> Result<u64> {
    match n {
        0 => Err(Error::precondition("n must be at least 1")),
        1 => Ok(1),
        _ => {
            let f = checked_factorial(n / 2)?;
            let sq = f.checked_mul(f).ok_or(Error::Overflow("even PAP total"))?;
            if n.is_multiple_of(2) {
                Ok(sq)
            } else {
                sq.checked_mul(n as u64 + 1)
                    .map(|v| v / 4)
                    .ok_or(Error::Overflow("even PAP total"))
            }
        }
    }
}

/// `(n-k) S[n-1,k-1] + (k+1) S[n-1,k]` for even `n`, given row `n-1` of `S`.
pub fn s_recurrence_even(prev_row: &[i64], n: usize, k: usize) -> Result<i64> {
    if !n.is_multiple_of(2) || n == 0 {
        return Err(Error::precondition(format!(
            "the S recurrence holds for even n only, got n = {n}"
        )));
    }
    if prev_row.len() != n - 1 {
        return Err(Error::precondition(format!(
            "expected row n = {} with {} entries, got {}",
            n - 1,
            n - 1,
            prev_row.len()
        )));
    }
    if k >= n {
        return Err(Error::precondition(format!(
            "k = {k} out of range for n = {n}"
        )));
    }
    let left = if k == 0 {
        0
    } else {
        prev_row.get(k - 1).copied().unwrap_or(0)
    };
    let right = prev_row.get(k).copied().unwrap_or(0);
    eulerian_step(n, k, left, right).ok_or(Error::Overflow("S recurrence"))
}

/// Reflection symmetry laws, checked entrywise on whichever of `S`, `P`,
/// `Q` are present:
///
/// * `S[n,k] = S[n,n-1-k]` for all `n`;
/// * `P[n,k] = P[n,n-1-k]` and `Q[n,k] = Q[n,n-1-k]` when `n ≡ 0, 1 (mod 4)`;
/// * `P[n,k] = Q[n,n-1-k]` and `Q[n,k] = P[n,n-1-k]` when `n ≡ 2, 3 (mod 4)`.
pub fn check_symmetries(set: &TriangleSet) -> Report {
    let mut report = Report::new();
    if let Some(s) = set.get(Kind::S) {
        for n in 1..=s.n_max() {
            for k in 0..n {
                report.push(CheckRecord::equality(
                    Suite::Symmetry,
                    format!("n={n},k={k}"),
                    format!("S[{n},{k}] vs S[{n},{}]", n - 1 - k),
                    s.at(n, k as isize),
                    s.at(n, (n - 1 - k) as isize),
                ));
            }
        }
    }
    if let (Some(p), Some(q)) = (set.get(Kind::P), set.get(Kind::Q)) {
        for n in 1..=p.n_max().min(q.n_max()) {
            let preserving = matches!(n % 4, 0 | 1);
            let (p_mirror, q_mirror, pm, qm) = if preserving {
                (p, q, Kind::P, Kind::Q)
            } else {
                (q, p, Kind::Q, Kind::P)
            };
            for k in 0..n {
                let kr = n - 1 - k;
                report.push(CheckRecord::equality(
                    Suite::Symmetry,
                    format!("n={n},k={k}"),
                    format!("P[{n},{k}] vs {pm}[{n},{kr}]"),
                    p.at(n, k as isize),
                    p_mirror.at(n, kr as isize),
                ));
                report.push(CheckRecord::equality(
                    Suite::Symmetry,
                    format!("n={n},k={k}"),
                    format!("Q[{n},{k}] vs {qm}[{n},{kr}]"),
                    q.at(n, k as isize),
                    q_mirror.at(n, kr as isize),
                ));
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eulerian_rows() {
        let a = eulerian_recurrence(10).unwrap();
        assert_eq!(a.row(1), &[1]);
        assert_eq!(a.row(2), &[1, 1]);
        assert_eq!(a.row(4), &[1, 11, 11, 1]);
        assert_eq!(a.at(8, 2), 4293);
        assert_eq!(a.row_sum(10), 3_628_800);
        assert_eq!(a.provenance(), Provenance::Recurrence);
    }

    #[test]
    fn signed_rows() {
        let d = signed_recurrence(10).unwrap();
        assert_eq!(d.row(2), &[-1, 1]);
        assert_eq!(d.at(5, 2), -6);
        assert_eq!(d.at(9, 4), 190);
        assert_eq!(d.at(10, 4), -276);
        let r = r_recurrence(10).unwrap();
        assert_eq!(r.kind(), Kind::R);
        assert_eq!(r.row(4), &[1, -1, -1, 1]);
        assert_eq!(r.at(10, 4), -276);
        assert_eq!(r.rows(), d.rows());
    }

    #[test]
    fn recurrence_overflow_is_reported() {
        assert!(eulerian_recurrence(20).is_ok());
        assert_eq!(
            eulerian_recurrence(40).unwrap_err(),
            Error::Overflow("triangle recurrence")
        );
        assert!(eulerian_recurrence(0).is_err());
    }

    #[test]
    fn out_of_range_reads_zero() {
        let a = eulerian_recurrence(3).unwrap();
        assert_eq!(a.at(3, -1), 0);
        assert_eq!(a.at(3, 3), 0);
    }

    #[test]
    fn b_and_c_from_a_and_d() {
        let a = eulerian_recurrence(8).unwrap();
        let d = signed_recurrence(8).unwrap();
        let (b, c) = bc_from_ad(&a, &d).unwrap();
        assert_eq!(b.at(8, 2), 2133);
        assert_eq!(c.at(8, 2), 2160);
        assert_eq!(b.at(2, 0), 0);
        assert_eq!(c.at(2, 0), 1);
    }

    #[test]
    fn split_rejects_parity_mismatch() {
        let a = Triangle::new(Kind::A, Provenance::Enumeration, vec![vec![1], vec![1, 2]]).unwrap();
        let d =
            Triangle::new(Kind::D, Provenance::Enumeration, vec![vec![1], vec![-1, 1]]).unwrap();
        assert!(matches!(bc_from_ad(&a, &d), Err(Error::Inconsistent(_))));
        assert!(bc_from_ad(&d, &a).is_err());
    }

    #[test]
    fn p_and_q_from_s_and_r() {
        let s = Triangle::new(
            Kind::S,
            Provenance::Enumeration,
            vec![
                vec![1],
                vec![1, 1],
                vec![1, 0, 1],
                vec![1, 3, 3, 1],
                vec![1, 2, 6, 2, 1],
            ],
        )
        .unwrap();
        let r = r_recurrence(5).unwrap();
        let (p, q) = pq_from_sr(&s, &r).unwrap();
        assert_eq!(p.row(5), &[1, 2, 0, 2, 1]);
        assert_eq!(q.row(5), &[0, 0, 6, 0, 0]);
        assert_eq!((p.at(1, 0), q.at(1, 0)), (1, 0));
    }

    #[test]
    fn closed_form_totals() {
        assert_eq!(pap_total(6).unwrap(), 72);
        assert_eq!(even_pap_total(6).unwrap(), 36);
        assert_eq!(pap_total(7).unwrap(), 144);
        assert_eq!(even_pap_total(7).unwrap(), 72);
        assert_eq!(pap_total(1).unwrap(), 1);
        assert_eq!(even_pap_total(1).unwrap(), 1);
        for n in 2..=20 {
            assert_eq!(
                2 * even_pap_total(n).unwrap(),
                pap_total(n).unwrap(),
                "n = {n}"
            );
        }
        assert!(pap_total(0).is_err());
    }

    #[test]
    fn s_recurrence_examples() {
        assert_eq!(s_recurrence_even(&[1, 2, 6, 2, 1], 6, 2).unwrap(), 26);
        assert_eq!(
            s_recurrence_even(&[1, 22, 228, 674, 1030, 674, 228, 22, 1], 10, 4).unwrap(),
            9194
        );
        assert_eq!(s_recurrence_even(&[1], 2, 0).unwrap(), 1);
        assert!(s_recurrence_even(&[1, 1], 3, 0).is_err());
        assert!(s_recurrence_even(&[1, 1], 4, 0).is_err());
    }

    #[test]
    fn symmetry_report_flags_violations() {
        let s = Triangle::new(Kind::S, Provenance::Enumeration, vec![vec![1], vec![1, 2]]).unwrap();
        let report = check_symmetries(&[s].into_iter().collect());
        assert!(!report.passed());
        assert_eq!(report.failures().count(), 2);
    }

    #[test]
    fn kinds_parse() {
        assert_eq!("d".parse::<Kind>().unwrap(), Kind::D);
        assert_eq!("Q".parse::<Kind>().unwrap(), Kind::Q);
        assert!("Z".parse::<Kind>().is_err());
    }

    #[test]
    fn negative_unsigned_entries_are_rejected() {
        assert!(Triangle::new(Kind::S, Provenance::Enumeration, vec![vec![-1]]).is_err());
        assert!(Triangle::new(Kind::R, Provenance::Enumeration, vec![vec![-1]]).is_ok());
        assert!(Triangle::new(Kind::R, Provenance::Enumeration, vec![vec![1, 1]]).is_err());
    }

    #[test]
    fn json_schema() {
        let d = signed_recurrence(2).unwrap();
        let json = serde_json::to_string(&d).unwrap();
        assert_eq!(
            json,
            r#"{"kind":"D","n_max":2,"provenance":"recurrence","rows":[[1],[-1,1]]}"#
        );
        let back: Triangle = serde_json::from_str(&json).unwrap();
        assert_eq!(back, d);
        let bad = r#"{"kind":"D","n_max":3,"provenance":"recurrence","rows":[[1],[-1,1]]}"#;
        assert!(serde_json::from_str::<Triangle>(bad).is_err());
    }
}
