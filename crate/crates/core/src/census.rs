//! Brute-force counting oracle.
//!
//! Every statistic here is computed by looking at individual permutations,
//! never through a recurrence: the full `n!` scan (partitioned into
//! lexicographic rank ranges and run in parallel), the PAP-only scan that
//! reaches larger `n`, and the orbit census of canonical PAPs under `tau`.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::operators::tau_in_place;
use crate::perm::{
    alternates_parity, ascents, enumerate_paps, even_values, factorial, interleave, inversions,
    next_lexicographic, odd_values, PapPattern, Parity, Permutation,
};
use crate::triangles::{Kind, Provenance, Triangle, TriangleSet};

/// Largest `n` accepted by the full `n!` scan.
pub const FULL_SCAN_CAP: usize = 11;

/// Default `n_max` for the full scan.
pub const DEFAULT_N_MAX: usize = 10;

/// Largest `n` accepted by the PAP-only scan.
pub const PAP_SCAN_CAP: usize = 14;

fn check_cap(n_max: usize, cap: usize, what: &'static str) -> Result<()> {
    if n_max == 0 {
        return Err(Error::precondition("n_max must be at least 1"));
    }
    if n_max > cap {
        return Err(Error::AboveCap {
            n: n_max,
            cap,
            what,
        });
    }
    Ok(())
}

/// Folds `visit` over all `n!` permutations of `[n]`, split into `chunks`
/// lexicographic rank ranges of equal width (the last one takes the
/// remainder). Each chunk owns its accumulator; results are merged with
/// `merge`, which must be associative and commutative.
pub fn chunked_scan<T, I, V, M>(n: usize, chunks: usize, init: I, visit: V, merge: M) -> Result<T>
where
    T: Send,
    I: Fn() -> T + Sync + Send,
    V: Fn(&mut T, &[u8]) + Sync,
    M: Fn(T, T) -> T + Sync + Send,
{
    if chunks == 0 {
        return Err(Error::precondition("chunk count must be at least 1"));
    }
    let total = factorial(n).ok_or(Error::AboveCap {
        n,
        cap: crate::perm::MAX_RANKED_SIZE,
        what: "rank-partitioned scan",
    })?;
    let chunks = chunks as u64;
    let width = total / chunks;
    (0..chunks)
        .into_par_iter()
        .map(|c| -> Result<T> {
            let start = c * width;
            let end = if c == chunks - 1 {
                total
            } else {
                start + width
            };
            let mut acc = init();
            if start < end {
                let mut a = Permutation::unrank(n, start)?.into_entries();
                for _ in start..end {
                    visit(&mut acc, &a);
                    next_lexicographic(&mut a);
                }
            }
            Ok(acc)
        })
        .try_reduce(&init, |x, y| Ok(merge(x, y)))
}

fn add_vectors(mut x: Vec<u64>, y: Vec<u64>) -> Vec<u64> {
    for (a, b) in x.iter_mut().zip(y) {
        *a += b;
    }
    x
}

/// Per-ascent counts split by parity and PAP membership, from the full scan.
#[derive(Debug, Clone, PartialEq, Eq)]
struct RowTally {
    // index: k * 4 + parity_bit * 2 + pap_bit
    counts: Vec<u64>,
}

impl RowTally {
    fn get(&self, k: usize, parity: Parity, pap: bool) -> u64 {
        self.counts[k * 4 + (parity == Parity::Odd) as usize * 2 + pap as usize]
    }
}

fn scan_row(n: usize, chunks: usize) -> Result<RowTally> {
    let counts = chunked_scan(
        n,
        chunks,
        || vec![0u64; 4 * n],
        |acc, a| {
            let idx =
                ascents(a) * 4 + (inversions(a) & 1) as usize * 2 + alternates_parity(a) as usize;
            acc[idx] += 1;
        },
        add_vectors,
    )?;
    Ok(RowTally { counts })
}

fn to_signed(v: u64) -> i64 {
    i64::try_from(v).expect("count fits in i64")
}

fn triangle(kind: Kind, rows: Vec<Vec<i64>>) -> Result<Triangle> {
    Triangle::new(kind, Provenance::Enumeration, rows)
}

/// All eight triangles for `n = 1..=n_max` by scanning every permutation.
///
/// The raw tally is by (ascents, parity, is_pap); then
/// `B`, `C`, `P`, `Q` are read off and `A = B + C`, `D = B - C`,
/// `S = P + Q`, `R = P - Q`.
pub fn enumerate_triangles(n_max: usize, chunks: usize) -> Result<TriangleSet> {
    check_cap(n_max, FULL_SCAN_CAP, "the full permutation scan")?;
    let mut rows: [Vec<Vec<i64>>; 8] = Default::default();
    for n in 1..=n_max {
        let tally = scan_row(n, chunks)?;
        let mut row: [Vec<i64>; 8] = Default::default();
        for k in 0..n {
            let count = |parity, pap| to_signed(tally.get(k, parity, pap));
            let p = count(Parity::Even, true);
            let q = count(Parity::Odd, true);
            let b = count(Parity::Even, false) + p;
            let c = count(Parity::Odd, false) + q;
            for (slot, v) in row.iter_mut().zip([b + c, b, c, b - c, p + q, p, q, p - q]) {
                slot.push(v);
            }
        }
        for (acc, r) in rows.iter_mut().zip(row) {
            acc.push(r);
        }
    }
    Kind::ALL
        .into_iter()
        .zip(rows)
        .map(|(kind, rows)| triangle(kind, rows))
        .collect()
}

/// All arrangements of `values` in lexicographic order.
fn arrangements(values: &[u8]) -> Vec<Vec<u8>> {
    let mut cur = values.to_vec();
    let mut out = Vec::new();
    loop {
        out.push(cur.clone());
        if !next_lexicographic(&mut cur) {
            return out;
        }
    }
}

/// Per-ascent (even, odd) counts of the PAPs of `[n]`, filtered by `keep`.
fn pap_tally(n: usize, keep: impl Fn(&[u8]) -> bool + Sync) -> Vec<[u64; 2]> {
    let evens = even_values(n);
    let blocks: Vec<(PapPattern, Vec<u8>)> = PapPattern::for_size(n)
        .iter()
        .flat_map(|&pat| {
            arrangements(&odd_values(n))
                .into_iter()
                .map(move |o| (pat, o))
        })
        .collect();
    blocks
        .into_par_iter()
        .map(|(pattern, odds)| {
            let mut acc = vec![[0u64; 2]; n];
            let mut ev = evens.clone();
            let mut out = vec![0u8; n];
            loop {
                interleave(pattern, &odds, &ev, &mut out);
                if keep(&out) {
                    acc[ascents(&out)][(inversions(&out) & 1) as usize] += 1;
                }
                if !next_lexicographic(&mut ev) {
                    break;
                }
            }
            acc
        })
        .reduce(
            || vec![[0u64; 2]; n],
            |mut x, y| {
                for (a, b) in x.iter_mut().zip(y) {
                    a[0] += b[0];
                    a[1] += b[1];
                }
                x
            },
        )
}

/// `S`, `P`, `Q`, `R` for `n = 1..=n_max` by generating only the
/// parity-alternate permutations.
pub fn enumerate_pap_triangles(n_max: usize) -> Result<TriangleSet> {
    check_cap(n_max, PAP_SCAN_CAP, "the PAP-only scan")?;
    let mut s = Vec::with_capacity(n_max);
    let mut p = Vec::with_capacity(n_max);
    let mut q = Vec::with_capacity(n_max);
    let mut r = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let tally = pap_tally(n, |_| true);
        let even: Vec<i64> = tally.iter().map(|c| to_signed(c[0])).collect();
        let odd: Vec<i64> = tally.iter().map(|c| to_signed(c[1])).collect();
        s.push(even.iter().zip(&odd).map(|(e, o)| e + o).collect());
        r.push(even.iter().zip(&odd).map(|(e, o)| e - o).collect());
        p.push(even);
        q.push(odd);
    }
    [(Kind::S, s), (Kind::P, p), (Kind::Q, q), (Kind::R, r)]
        .into_iter()
        .map(|(kind, rows)| triangle(kind, rows))
        .collect()
}

/// Counts of parity-alternate permutations of `[n]` per ascent count,
/// split by end order: `(a_1 < a_n, a_1 > a_n)`.
pub fn pap_end_order_counts(n: usize) -> Result<Vec<(u64, u64)>> {
    check_cap(n, PAP_SCAN_CAP, "the PAP-only scan")?;
    if n == 1 {
        return Ok(vec![(0, 0)]);
    }
    let less = pap_tally(n, |a| a[0] < a[n - 1]);
    let greater = pap_tally(n, |a| a[0] > a[n - 1]);
    Ok(less
        .iter()
        .zip(&greater)
        .map(|(l, g)| (l[0] + l[1], g[0] + g[1]))
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct DivisorCount {
    pub d: u64,
    /// orbits of period `d` among even canonical PAPs
    pub alpha: u64,
    /// orbits of period `d` among odd canonical PAPs
    pub beta: u64,
}

/// `tau`-orbit periods of the canonical PAPs of `[n]` with `k` ascents,
/// for every divisor `d` of `n` (ascending).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitCensus {
    pub n: usize,
    pub k: usize,
    pub entries: Vec<DivisorCount>,
}

impl OrbitCensus {
    pub fn get(&self, d: u64) -> Option<&DivisorCount> {
        self.entries.iter().find(|e| e.d == d)
    }

    /// `sum_d d * alpha_d`
    pub fn alpha_weighted_sum(&self) -> u64 {
        self.entries.iter().map(|e| e.d * e.alpha).sum()
    }

    /// `sum_d d * beta_d`
    pub fn beta_weighted_sum(&self) -> u64 {
        self.entries.iter().map(|e| e.d * e.beta).sum()
    }
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

fn check_even_census_size(n: usize) -> Result<()> {
    if n == 0 || !n.is_multiple_of(2) {
        return Err(Error::precondition(format!(
            "canonical PAP censuses need an even n, got {n}"
        )));
    }
    if n > PAP_SCAN_CAP {
        return Err(Error::AboveCap {
            n,
            cap: PAP_SCAN_CAP,
            what: "canonical PAP censuses",
        });
    }
    Ok(())
}

/// Splits the canonical PAPs `c_1 ... c_{n-1} n` with `k` ascents into
/// `tau`-orbits and tallies orbit periods by parity.
///
/// The canonical PAPs are built as PAPs of `[n-1]` with `k - 1` ascents
/// followed by `n`. `k = 0` yields an all-zero census.
pub fn orbit_census(n: usize, k: usize) -> Result<OrbitCensus> {
    check_even_census_size(n)?;
    if k >= n {
        return Err(Error::precondition(format!(
            "k = {k} out of range 0..{n} for n = {n}"
        )));
    }
    let mut entries: Vec<DivisorCount> = divisors(n as u64)
        .into_iter()
        .map(|d| DivisorCount {
            d,
            alpha: 0,
            beta: 0,
        })
        .collect();
    if k == 0 {
        return Ok(OrbitCensus { n, k, entries });
    }
    let members: Vec<Vec<u8>> = enumerate_paps(n - 1)
        .filter(|p| p.ascent_count() == k - 1)
        .map(|p| {
            let mut e = p.into_entries();
            e.push(n as u8);
            e
        })
        .collect();
    let member_set: HashSet<&[u8]> = members.iter().map(Vec::as_slice).collect();
    let mut visited: HashSet<Vec<u8>> = HashSet::with_capacity(members.len());
    for rep in &members {
        if visited.contains(rep) {
            continue;
        }
        let parity = Parity::of(inversions(rep));
        let mut cur = rep.clone();
        let mut period = 0u64;
        loop {
            tau_in_place(&mut cur);
            period += 1;
            debug_assert_eq!(
                Parity::of(inversions(&cur)),
                parity,
                "parity changed along {rep:?}"
            );
            debug_assert!(
                member_set.contains(cur.as_slice()),
                "orbit of {rep:?} left the set"
            );
            if period > n as u64 {
                return Err(Error::PeriodBound { bound: n as u64 });
            }
            visited.insert(cur.clone());
            if cur == *rep {
                break;
            }
        }
        let slot = entries.iter_mut().find(|e| e.d == period).ok_or_else(|| {
            Error::Inconsistent(format!("tau period {period} does not divide {n}"))
        })?;
        match parity {
            Parity::Even => slot.alpha += 1,
            Parity::Odd => slot.beta += 1,
        }
    }
    Ok(OrbitCensus { n, k, entries })
}

/// `(even, odd)` counts of canonical PAPs of `[n]` with `k` ascents, found
/// by filtering every PAP of `[n]` directly.
pub fn canonical_pap_counts(n: usize, k: usize) -> Result<(u64, u64)> {
    check_even_census_size(n)?;
    let tally = pap_tally(n, |a| a[n - 1] as usize == n);
    Ok(tally.get(k).map_or((0, 0), |c| (c[0], c[1])))
}

/// Per-ascent `(even, odd)` counts of the permutations of `[n]` that are
/// not parity-alternate.
pub fn nonpap_parity_counts(n: usize, chunks: usize) -> Result<Vec<(u64, u64)>> {
    check_cap(n, FULL_SCAN_CAP, "the full permutation scan")?;
    let flat = chunked_scan(
        n,
        chunks,
        || vec![0u64; 2 * n],
        |acc, a| {
            if !alternates_parity(a) {
                acc[ascents(a) * 2 + (inversions(a) & 1) as usize] += 1;
            }
        },
        add_vectors,
    )?;
    Ok(flat.chunks(2).map(|c| (c[0], c[1])).collect())
}

/// `(even, odd)` counts of the non-PAPs of `[n]` with `k` ascents.
pub fn nonpap_parity_balance(n: usize, k: usize) -> Result<(u64, u64)> {
    if k >= n {
        return Err(Error::precondition(format!(
            "k = {k} out of range for n = {n}"
        )));
    }
    Ok(nonpap_parity_counts(n, rayon::current_num_threads())?[k])
}
