//! Permutations of `[n]` in one-line notation, their elementary statistics
//! (ascents, inversions, parity), the parity-alternate predicate, and the
//! lexicographic rank/unrank primitives used to partition exhaustive scans.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest size whose `n!` fits in a `u64` rank.
pub const MAX_RANKED_SIZE: usize = 20;

/// Largest size representable with `u8` entries.
pub const MAX_SIZE: usize = u8::MAX as usize;

const FACTORIALS: [u64; MAX_RANKED_SIZE + 1] = {
    let mut f = [1u64; MAX_RANKED_SIZE + 1];
    let mut i = 1;
    while i <= MAX_RANKED_SIZE {
        f[i] = f[i - 1] * i as u64;
        i += 1;
    }
    f
};

/// `n!`, or `None` when it does not fit in a `u64`.
pub fn factorial(n: usize) -> Option<u64> {
    FACTORIALS.get(n).copied()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(inversions: u64) -> Self {
        if inversions.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// All elementary statistics of one permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PermStats {
    pub n: usize,
    pub ascents: usize,
    pub inversions: u64,
    pub parity: Parity,
    pub is_pap: bool,
    /// `a_1 < a_n`; recorded as false for `n = 1`.
    pub left_less_right: bool,
}

/// A permutation `a_1 a_2 ... a_n` of `{1, ..., n}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct Permutation {
    entries: Vec<u8>,
}

impl Permutation {
    pub fn new(entries: Vec<u8>) -> Result<Self> {
        validate(&entries)?;
        Ok(Permutation { entries })
    }

    pub(crate) fn from_entries_unchecked(entries: Vec<u8>) -> Self {
        debug_assert!(validate(&entries).is_ok(), "not a permutation: {entries:?}");
        Permutation { entries }
    }

    /// `1 2 ... n`. Panics unless `1 <= n <= 255`.
    pub fn identity(n: usize) -> Self {
        assert!(
            (1..=MAX_SIZE).contains(&n),
            "permutation size {n} out of range"
        );
        Permutation {
            entries: (1..=n as u8).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    /// Always false; a permutation has at least one entry.
    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[u8] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<u8> {
        self.entries
    }

    pub fn first(&self) -> u8 {
        self.entries[0]
    }

    pub fn last(&self) -> u8 {
        self.entries[self.entries.len() - 1]
    }

    pub fn ascent_count(&self) -> usize {
        ascents(&self.entries)
    }

    pub fn inversion_count(&self) -> u64 {
        inversions(&self.entries)
    }

    pub fn parity(&self) -> Parity {
        Parity::of(self.inversion_count())
    }

    /// Consecutive entries alternate between odd and even values.
    pub fn is_pap(&self) -> bool {
        alternates_parity(&self.entries)
    }

    pub fn left_less_right(&self) -> bool {
        self.len() >= 2 && self.first() < self.last()
    }

    /// `a_n ... a_2 a_1`.
    pub fn reflect(&self) -> Permutation {
        let mut entries = self.entries.clone();
        entries.reverse();
        Permutation { entries }
    }

    /// Exchanges the values `a` and `b` wherever they occur.
    pub fn swap_values(&self, a: u8, b: u8) -> Permutation {
        let entries = self
            .entries
            .iter()
            .map(|&v| {
                if v == a {
                    b
                } else if v == b {
                    a
                } else {
                    v
                }
            })
            .collect();
        Permutation::from_entries_unchecked(entries)
    }

    /// `a_1 ... a_n (n+1)`, the canonical extension to size `n + 1`.
    pub fn append_max(&self) -> Result<Permutation> {
        if self.len() >= MAX_SIZE {
            return Err(Error::InvalidPermutation(format!(
                "cannot extend a permutation of size {}",
                self.len()
            )));
        }
        let mut entries = Vec::with_capacity(self.len() + 1);
        entries.extend_from_slice(&self.entries);
        entries.push(self.len() as u8 + 1);
        Ok(Permutation { entries })
    }

    pub fn stats(&self) -> PermStats {
        let inversions = self.inversion_count();
        PermStats {
            n: self.len(),
            ascents: self.ascent_count(),
            inversions,
            parity: Parity::of(inversions),
            is_pap: self.is_pap(),
            left_less_right: self.left_less_right(),
        }
    }

    /// Position of this permutation in lexicographic order, `0..n!`.
    pub fn rank(&self) -> Result<u64> {
        let n = self.len();
        if n > MAX_RANKED_SIZE {
            return Err(Error::AboveCap {
                n,
                cap: MAX_RANKED_SIZE,
                what: "lexicographic ranking",
            });
        }
        let mut rank = 0u64;
        for (i, &a) in self.entries.iter().enumerate() {
            let smaller_after = self.entries[i + 1..].iter().filter(|&&b| b < a).count() as u64;
            rank += smaller_after * FACTORIALS[n - 1 - i];
        }
        Ok(rank)
    }

    /// The permutation of size `n` with lexicographic rank `rank`.
    pub fn unrank(n: usize, rank: u64) -> Result<Permutation> {
        if n == 0 || n > MAX_RANKED_SIZE {
            return Err(Error::AboveCap {
                n,
                cap: MAX_RANKED_SIZE,
                what: "lexicographic unranking",
            });
        }
        if rank >= FACTORIALS[n] {
            return Err(Error::RankOutOfRange { n, rank });
        }
        let mut pool: Vec<u8> = (1..=n as u8).collect();
        let mut entries = Vec::with_capacity(n);
        let mut rest = rank;
        for i in (0..n).rev() {
            let f = FACTORIALS[i];
            let idx = (rest / f) as usize;
            rest %= f;
            entries.push(pool.remove(idx));
        }
        Ok(Permutation { entries })
    }

    /// Parses `"1 4 5 2 3"` (also comma separated) or, for `n <= 9`, the
    /// compact digit form `"14523"`.
    pub fn parse_literal(s: &str) -> Result<Permutation> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::InvalidPermutation("empty literal".into()));
        }
        let separated = s.contains(|c: char| c.is_whitespace() || c == ',');
        let entries: Vec<u8> = if separated {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<u8>()
                        .map_err(|_| Error::InvalidPermutation(format!("bad entry {t:?}")))
                })
                .collect::<Result<_>>()?
        } else {
            if s.len() > 9 {
                return Err(Error::InvalidPermutation(format!(
                    "compact literal {s:?} is ambiguous beyond 9 entries; separate entries with spaces"
                )));
            }
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as u8)
                        .ok_or_else(|| Error::InvalidPermutation(format!("bad digit {c:?}")))
                })
                .collect::<Result<_>>()?
        };
        Permutation::new(entries)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// Compact digits for `n <= 9`, space separated otherwise.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.entries {
                write!(f, "{v}")?;
            }
        } else {
            for (i, v) in self.entries.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::parse_literal(s)
    }
}

impl TryFrom<Vec<u8>> for Permutation {
    type Error = Error;

    fn try_from(entries: Vec<u8>) -> Result<Self> {
        Permutation::new(entries)
    }
}

impl From<Permutation> for Vec<u8> {
    fn from(p: Permutation) -> Self {
        p.entries
    }
}

fn validate(entries: &[u8]) -> Result<()> {
    let n = entries.len();
    if n == 0 {
        return Err(Error::InvalidPermutation("no entries".into()));
    }
    if n > MAX_SIZE {
        return Err(Error::InvalidPermutation(format!(
            "size {n} exceeds {MAX_SIZE}"
        )));
    }
    let mut seen = vec![false; n + 1];
    for &v in entries {
        let v = v as usize;
        if v == 0 || v > n {
            return Err(Error::InvalidPermutation(format!(
                "value {v} is outside 1..={n}"
            )));
        }
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidPermutation(format!("value {v} repeats")));
        }
    }
    Ok(())
}

pub(crate) fn ascents(a: &[u8]) -> usize {
    a.windows(2).filter(|w| w[0] < w[1]).count()
}

pub(crate) fn alternates_parity(a: &[u8]) -> bool {
    a.windows(2).all(|w| (w[0] ^ w[1]) & 1 == 1)
}

/// Exact inversion count: a bitset sweep for `n <= 128`, merge sort beyond.
pub(crate) fn inversions(a: &[u8]) -> u64 {
    if a.len() <= 128 {
        let mut seen = 0u128;
        let mut count = 0u64;
        for &v in a {
            let bit = u32::from(v - 1);
            // seen values greater than v
            count += u64::from((seen >> bit).count_ones());
            seen |= 1u128 << bit;
        }
        count
    } else {
        inversions_merge(a)
    }
}

pub(crate) fn inversions_merge(a: &[u8]) -> u64 {
    let mut buf = a.to_vec();
    let mut scratch = vec![0u8; a.len()];
    merge_count(&mut buf, &mut scratch)
}

fn merge_count(buf: &mut [u8], scratch: &mut [u8]) -> u64 {
    let n = buf.len();
    if n < 2 {
        return 0;
    }
    let mid = n / 2;
    let mut count = {
        let (left, right) = buf.split_at_mut(mid);
        let (sl, sr) = scratch.split_at_mut(mid);
        merge_count(left, sl) + merge_count(right, sr)
    };
    let (mut i, mut j, mut out) = (0, mid, 0);
    while i < mid && j < n {
        if buf[i] <= buf[j] {
            scratch[out] = buf[i];
            i += 1;
        } else {
            scratch[out] = buf[j];
            j += 1;
            count += (mid - i) as u64;
        }
        out += 1;
    }
    scratch[out..out + mid - i].copy_from_slice(&buf[i..mid]);
    out += mid - i;
    scratch[out..out + n - j].copy_from_slice(&buf[j..n]);
    buf.copy_from_slice(&scratch[..n]);
    count
}

/// Advances `a` to its lexicographic successor; returns false (leaving `a`
/// sorted ascending) once the last permutation has been passed.
pub fn next_lexicographic(a: &mut [u8]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        a.reverse();
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Which position class holds the odd values in a parity-alternate permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PapPattern {
    /// Odd values at positions 1, 3, 5, ...
    OddFirst,
    /// Odd values at positions 2, 4, 6, ... (even `n` only).
    EvenFirst,
}

impl PapPattern {
    /// Feasible patterns for size `n`.
    pub fn for_size(n: usize) -> &'static [PapPattern] {
        if n.is_multiple_of(2) {
            &[PapPattern::OddFirst, PapPattern::EvenFirst]
        } else {
            &[PapPattern::OddFirst]
        }
    }
}

/// Odd values `1, 3, 5, ...` of `[n]`.
pub fn odd_values(n: usize) -> Vec<u8> {
    (1..=n as u8).step_by(2).collect()
}

/// Even values `2, 4, 6, ...` of `[n]`.
pub fn even_values(n: usize) -> Vec<u8> {
    (2..=n as u8).step_by(2).collect()
}

/// Writes the interleaving of `odds` and `evens` under `pattern` into `out`.
pub fn interleave(pattern: PapPattern, odds: &[u8], evens: &[u8], out: &mut [u8]) {
    let (first, second) = match pattern {
        PapPattern::OddFirst => (odds, evens),
        PapPattern::EvenFirst => (evens, odds),
    };
    for (i, slot) in out.iter_mut().enumerate() {
        *slot = if i % 2 == 0 {
            first[i / 2]
        } else {
            second[i / 2]
        };
    }
}

/// Every parity-alternate permutation of `[n]`, each exactly once.
///
/// Order: pattern, then the odd-value arrangement in lexicographic order,
/// then the even-value arrangement in lexicographic order.
pub fn enumerate_paps(n: usize) -> Paps {
    assert!(
        (1..=MAX_SIZE).contains(&n),
        "permutation size {n} out of range"
    );
    Paps {
        patterns: PapPattern::for_size(n),
        pattern_idx: 0,
        odds: odd_values(n),
        evens: even_values(n),
        done: false,
    }
}

#[derive(Debug, Clone)]
pub struct Paps {
    patterns: &'static [PapPattern],
    pattern_idx: usize,
    odds: Vec<u8>,
    evens: Vec<u8>,
    done: bool,
}

impl Iterator for Paps {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        let mut out = vec![0u8; self.odds.len() + self.evens.len()];
        interleave(
            self.patterns[self.pattern_idx],
            &self.odds,
            &self.evens,
            &mut out,
        );
        // next_lexicographic resets an exhausted slice to ascending order
        if !next_lexicographic(&mut self.evens) && !next_lexicographic(&mut self.odds) {
            self.pattern_idx += 1;
            self.done = self.pattern_idx == self.patterns.len();
        }
        Some(Permutation::from_entries_unchecked(out))
    }
}
