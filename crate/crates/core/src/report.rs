//! Flat verification records: one line per checked (tuple, statistic).

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Suite {
    #[serde(rename = "d-eq-r")]
    DEqualsR,
    #[serde(rename = "thm41")]
    Theorem41,
    #[serde(rename = "thm51")]
    Theorem51,
    #[serde(rename = "thm52")]
    Theorem52,
    #[serde(rename = "cor53")]
    Corollary53,
    #[serde(rename = "cor54")]
    Corollary54,
    #[serde(rename = "eq11")]
    Eq11,
    #[serde(rename = "symmetry")]
    Symmetry,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::DEqualsR,
        Suite::Theorem41,
        Suite::Theorem51,
        Suite::Theorem52,
        Suite::Corollary53,
        Suite::Corollary54,
        Suite::Eq11,
        Suite::Symmetry,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::DEqualsR => "d-eq-r",
            Suite::Theorem41 => "thm41",
            Suite::Theorem51 => "thm51",
            Suite::Theorem52 => "thm52",
            Suite::Corollary53 => "cor53",
            Suite::Corollary54 => "cor54",
            Suite::Eq11 => "eq11",
            Suite::Symmetry => "symmetry",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::precondition(format!("unknown suite {s:?}")))
    }
}

/// One checked value. Exactly one of `expected` (equality) and `modulus`
/// (divisibility) is set.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub suite: Suite,
    pub tuple: String,
    pub statistic: String,
    pub value: i64,
    pub expected: Option<i64>,
    pub modulus: Option<i64>,
    pub pass: bool,
}

impl CheckRecord {
    pub fn equality(
        suite: Suite,
        tuple: impl Into<String>,
        statistic: impl Into<String>,
        value: i64,
        expected: i64,
    ) -> Self {
        CheckRecord {
            suite,
            tuple: tuple.into(),
            statistic: statistic.into(),
            value,
            expected: Some(expected),
            modulus: None,
            pass: value == expected,
        }
    }

    pub fn divisibility(
        suite: Suite,
        tuple: impl Into<String>,
        statistic: impl Into<String>,
        value: i64,
        modulus: i64,
    ) -> Self {
        CheckRecord {
            suite,
            tuple: tuple.into(),
            statistic: statistic.into(),
            value,
            expected: None,
            modulus: Some(modulus),
            pass: value % modulus == 0,
        }
    }
}

impl fmt::Display for CheckRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass { "PASS" } else { "FAIL" };
        write!(
            f,
            "{verdict} {} [{}] {} = {}",
            self.suite, self.tuple, self.statistic, self.value
        )?;
        match (self.expected, self.modulus) {
            (Some(e), _) => write!(f, " (expected {e})"),
            (None, Some(m)) => write!(f, " (divisible by {m})"),
            (None, None) => Ok(()),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub records: Vec<CheckRecord>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, record: CheckRecord) {
        self.records.push(record);
    }

    pub fn extend(&mut self, other: Report) {
        self.records.extend(other.records);
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// True when no record failed (an empty report passes).
    pub fn passed(&self) -> bool {
        self.records.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.records.iter().filter(|r| !r.pass)
    }
}

impl FromIterator<CheckRecord> for Report {
    fn from_iter<I: IntoIterator<Item = CheckRecord>>(iter: I) -> Self {
        Report {
            records: iter.into_iter().collect(),
        }
    }
}
