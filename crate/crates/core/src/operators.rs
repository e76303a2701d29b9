//! The cyclic-increment operator `sigma`, its canonical-to-canonical power
//! `tau`, and orbit/period computation for both.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::perm::{factorial, Permutation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Operator {
    Sigma,
    Tau,
}

impl fmt::Display for Operator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Operator::Sigma => "sigma",
            Operator::Tau => "tau",
        })
    }
}

impl FromStr for Operator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "sigma" | "σ" => Ok(Operator::Sigma),
            "tau" | "τ" => Ok(Operator::Tau),
            _ => Err(Error::precondition(format!("unknown operator {s:?}"))),
        }
    }
}

/// The orbit of `base`: `elements[i]` is the `(i+1)`-th image, so the last
/// element is `base` itself.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitRecord {
    pub base: Permutation,
    pub operator: Operator,
    pub period: u64,
    pub elements: Vec<Permutation>,
}

/// One application of `sigma` on a raw one-line slice.
pub(crate) fn sigma_in_place(a: &mut [u8]) {
    let n = a.len();
    if n < 2 {
        return;
    }
    let max = n as u8;
    if a[n - 1] == max {
        // a_1 ... a_{n-1} n  ->  1 (a_1+1) ... (a_{n-1}+1)
        for i in (1..n).rev() {
            a[i] = a[i - 1] + 1;
        }
        a[0] = 1;
    } else if a[0] == max {
        // n a_1 ... a_{n-1}  ->  (a_1+1) ... (a_{n-1}+1) 1
        for i in 0..n - 1 {
            a[i] = a[i + 1] + 1;
        }
        a[n - 1] = 1;
    } else {
        for v in a.iter_mut() {
            *v = if *v == max { 1 } else { *v + 1 };
        }
    }
}

pub fn apply_sigma(p: &Permutation) -> Permutation {
    let mut entries = p.entries().to_vec();
    sigma_in_place(&mut entries);
    Permutation::from_entries_unchecked(entries)
}

/// `inv(sigma p) - inv(p)`: `2i - (n + 1)` when the maximum sits at an
/// interior position `i` (1-based), zero when it sits at either end.
pub fn inversion_delta(p: &Permutation) -> i64 {
    let n = p.len();
    if n < 2 {
        return 0;
    }
    let pos = p
        .entries()
        .iter()
        .position(|&v| v as usize == n)
        .expect("permutation contains its maximum")
        + 1;
    if pos == 1 || pos == n {
        0
    } else {
        2 * pos as i64 - (n as i64 + 1)
    }
}

/// Iteration cap for `period_sigma`. Members of `E^◁(n,k)` have period at
/// most `n(n-k)`; anything else is capped at `n * n!`.
fn sigma_period_bound(p: &Permutation) -> u64 {
    let n = p.len() as u64;
    if p.left_less_right() {
        n * (n - p.ascent_count() as u64)
    } else {
        factorial(p.len()).map_or(u64::MAX, |f| f.saturating_mul(n))
    }
}

pub fn period_sigma(p: &Permutation) -> Result<u64> {
    let bound = sigma_period_bound(p);
    let mut cur = p.entries().to_vec();
    for step in 1..=bound {
        sigma_in_place(&mut cur);
        if cur == p.entries() {
            return Ok(step);
        }
    }
    Err(Error::PeriodBound { bound })
}

pub fn orbit_sigma(p: &Permutation) -> Result<OrbitRecord> {
    let period = period_sigma(p)?;
    let mut elements = Vec::with_capacity(period as usize);
    let mut cur = p.clone();
    for _ in 0..period {
        cur = apply_sigma(&cur);
        elements.push(cur.clone());
    }
    Ok(OrbitRecord {
        base: p.clone(),
        operator: Operator::Sigma,
        period,
        elements,
    })
}

/// Last entry equals `n`.
pub fn is_canonical(p: &Permutation) -> bool {
    p.last() as usize == p.len()
}

fn check_tau_input(p: &Permutation) -> Result<()> {
    let n = p.len();
    if !n.is_multiple_of(2) {
        return Err(Error::precondition(format!(
            "tau needs an even-size permutation, got size {n}"
        )));
    }
    if !is_canonical(p) {
        return Err(Error::precondition(format!(
            "tau needs a canonical permutation (last entry {n}), got {p}"
        )));
    }
    Ok(())
}

/// `tau` on a canonical slice `c_1 ... c_{N-1} N`: `sigma^(N - c_{N-1})`.
pub(crate) fn tau_in_place(a: &mut [u8]) {
    let n = a.len();
    if n < 2 {
        return;
    }
    let exponent = n - a[n - 2] as usize;
    for _ in 0..exponent {
        sigma_in_place(a);
    }
    debug_assert_eq!(a[n - 1] as usize, n);
}

pub fn apply_tau(p: &Permutation) -> Result<Permutation> {
    check_tau_input(p)?;
    let mut entries = p.entries().to_vec();
    tau_in_place(&mut entries);
    Ok(Permutation::from_entries_unchecked(entries))
}

/// Smallest `d >= 1` with `tau^d p = p`; always a divisor of the size.
pub fn period_tau(p: &Permutation) -> Result<u64> {
    check_tau_input(p)?;
    period_tau_unchecked(p.entries())
}

pub(crate) fn period_tau_unchecked(a: &[u8]) -> Result<u64> {
    let bound = a.len() as u64;
    let mut cur = a.to_vec();
    for step in 1..=bound {
        tau_in_place(&mut cur);
        if cur == a {
            return Ok(step);
        }
    }
    Err(Error::PeriodBound { bound })
}

pub fn orbit_tau(p: &Permutation) -> Result<OrbitRecord> {
    let period = period_tau(p)?;
    let mut elements = Vec::with_capacity(period as usize);
    let mut cur = p.entries().to_vec();
    for _ in 0..period {
        tau_in_place(&mut cur);
        elements.push(Permutation::from_entries_unchecked(cur.clone()));
    }
    Ok(OrbitRecord {
        base: p.clone(),
        operator: Operator::Tau,
        period,
        elements,
    })
}

pub fn apply(op: Operator, p: &Permutation) -> Result<Permutation> {
    match op {
        Operator::Sigma => Ok(apply_sigma(p)),
        Operator::Tau => apply_tau(p),
    }
}

pub fn orbit(op: Operator, p: &Permutation) -> Result<OrbitRecord> {
    match op {
        Operator::Sigma => orbit_sigma(p),
        Operator::Tau => orbit_tau(p),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn sigma_cases() {
        // maximum at the right end
        assert_eq!(apply_sigma(&p("145236")), p("125634"));
        // maximum interior
        assert_eq!(apply_sigma(&p("125634")), p("236145"));
        // maximum at the left end
        assert_eq!(apply_sigma(&p("612345")), p("234561"));
        assert_eq!(
            apply_sigma(&Permutation::identity(7)),
            Permutation::identity(7)
        );
        assert_eq!(apply_sigma(&p("1")), p("1"));
        assert_eq!(apply_sigma(&p("21")), p("21"));
    }

    #[test]
    fn sigma_cubed_is_the_tau_example() {
        let mut q = p("145236");
        for _ in 0..3 {
            q = apply_sigma(&q);
        }
        assert_eq!(q, p("341256"));
    }

    #[test]
    fn inversion_delta_examples() {
        assert_eq!(inversion_delta(&p("145236")), 0);
        assert_eq!(inversion_delta(&p("125634")), 1);
        // the 6 of 236145 is at position 3
        assert_eq!(inversion_delta(&p("236145")), -1);
        assert_eq!(inversion_delta(&p("1")), 0);
    }

    #[test]
    fn sigma_periods() {
        assert_eq!(period_sigma(&Permutation::identity(9)).unwrap(), 1);
        assert_eq!(period_sigma(&p("145236")).unwrap(), 4);
        assert_eq!(period_sigma(&p("12")).unwrap(), 1);
        assert_eq!(period_sigma(&p("1")).unwrap(), 1);
        assert_eq!(period_sigma(&p("132")).unwrap(), 2);
    }

    #[test]
    fn sigma_orbit_record() {
        let o = orbit_sigma(&p("145236")).unwrap();
        assert_eq!(o.period, 4);
        assert_eq!(o.elements.len(), 4);
        assert!(o.elements.contains(&p("125634")));
        assert_eq!(o.elements.last(), Some(&p("145236")));
        let id = orbit_sigma(&Permutation::identity(4)).unwrap();
        assert_eq!(id.elements, vec![Permutation::identity(4)]);
    }

    #[test]
    fn canonical() {
        assert!(is_canonical(&p("145236")));
        assert!(is_canonical(&p("341256")));
        assert!(!is_canonical(&p("236145")));
    }

    #[test]
    fn tau_examples() {
        assert_eq!(apply_tau(&p("145236")).unwrap(), p("341256"));
        assert_eq!(apply_tau(&p("341256")).unwrap(), p("145236"));
        assert_eq!(
            apply_tau(&Permutation::identity(8)).unwrap(),
            Permutation::identity(8)
        );
        assert_eq!(period_tau(&p("145236")).unwrap(), 2);
        assert_eq!(period_tau(&Permutation::identity(6)).unwrap(), 1);
        let o = orbit_tau(&p("145236")).unwrap();
        assert_eq!(o.elements, vec![p("341256"), p("145236")]);
    }

    #[test]
    fn tau_rejects_bad_input() {
        assert!(matches!(
            apply_tau(&p("236145")),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            apply_tau(&p("12345")),
            Err(Error::Precondition(_))
        ));
        assert!(period_tau(&p("213")).is_err());
    }

    #[test]
    fn operator_names() {
        assert_eq!("sigma".parse::<Operator>().unwrap(), Operator::Sigma);
        assert_eq!("TAU".parse::<Operator>().unwrap(), Operator::Tau);
        assert!("rho".parse::<Operator>().is_err());
    }
}
