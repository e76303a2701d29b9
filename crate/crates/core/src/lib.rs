//! Parity-alternate permutations and signed Eulerian numbers.
//!
//! A permutation is *parity-alternate* (a PAP) when its consecutive entries
//! alternate between odd and even values. This crate counts permutations of
//! `[n]` by ascents, parity and PAP membership, computes the same tables by
//! recurrence, and implements the cyclic operators `sigma` and `tau` whose
//! orbits explain the divisibility of those counts by prime powers.
//!
//! * [`perm`]: permutations, statistics, ranking, PAP generation.
//! * [`operators`]: `sigma`, `tau`, periods and orbits.
//! * [`triangles`]: the `(n, k)` tables, recurrences, symmetry laws.
//! * [`census`]: brute-force counting oracle and `tau`-orbit census.
//! * [`checks`]: theorem-level verification reports.

pub mod census;
pub mod checks;
pub mod error;
pub mod operators;
pub mod perm;
pub mod report;
pub mod triangles;

pub use census::{
    canonical_pap_counts, enumerate_pap_triangles, enumerate_triangles, nonpap_parity_balance,
    nonpap_parity_counts, orbit_census, DivisorCount, OrbitCensus, DEFAULT_N_MAX, FULL_SCAN_CAP,
    PAP_SCAN_CAP,
};
pub use checks::{DivisibilityReport, DivisibilityTuple};
pub use error::{Error, Result};
pub use operators::{
    apply_sigma, apply_tau, inversion_delta, is_canonical, orbit_sigma, orbit_tau, period_sigma,
    period_tau, Operator, OrbitRecord,
};
pub use perm::{enumerate_paps, Parity, PermStats, Permutation};
pub use report::{CheckRecord, Report, Suite};
pub use triangles::{Kind, Provenance, Triangle, TriangleSet};
