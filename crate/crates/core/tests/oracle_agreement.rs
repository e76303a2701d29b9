mod common;

use common::{all_perms, ascents, is_pap, pair_scan_inversions, perms};
use pap_core::census::{
    canonical_pap_counts, enumerate_pap_triangles, enumerate_triangles, orbit_census,
};
use pap_core::triangles::{
    bc_from_ad, check_symmetries, eulerian_recurrence, even_pap_total, pap_total, pq_from_sr,
    r_recurrence, signed_recurrence,
};
use pap_core::{Kind, Parity, Permutation, Triangle};
use proptest::prelude::*;

/// `[A, B, C, D, S, P, Q, R]` rows for one `n`, counted from scratch.
fn naive_rows(n: u8) -> [Vec<i64>; 8] {
    let mut rows: [Vec<i64>; 8] = Default::default();
    for r in rows.iter_mut() {
        *r = vec![0; n as usize];
    }
    for a in all_perms(n) {
        let k = ascents(&a);
        let even = pair_scan_inversions(&a).is_multiple_of(2);
        let pap = is_pap(&a);
        let sign = if even { 1 } else { -1 };
        rows[0][k] += 1;
        rows[if even { 1 } else { 2 }][k] += 1;
        rows[3][k] += sign;
        if pap {
            rows[4][k] += 1;
            rows[if even { 5 } else { 6 }][k] += 1;
            rows[7][k] += sign;
        }
    }
    rows
}

#[test]
fn full_scan_matches_naive_counting() {
    let set = enumerate_triangles(7, 3).unwrap();
    for n in 1..=7u8 {
        let expected = naive_rows(n);
        for (kind, row) in Kind::ALL.into_iter().zip(expected) {
            assert_eq!(
                set.get(kind).unwrap().row(n as usize),
                &row[..],
                "{kind} n = {n}"
            );
        }
    }
}

#[test]
fn recurrences_match_enumeration() {
    let set = enumerate_triangles(9, 4).unwrap();
    assert_eq!(
        eulerian_recurrence(9).unwrap().rows(),
        set.get(Kind::A).unwrap().rows()
    );
    assert_eq!(
        signed_recurrence(9).unwrap().rows(),
        set.get(Kind::D).unwrap().rows()
    );
    assert_eq!(
        r_recurrence(9).unwrap().rows(),
        set.get(Kind::R).unwrap().rows()
    );

    let (b, c) = bc_from_ad(
        &eulerian_recurrence(9).unwrap(),
        &signed_recurrence(9).unwrap(),
    )
    .unwrap();
    assert_eq!(b.rows(), set.get(Kind::B).unwrap().rows());
    assert_eq!(c.rows(), set.get(Kind::C).unwrap().rows());

    let (p, q) = pq_from_sr(set.get(Kind::S).unwrap(), &r_recurrence(9).unwrap()).unwrap();
    assert_eq!(p.rows(), set.get(Kind::P).unwrap().rows());
    assert_eq!(q.rows(), set.get(Kind::Q).unwrap().rows());
}

#[test]
fn row_sums_and_parity_congruences() {
    let set = enumerate_triangles(9, 2).unwrap();
    let get = |k| set.get(k).unwrap();
    let mut fact = 1i64;
    for n in 1..=9 {
        fact *= n as i64;
        assert_eq!(get(Kind::A).row_sum(n), fact);
        assert_eq!(get(Kind::S).row_sum(n) as u64, pap_total(n).unwrap());
        assert_eq!(get(Kind::P).row_sum(n) as u64, even_pap_total(n).unwrap());
        if n >= 2 {
            assert_eq!(get(Kind::D).row_sum(n), 0, "n = {n}");
            assert_eq!(get(Kind::S).at(n, 0), 1);
            assert_eq!(get(Kind::S).at(n, n as isize - 1), 1);
        }
        for k in 0..n as isize {
            assert_eq!((get(Kind::A).at(n, k) - get(Kind::D).at(n, k)) % 2, 0);
            assert_eq!((get(Kind::S).at(n, k) - get(Kind::R).at(n, k)) % 2, 0);
            assert_eq!(
                get(Kind::A).at(n, k),
                get(Kind::B).at(n, k) + get(Kind::C).at(n, k)
            );
            assert_eq!(
                get(Kind::S).at(n, k),
                get(Kind::P).at(n, k) + get(Kind::Q).at(n, k)
            );
        }
    }
}

#[test]
fn symmetry_laws_hold_on_enumerated_tables() {
    let report = check_symmetries(&enumerate_pap_triangles(12).unwrap());
    assert!(report.passed(), "{:?}", report.failures().next());
    assert!(!report.is_empty());
}

#[test]
fn pap_only_scan_matches_full_scan() {
    let full = enumerate_triangles(9, 3).unwrap();
    let paps = enumerate_pap_triangles(9).unwrap();
    for kind in [Kind::S, Kind::P, Kind::Q, Kind::R] {
        assert_eq!(
            paps.get(kind).unwrap().rows(),
            full.get(kind).unwrap().rows(),
            "{kind}"
        );
    }
}

#[test]
fn swapping_one_and_three_flips_pap_parity() {
    for n in 3..=9 {
        let mut even = 0;
        let mut odd = 0;
        for p in pap_core::enumerate_paps(n) {
            let q = p.swap_values(1, 3);
            assert!(q.is_pap());
            assert_ne!(q.parity(), p.parity());
            assert_eq!(q.swap_values(1, 3), p);
            match p.parity() {
                Parity::Even => even += 1,
                Parity::Odd => odd += 1,
            }
        }
        assert_eq!(even, odd, "n = {n}");
    }
}

#[test]
fn census_sums_match_canonical_counts() {
    let paps = enumerate_pap_triangles(9).unwrap();
    let (p, q) = (paps.get(Kind::P).unwrap(), paps.get(Kind::Q).unwrap());
    for n in (2..=10).step_by(2) {
        for k in 1..n {
            let census = orbit_census(n, k).unwrap();
            let (even, odd) = canonical_pap_counts(n, k).unwrap();
            assert_eq!(census.alpha_weighted_sum(), even, "n = {n}, k = {k}");
            assert_eq!(census.beta_weighted_sum(), odd, "n = {n}, k = {k}");
            let ki = k as isize - 1;
            assert_eq!(even as i64, p.at(n - 1, ki));
            assert_eq!(odd as i64, q.at(n - 1, ki));
        }
    }
}

#[test]
fn census_example_cells() {
    for k in 1..6 {
        let c = orbit_census(6, k).unwrap();
        let s5 = [1, 2, 6, 2, 1];
        assert_eq!(c.alpha_weighted_sum() + c.beta_weighted_sum(), s5[k - 1]);
    }
    // gcd(4, 8/d) = 1 only for d = 8
    let c = orbit_census(8, 4).unwrap();
    for e in &c.entries {
        if e.d != 8 {
            assert_eq!((e.alpha, e.beta), (0, 0), "d = {}", e.d);
        }
    }
}

#[test]
fn chunk_count_does_not_change_results() {
    let one = enumerate_triangles(8, 1).unwrap();
    for chunks in [2, 3, 7, 8, 64] {
        assert_eq!(
            enumerate_triangles(8, chunks).unwrap(),
            one,
            "chunks = {chunks}"
        );
    }
}

#[test]
fn triangle_json_round_trip() {
    let set = enumerate_triangles(6, 2).unwrap();
    for t in set.iter() {
        let json = serde_json::to_string(t).unwrap();
        let back: Triangle = serde_json::from_str(&json).unwrap();
        assert_eq!(&back, t);
    }
}

proptest! {
    #[test]
    fn rank_round_trip(n in 1usize..=20, seed in any::<u64>()) {
        let total = pap_core::perm::factorial(n).unwrap();
        let r = seed % total;
        let p = Permutation::unrank(n, r).unwrap();
        prop_assert_eq!(p.rank().unwrap(), r);
    }

    #[test]
    fn reflection_complements(v in (1usize..60).prop_flat_map(|n| Just((1..=n as u8).collect::<Vec<_>>()).prop_shuffle())) {
        let n = v.len();
        let p = Permutation::new(v).unwrap();
        let r = p.reflect();
        prop_assert_eq!(r.reflect(), p.clone());
        prop_assert_eq!(p.ascent_count() + r.ascent_count(), n - 1);
        prop_assert_eq!(p.inversion_count() + r.inversion_count(), (n * (n - 1) / 2) as u64);
        prop_assert_eq!(p.is_pap(), r.is_pap());
    }
}

#[test]
fn stats_agree_with_naive_helpers() {
    for p in perms(6) {
        let s = p.stats();
        assert_eq!(s.ascents, ascents(p.entries()));
        assert_eq!(s.inversions, pair_scan_inversions(p.entries()));
        assert_eq!(s.is_pap, is_pap(p.entries()));
        assert_eq!(s.parity == Parity::Even, s.inversions % 2 == 0);
    }
}
