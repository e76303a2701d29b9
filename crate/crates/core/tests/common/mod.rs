#![allow(dead_code)]

use pap_core::Permutation;

/// Every permutation of `[n]`, generated by recursive insertion so that it
/// shares no code with the library's lexicographic machinery.
pub fn all_perms(n: u8) -> Vec<Vec<u8>> {
    if n == 1 {
        return vec![vec![1]];
    }
    let mut out = Vec::new();
    for shorter in all_perms(n - 1) {
        for pos in 0..=shorter.len() {
            let mut v = shorter.clone();
            v.insert(pos, n);
            out.push(v);
        }
    }
    out
}

pub fn perms(n: u8) -> impl Iterator<Item = Permutation> {
    all_perms(n)
        .into_iter()
        .map(|v| Permutation::new(v).unwrap())
}

pub fn pair_scan_inversions(a: &[u8]) -> u64 {
    let mut c = 0;
    for i in 0..a.len() {
        for j in i + 1..a.len() {
            if a[i] > a[j] {
                c += 1;
            }
        }
    }
    c
}

pub fn ascents(a: &[u8]) -> usize {
    (1..a.len()).filter(|&i| a[i - 1] < a[i]).count()
}

pub fn is_pap(a: &[u8]) -> bool {
    (1..a.len()).all(|i| a[i - 1] % 2 != a[i] % 2)
}

/// `tau` on a canonical `c_1 ... c_{N-1} N` in closed form: rotate the
/// cyclic word right by one, then add `N - c_{N-1}` modulo `N` (0 read as N).
pub fn tau_closed_form(a: &[u8]) -> Vec<u8> {
    let n = a.len() as u32;
    let shift = n - u32::from(a[a.len() - 2]);
    let mut rotated = vec![a[a.len() - 1]];
    rotated.extend_from_slice(&a[..a.len() - 1]);
    rotated
        .into_iter()
        .map(|v| {
            let w = (u32::from(v) + shift) % n;
            if w == 0 {
                n as u8
            } else {
                w as u8
            }
        })
        .collect()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
