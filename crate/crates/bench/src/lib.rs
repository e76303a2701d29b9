//! Shared fixtures for the benchmarks.

use pap_core::Permutation;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `count` uniformly random permutations of `[n]`, reproducible from `seed`.
pub fn random_permutations(n: usize, count: usize, seed: u64) -> Vec<Permutation> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut entries: Vec<u8> = (1..=n as u8).collect();
    (0..count)
        .map(|_| {
            entries.shuffle(&mut rng);
            Permutation::new(entries.clone()).expect("shuffle of 1..=n")
        })
        .collect()
}
