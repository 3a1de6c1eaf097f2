//! Workload builders shared by the benchmarks.

use knotpos_core::BraidWord;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// `count` random braids on `strands` strands with `len` letters, reproducible from `seed`.
pub fn random_braids(seed: u64, count: usize, strands: usize, len: usize) -> Vec<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let letters = (0..len)
                .map(|_| {
                    let g = rng.gen_range(1..strands as i32);
                    if rng.gen_bool(0.5) {
                        g
                    } else {
                        -g
                    }
                })
                .collect();
            BraidWord::new(strands, letters).expect("generators in range")
        })
        .collect()
}

/// Random positive braids.
pub fn random_positive_braids(seed: u64, count: usize, strands: usize, len: usize) -> Vec<BraidWord> {
    random_braids(seed, count, strands, len)
        .into_iter()
        .map(|b| BraidWord::new(strands, b.letters().iter().map(|l| l.abs()).collect()).expect("in range"))
        .collect()
}
