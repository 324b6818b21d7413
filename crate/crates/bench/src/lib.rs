//! Inputs shared by the benchmarks.

use evenset_core::{BitWord, LinearCode};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A random code of length `n` spanned by `k` random rows, from a fixed seed.
///
/// Rows are redrawn until the span has full dimension `k`.
pub fn random_full_rank_code(n: usize, k: usize, seed: u64) -> LinearCode {
    assert!(k <= n, "dimension {k} exceeds length {n}");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let rows: Vec<BitWord> = (0..k)
            .map(|_| BitWord::from_bits((0..n).map(|_| rng.random::<bool>())))
            .collect();
        let code = LinearCode::from_rows_with_length(n, rows).expect("rows have length n");
        if code.dimension() == k {
            return code;
        }
    }
}
