//! Seeded random source shared by all stochastic operations.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Deterministic random source.
///
/// Wraps a counter-based generator so that a 64-bit seed fully determines
/// every gene draw, symbol choice and selection decision of a run. Each run
/// (and each thread in a batch) owns its source; there is no global state.
#[derive(Debug, Clone)]
pub struct RandomSource {
    seed: u64,
    rng: ChaCha8Rng,
}

impl RandomSource {
    pub fn from_seed(seed: u64) -> Self {
        Self {
            seed,
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// The seed this source was created with.
    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Uniform draw from the unit interval.
    pub fn next_unit(&mut self) -> f64 {
        self.rng.random::<f64>()
    }

    /// Uniform index in `0..n`. `n` must be nonzero.
    pub fn next_index(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        self.rng.random_range(0..n)
    }

    /// Bernoulli draw with success probability `p` (must lie in `[0, 1]`).
    pub fn next_bool(&mut self, p: f64) -> bool {
        self.rng.random_bool(p)
    }

    /// Two distinct uniform indices in `0..n` (requires `n >= 2`).
    ///
    /// The second index is drawn from the remaining `n - 1` positions, so
    /// exactly two values are consumed from the stream.
    pub fn next_distinct_pair(&mut self, n: usize) -> (usize, usize) {
        debug_assert!(n >= 2);
        let first = self.next_index(n);
        let mut second = self.next_index(n - 1);
        if second >= first {
            second += 1;
        }
        (first, second)
    }
}
