//! Counter-based random streams: `(seed, counter)` selects an independent
//! ChaCha stream, so sharded sampling reproduces sequential sampling.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RngStream {
    pub seed: u64,
    pub counter: u64,
}

impl RngStream {
    pub fn new(seed: u64, counter: u64) -> Self {
        RngStream { seed, counter }
    }

    pub fn rng(self) -> ChaCha8Rng {
        let mut r = ChaCha8Rng::seed_from_u64(self.seed);
        r.set_stream(self.counter);
        r
    }
}

/// Shorthand for `RngStream::new(seed, counter).rng()`.
pub fn stream(seed: u64, counter: u64) -> ChaCha8Rng {
    RngStream::new(seed, counter).rng()
}
