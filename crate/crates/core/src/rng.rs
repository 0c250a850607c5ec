//! Deterministic pseudo-random generator for seeded runs.
//!
//! Reports must be byte-identical for a given config and seed, across
//! platforms and releases, so the generator is pinned here instead of
//! depending on an external RNG whose stream may change between versions.

/// SplitMix64. Small state, full 64-bit output, stable stream.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` (bound > 0), by rejection.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let zone = u64::MAX - (u64::MAX % bound);
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }

    /// Uniform signed value in `-mag..=mag`.
    pub fn signed(&mut self, mag: u64) -> i64 {
        self.below(2 * mag + 1) as i64 - mag as i64
    }
}
