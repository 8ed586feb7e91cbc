//! Seeded pseudo-random numbers for reproducible suites.
//!
//! SplitMix64 (Steele, Lea & Flood; the reference generator from Vigna's
//! xoshiro notes) is small enough to restate exactly, so any implementation
//! in any language can reproduce a suite from its seed. The algorithm is
//! frozen under the version tag below; changing it would invalidate every
//! recorded seed, so a replacement must use a new tag.

/// Version tag for the generator algorithm. Seeds are only comparable
/// across implementations that agree on this tag.
pub const RNG_VERSION: &str = "splitmix64-v1";

/// SplitMix64 stream seeded with a single `u64`.
#[derive(Clone, Debug)]
pub struct Rng {
    state: u64,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound`. `bound` must be nonzero. Uses rejection
    /// sampling so the distribution is exactly uniform.
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0);
        let zone = u64::MAX - (u64::MAX % bound + 1) % bound;
        loop {
            let v = self.next_u64();
            if v <= zone {
                return v % bound;
            }
        }
    }

    /// Uniform value in the inclusive range `lo..=hi`.
    pub fn range_i64(&mut self, lo: i64, hi: i64) -> i64 {
        assert!(lo <= hi);
        let span = (hi - lo) as u64 + 1;
        lo + self.below(span) as i64
    }
}
