//! Shared helpers for the integration suites.

use resolution_spectra::{ContinuedFraction, ProjectiveRational};

pub fn pr(s: &str) -> ProjectiveRational {
    s.parse().unwrap()
}

pub fn cf(q: &[u64]) -> ContinuedFraction {
    ContinuedFraction::new(q.to_vec()).unwrap()
}

/// Deterministic 64-bit generator (splitmix64) for seeded random suites.
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, n)`.
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    pub fn f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }
}
