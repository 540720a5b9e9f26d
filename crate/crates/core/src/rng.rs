//! Portable pseudo-random stream used by the random graph families.
//!
//! The generator is xoshiro256++ whose state is filled from the 64-bit seed
//! by SplitMix64 (the `seed_from_u64` convention of `rand_xoshiro`). Derived
//! quantities are defined here rather than delegated to `rand`, so that a
//! reimplementation in another language can reproduce every corpus:
//!
//! * `below(k)`: rejection sampling; draws `x` until
//!   `x < 2^64 - (2^64 mod k)` and returns `x mod k`.
//! * `unit()`: `(x >> 11) * 2^-53`, uniform on `[0, 1)`.
//! * `chance(p)`: `unit() < p`.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;

#[derive(Debug, Clone)]
pub struct GraphRng(Xoshiro256PlusPlus);

impl GraphRng {
    pub fn new(seed: u64) -> Self {
        GraphRng(Xoshiro256PlusPlus::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    pub fn below(&mut self, k: u64) -> u64 {
        assert!(k > 0, "empty range");
        let zone = u64::MAX - (u64::MAX - k + 1) % k;
        loop {
            let x = self.next_u64();
            if x <= zone {
                return x % k;
            }
        }
    }

    /// Uniform on the inclusive range `lo..=hi`.
    pub fn between(&mut self, lo: u64, hi: u64) -> u64 {
        lo + self.below(hi - lo + 1)
    }

    pub fn unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    pub fn chance(&mut self, p: f64) -> bool {
        self.unit() < p
    }
}
