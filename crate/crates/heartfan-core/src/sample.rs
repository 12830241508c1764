//! A tiny deterministic PRNG for seeded sampling.
//!
//! SplitMix64: the output stream is fixed forever by the seed, which keeps
//! sampled reports byte-stable across platforms and releases.

use alloc::vec::Vec;
use num_bigint::BigInt;
use num_rational::BigRational;

use crate::lattice::{DualVector, LatticeVector};

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in `lo..=hi`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        debug_assert!(lo <= hi);
        let span = (hi - lo + 1) as u64;
        lo + (self.next_u64() % span) as i64
    }

    pub fn lattice_vector(&mut self, rank: usize, bound: i64) -> LatticeVector {
        let coords: Vec<BigInt> =
            (0..rank).map(|_| BigInt::from(self.int_in(-bound, bound))).collect();
        LatticeVector::new(coords)
    }

    /// A rational dual vector with numerators in `[-bound, bound]` and
    /// denominators in `[1, bound]`.
    pub fn dual_vector(&mut self, rank: usize, bound: i64) -> DualVector {
        let coords: Vec<BigRational> = (0..rank)
            .map(|_| {
                BigRational::new(
                    BigInt::from(self.int_in(-bound, bound)),
                    BigInt::from(self.int_in(1, bound)),
                )
            })
            .collect();
        DualVector::new(coords)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn deterministic_stream() {
        let mut a = SplitMix64::new(0);
        let mut b = SplitMix64::new(0);
        for _ in 0..10 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        // pinned first value of the zero seed, a regression guard
        assert_eq!(SplitMix64::new(0).next_u64(), 16294208416658607535);
    }
}
