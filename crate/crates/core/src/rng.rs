//! Seedable deterministic random number generation.
//!
//! Every randomized component in the crate draws from this wrapper around
//! ChaCha8. The underlying u64 stream depends only on the seed, so a fixed
//! seed reproduces datasets, parameter initialization, shuffles and dropout
//! masks bit-for-bit across runs and platforms. All floating-point draws
//! happen in f64 and are converted by callers, which keeps the consumed
//! stream identical regardless of the training precision.

use rand::{Rng as _, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

#[derive(Debug, Clone)]
pub struct Rng {
    inner: ChaCha8Rng,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng {
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Uniform draw from [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        self.inner.gen::<f64>()
    }

    /// Uniform draw from [lo, hi).
    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Gaussian draw.
    pub fn normal(&mut self, mean: f64, std: f64) -> f64 {
        Normal::new(mean, std)
            .expect("std must be finite and non-negative")
            .sample(&mut self.inner)
    }

    /// True with probability `p`.
    pub fn below(&mut self, p: f64) -> bool {
        self.next_f64() < p
    }

    /// Uniform integer from 0..n (n must be positive).
    pub fn int_below(&mut self, n: usize) -> usize {
        assert!(n > 0, "int_below(0)");
        self.inner.gen_range(0..n)
    }

    /// Uniform integer from the inclusive range [lo, hi].
    pub fn int_range(&mut self, lo: usize, hi: usize) -> usize {
        assert!(lo <= hi, "empty range");
        self.inner.gen_range(lo..=hi)
    }

    pub fn shuffle<T>(&mut self, xs: &mut [T]) {
        use rand::seq::SliceRandom;
        xs.shuffle(&mut self.inner);
    }

    /// Derive an independent sub-generator; advances this stream by one draw.
    pub fn fork(&mut self) -> Rng {
        Rng::new(self.inner.next_u64())
    }
}
