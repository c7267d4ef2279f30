use alloc::vec::Vec;

use rand::{Rng as _, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Field, Scalar};

/// Default bound for random coordinates: integers in `[-97, 97]`.
pub const DEFAULT_COORD_BOUND: i64 = 97;

/// Seeded generator used to specialize "general" points and forms.
///
/// The stream is ChaCha8 keyed by `rand_core`'s `seed_from_u64` expansion of
/// the seed, so a seed reproduces the same draws on every platform.
/// [`Rng::split`] derives an independent child generator from the next draw.
#[derive(Clone, Debug)]
pub struct Rng {
    seed: u64,
    inner: ChaCha8Rng,
}

impl Rng {
    pub fn new(seed: u64) -> Self {
        Self {
            seed,
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }

    pub fn split(&mut self) -> Rng {
        Rng::new(self.next_u64())
    }

    /// Uniform integer in `[lo, hi]`.
    pub fn int_in(&mut self, lo: i64, hi: i64) -> i64 {
        self.inner.gen_range(lo..=hi)
    }

    /// Nonzero integer in `[-bound, bound]`.
    pub fn nonzero_int(&mut self, bound: i64) -> i64 {
        loop {
            let v = self.int_in(-bound, bound);
            if v != 0 {
                return v;
            }
        }
    }

    /// `len` integers in `[-bound, bound]`, redrawn until not all zero.
    pub fn int_vector(&mut self, len: usize, bound: i64) -> Vec<i64> {
        loop {
            let v: Vec<i64> = (0..len).map(|_| self.int_in(-bound, bound)).collect();
            if v.iter().any(|&c| c != 0) {
                return v;
            }
        }
    }
}

/// Random projective point of P^`ambient_dim` with integer coordinates in
/// `[-97, 97]`, as scalars of `field`.
pub fn random_point(rng: &mut Rng, ambient_dim: usize, field: Field) -> Vec<Scalar> {
    random_point_bounded(rng, ambient_dim, field, DEFAULT_COORD_BOUND)
}

pub fn random_point_bounded(rng: &mut Rng, ambient_dim: usize, field: Field, bound: i64) -> Vec<Scalar> {
    rng.int_vector(ambient_dim + 1, bound)
        .into_iter()
        .map(|c| Scalar::from_int(c, field))
        .collect()
}
