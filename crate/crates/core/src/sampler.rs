//! Deterministic pseudo-random points for property checks.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::arith::{int, Rational, VarSet};
use crate::error::{Error, Result};
use crate::zhc::{forbidden_multiple, PointConfig};

/// Integers are drawn from `[-SAMPLE_RANGE, SAMPLE_RANGE]`.
pub const SAMPLE_RANGE: i64 = 1000;

const MAX_DRAWS: usize = 10_000;

/// Seeded source of integer-valued variables that keep every pairwise
/// difference out of `{0, ±c, ±2c}`.
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn integer(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    /// `count` fresh values, each admissible against `taken` and each other.
    pub fn fresh(&mut self, taken: &[Rational], c: &Rational, count: usize) -> Result<VarSet> {
        let mut all = taken.to_vec();
        let mut out = Vec::with_capacity(count);
        let mut draws = 0;
        while out.len() < count {
            draws += 1;
            if draws > MAX_DRAWS {
                return Err(Error::SamplerExhausted(MAX_DRAWS));
            }
            let v = int(self.integer(-SAMPLE_RANGE, SAMPLE_RANGE));
            if all.iter().all(|w| forbidden_multiple(&v, w, c, 2).is_none()) {
                all.push(v.clone());
                out.push(v);
            }
        }
        Ok(out)
    }

    pub fn point(&mut self, a: usize, b: usize, c: &Rational) -> Result<PointConfig> {
        if c == &int(0) {
            return Err(Error::ZeroCoupling);
        }
        let vars = self.fresh(&[], c, 2 * a + 2 * b)?;
        let (t, rest) = vars.split_at(a);
        let (x, rest) = rest.split_at(a);
        let (s, y) = rest.split_at(b);
        PointConfig::new(c.clone(), t.to_vec(), x.to_vec(), s.to_vec(), y.to_vec())
    }

    /// A nonzero coupling from a small set, so that differences of `±c` and
    /// `±2c` actually constrain the draw.
    pub fn coupling(&mut self) -> Rational {
        const CHOICES: [i64; 6] = [1, 2, 3, -1, 5, 7];
        int(CHOICES[self.rng.gen_range(0..CHOICES.len())])
    }

    /// Shuffles `set` in place.
    pub fn shuffle<T>(&mut self, set: &mut [T]) {
        use rand::seq::SliceRandom;
        set.shuffle(&mut self.rng);
    }
}

/// The point drawn by a fresh [`Sampler`] seeded with `seed`.
pub fn sample_point(seed: u64, a: usize, b: usize, c: &Rational) -> Result<PointConfig> {
    Sampler::new(seed).point(a, b, c)
}
