use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Resource caps and the pseudo-random seed shared by all computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    /// Largest group order that may be enumerated element by element.
    pub max_enum: u128,
    /// Seed for every randomized step; results are reproducible per seed.
    pub seed: u64,
    /// Largest domain an induced action (tuples, product action, ...) may have.
    pub max_action_degree: usize,
    /// Largest field order `p^k` accepted by [`crate::field::Field::new`].
    pub max_field_order: u128,
    /// Random attempts before a p-element search falls back to enumeration.
    pub p_element_attempts: u32,
    /// Bound on `q^m` in the number-theory checks.
    pub max_int: u128,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            max_enum: 1_000_000,
            seed: 0,
            max_action_degree: 1_000_000,
            max_field_order: 1 << 20,
            p_element_attempts: 512,
            max_int: (1u128 << 63) - 1,
        }
    }
}

impl Config {
    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    /// A generator derived from the seed and a per-call-site salt.
    pub fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ salt.wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }
}
