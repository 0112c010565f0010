//! Seeded random streams. Every randomized routine takes its generator from
//! here so that a `(seed, stream)` pair pins the output on every platform.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub use rand_chacha::ChaCha8Rng as TrialRng;

/// Name recorded in reports next to the seed.
pub const RNG_NAME: &str = "ChaCha8Rng";


/// Independent stream `stream` of the generator seeded by `seed`.
pub fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Generator for the chord set of trial `trial`.
pub fn chord_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    trial_rng(seed, 2 * trial)
}

/// Generator for vertex sampling in trial `trial`; disjoint from [`chord_rng`].
pub fn sampling_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    trial_rng(seed, 2 * trial + 1)
}
