//! Seeded random streams.
//!
//! Every random draw in the crate goes through [`substream`], which mixes a
//! user seed with a list of stream indices using SplitMix64 and seeds a
//! `ChaCha8Rng` from the result. Two streams with different index paths are
//! independent, and the same `(seed, path)` always replays the same values.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type StreamRng = ChaCha8Rng;

/// One SplitMix64 step.
pub fn splitmix64(state: u64) -> u64 {
    let mut z = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn derive_seed(seed: u64, path: &[u64]) -> u64 {
    path.iter().fold(splitmix64(seed), |acc, &ix| {
        splitmix64(acc ^ splitmix64(ix))
    })
}

pub fn substream(seed: u64, path: &[u64]) -> StreamRng {
    ChaCha8Rng::seed_from_u64(derive_seed(seed, path))
}
