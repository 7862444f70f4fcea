//! Random number generation and seed splitting.
//!
//! Every stochastic object is driven by a [`ChaCha12Rng`] created with
//! `SeedableRng::seed_from_u64`. Trials derive their seeds from one master
//! seed: the seed for stream `s` of trial `i` is output number `2i + s + 1`
//! of a SplitMix64 generator started at the master seed. Stream 0 drives
//! the graph sampler and stream 1 the edge weights.

use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

pub const RNG_ALGORITHM: &str = "ChaCha12Rng via SeedableRng::seed_from_u64 (rand_chacha 0.9)";
pub const SEED_SPLITTING: &str =
    "seed(trial i, stream s) = SplitMix64 output 2i+s+1 from state master; s=0 graph, s=1 weights";

pub const GRAPH_STREAM: u64 = 0;
pub const WEIGHT_STREAM: u64 = 1;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

pub type Rng = ChaCha12Rng;

pub fn rng(seed: u64) -> Rng {
    ChaCha12Rng::seed_from_u64(seed)
}

fn splitmix64_mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn derive_seed(master: u64, trial: u64, stream: u64) -> u64 {
    let step = trial.wrapping_mul(2).wrapping_add(stream).wrapping_add(1);
    splitmix64_mix(master.wrapping_add(GOLDEN_GAMMA.wrapping_mul(step)))
}
