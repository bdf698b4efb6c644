//! Deterministic randomness: one root seed, one independent stream per trial.
//!
//! Every randomized routine in this crate takes `&mut impl Rng` explicitly.
//! Benchmarks and tests derive per-trial generators with [`stream_rng`], so
//! results are bit-reproducible regardless of execution order or thread
//! count.

use rand::SeedableRng;

pub use rand::Rng;
pub use rand_chacha::ChaCha8Rng as SeededRng;

/// Generator for single-stream use; the seed alone identifies the run.
pub fn root_rng(seed: u64) -> SeededRng {
    SeededRng::seed_from_u64(seed)
}

/// Generator for stream `stream` under `seed`. Distinct streams of the same
/// seed never overlap, so parallel trials can draw without coordination.
pub fn stream_rng(seed: u64, stream: u64) -> SeededRng {
    let mut rng = SeededRng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}
