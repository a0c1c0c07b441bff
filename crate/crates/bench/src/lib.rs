//! Seeded inputs for the benchmarks.

use conceptnav_core::fca::FormalContext;
use conceptnav_core::DocId;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// A `g` × `m` context with incidence drawn at `density`, fixed by `seed`.
pub fn random_context(seed: u64, g: usize, m: usize, density: f64) -> FormalContext {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let rows = (0..g)
        .map(|_| (0..m).filter(|_| rng.gen_bool(density)).collect())
        .collect();
    FormalContext::new(
        (1..=g as u32).map(DocId).collect(),
        (0..m).map(|j| format!("m{j}")).collect(),
        rows,
    )
    .expect("indices are in range")
}
