//! Shared fixtures for the criterion benches.

use gruss_core::sharpness::{random_bracket, random_direction, random_metric, sample_admissible};
use gruss_core::{Bracket, Field, Vector};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub struct Fixture {
    pub e: Vector,
    pub x: Vector,
    pub y: Vector,
    pub brx: Bracket,
    pub bry: Bracket,
}

/// Admissible tuple in dimension `dim`, fixed by `seed`.
pub fn fixture(dim: usize, field: Field, seed: u64) -> Fixture {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let metric = random_metric(dim, &mut rng);
    let e = random_direction(&metric, field, &mut rng);
    let brx = random_bracket(field, 1.0, &mut rng);
    let bry = random_bracket(field, 1.0, &mut rng);
    let x = sample_admissible(&e, &brx, field, &mut rng);
    let y = sample_admissible(&e, &bry, field, &mut rng);
    Fixture { e, x, y, brx, bry }
}
