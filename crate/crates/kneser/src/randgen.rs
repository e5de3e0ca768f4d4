//! Seeded random point configurations for the verification suites.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::PointConfig;
use crate::rational::{rat, ratio, Rational};

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// n points with integer coordinates uniform in [-1000, 1000], resampled
/// until they are in general position.
pub fn random_general_position_config(rng: &mut ChaCha8Rng, n: usize, d: usize) -> PointConfig {
    loop {
        let points: Vec<Vec<Rational>> = (0..n)
            .map(|_| (0..d).map(|_| rat(rng.gen_range(-1000..=1000))).collect())
            .collect();
        let Ok(cfg) = PointConfig::new(d, points) else {
            continue; // duplicate points; redraw
        };
        if cfg.is_general_position() {
            return cfg;
        }
    }
}

/// n strictly increasing rationals with numerators in [-1000, 1000] and
/// denominators in [1, 50], for moment-curve parameters.
pub fn random_increasing_rationals(rng: &mut ChaCha8Rng, n: usize) -> Vec<Rational> {
    loop {
        let mut ts: Vec<Rational> = (0..n)
            .map(|_| ratio(rng.gen_range(-1000..=1000), rng.gen_range(1..=50)))
            .collect();
        ts.sort();
        ts.dedup();
        if ts.len() == n {
            return ts;
        }
    }
}
