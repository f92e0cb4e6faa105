#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use steadycoh::{BathSetup, Case, SystemParams};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Ω ∈ [20, 50], ξ ∈ [0.5, 5], Δ ∈ [−20, 20]; Ω always exceeds the largest half splitting √500/2.
pub fn random_params(rng: &mut impl Rng) -> SystemParams {
    let omega = rng.random_range(20.0..=50.0);
    let xi = rng.random_range(0.5..=5.0);
    let delta = rng.random_range(-20.0..=20.0);
    SystemParams::from_mean_and_detuning(omega, delta, xi).expect("Ω ≥ 20 exceeds every half splitting in range")
}

/// `T_a, T_b ∈ [0, 100]`.
pub fn random_baths(rng: &mut impl Rng, case: Case) -> BathSetup {
    BathSetup::for_case(case, rng.random_range(0.0..=100.0), rng.random_range(0.0..=100.0)).unwrap()
}
