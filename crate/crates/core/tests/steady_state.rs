//! Steady-state solution routes checked against each other and against
//! closed forms.

mod common;

use steadycoh::generator::{rate_coefficients, secular_coefficients_case_a, Approximation};
use steadycoh::linalg::max_abs;
use steadycoh::observables::{report, verify_secular_closed_form};
use steadycoh::solver::{
    evolve, null_space_dimension, null_space_solution, reduced_steady_state, residual, steady_state, DensityMatrix,
};
use steadycoh::{build_generator, eigensystem, BathSetup, Case, SystemParams};

/// `|ρ₃₂|` for Case A, non-secular, Ω = 30, ξ = 2, Δ = 0, T_a = 10, T_b = 60,
/// from an independent dense-matrix implementation.
const REFERENCE_COHERENCE: f64 = 0.110_236_097_065_955_44;

fn reference_generator() -> steadycoh::Generator {
    let p = SystemParams::new(30.0, 30.0, 2.0).unwrap();
    build_generator(&p, &BathSetup::for_case(Case::A, 10.0, 60.0).unwrap(), Approximation::NonSecular).unwrap()
}

#[test]
fn reference_point_matches_independent_value_and_rk4() {
    let g = reference_generator();
    let rho = steady_state(&g).unwrap();
    assert!((rho.element(3, 2).norm() - REFERENCE_COHERENCE).abs() < 1e-13);
    let r = report(&rho, &g);
    assert_eq!(r.flux_12, -8.0 * rho.element(3, 2).im);

    let starts = [DensityMatrix::eigenstate(1), DensityMatrix::eigenstate(4), DensityMatrix::maximally_mixed()];
    for rho0 in &starts {
        let ev = evolve(&g, rho0, 1e4, 0.01).unwrap();
        assert!(max_abs(&(ev.state - rho.matrix())) < 1e-8);
    }
}

#[test]
fn fine_step_evolution_keeps_trace_and_hermiticity() {
    let g = reference_generator();
    let ev = evolve(&g, &DensityMatrix::eigenstate(2), 1e4, 1e-3).unwrap();
    assert_eq!(ev.steps, 10_000_000);
    assert!(ev.max_trace_drift <= 1e-9, "{:e}", ev.max_trace_drift);
    assert!(ev.max_hermiticity_drift <= 1e-9, "{:e}", ev.max_hermiticity_drift);
    assert!((ev.state.trace().re - 1.0).abs() <= 1e-9);
}

#[test]
fn secular_evolution_reaches_closed_form() {
    let p = SystemParams::from_mean_and_detuning(30.0, 4.0, 2.0).unwrap();
    let baths = BathSetup::for_case(Case::A, 10.0, 60.0).unwrap();
    let g = build_generator(&p, &baths, Approximation::Secular).unwrap();
    let eig = eigensystem(&p);
    let coeffs = secular_coefficients_case_a(&eig, &rate_coefficients(&eig, &baths).unwrap());
    let limit = evolve(&g, &DensityMatrix::eigenstate(1), 1e4, 0.01).unwrap().density().unwrap();
    assert!(verify_secular_closed_form(&coeffs, &limit).max_delta() < 1e-8);
}

#[test]
fn null_space_solutions_are_stationary_and_secular_ones_diagonal() {
    let mut rng = common::rng(0x5eed_0010);
    for _ in 0..50 {
        let p = common::random_params(&mut rng);
        for case in Case::ALL {
            let baths = common::random_baths(&mut rng, case);
            for approx in [Approximation::Secular, Approximation::NonSecular] {
                let g = build_generator(&p, &baths, approx).unwrap();
                assert_eq!(null_space_dimension(&g), 1, "{case} {approx:?} {p:?}");
                let x = null_space_solution(&g).unwrap();
                assert!(residual(&g, &x) <= 1e-11 * g.norm_max(), "{case} {approx:?}");
                if approx.is_secular() {
                    let rho = DensityMatrix::new(x).unwrap();
                    assert!(rho.max_coherence() < 1e-12, "{case}: {:e}", rho.max_coherence());
                    assert!(rho.min_eigenvalue() >= 0.0);
                }
            }
        }
    }
}

#[test]
fn reduced_system_matches_full_solve() {
    let mut rng = common::rng(0x5eed_0011);
    for _ in 0..60 {
        let p = common::random_params(&mut rng);
        let baths = common::random_baths(&mut rng, Case::A);
        let g = build_generator(&p, &baths, Approximation::NonSecular).unwrap();
        let full = null_space_solution(&g).unwrap();
        match reduced_steady_state(&g) {
            Ok(reduced) => assert!(max_abs(&(reduced.matrix() - full)) < 1e-10),
            Err(steadycoh::SolverError::NotPositive { matrix, .. }) => assert!(max_abs(&(*matrix - full)) < 1e-10),
            Err(e) => panic!("{e}"),
        }
    }
}

#[test]
fn equilibrium_nonsecular_state_is_gibbs() {
    let t = 17.0;
    let p = SystemParams::from_mean_and_detuning(30.0, -6.0, 2.0).unwrap();
    let g = build_generator(&p, &BathSetup::for_case(Case::A, t, t).unwrap(), Approximation::NonSecular).unwrap();
    let rho = steady_state(&g).unwrap();
    assert!(rho.element(3, 2).norm() < 1e-12);
    let e = eigensystem(&p);
    let w = e.lambdas.map(|l| (-l / t).exp());
    let z: f64 = w.iter().sum();
    for (k, pop) in rho.populations().into_iter().enumerate() {
        assert!((pop - w[k] / z).abs() < 1e-12);
    }
}
