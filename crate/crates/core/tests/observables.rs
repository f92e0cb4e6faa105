//! Coherence and flux behaviour across the figure parameter ranges.

use steadycoh::generator::Approximation;
use steadycoh::observables::steady_report;
use steadycoh::{BathSetup, Case, DegeneratePolicy, SteadyReport, SystemParams};

fn case_a(delta: f64, ta: f64, delta_t: f64) -> SteadyReport {
    let p = SystemParams::from_mean_and_detuning(30.0, delta, 2.0).unwrap();
    let baths = BathSetup::for_case(Case::A, ta, ta + delta_t).unwrap();
    steady_report(&p, &baths, Approximation::NonSecular, DegeneratePolicy::Reject).unwrap().1
}

#[test]
fn resonance_dominates_detuned_curves() {
    for delta_t in [20.0, 50.0, 80.0] {
        let on = case_a(0.0, 10.0, delta_t).coherence_abs;
        for delta in [-20.0, -10.0, 10.0, 20.0] {
            let off = case_a(delta, 10.0, delta_t).coherence_abs;
            assert!(on > off, "ΔT = {delta_t}, Δ = {delta}: {on} vs {off}");
        }
    }
}

#[test]
fn no_temperature_difference_no_coherence() {
    for case in Case::ALL {
        for ta in [0.5, 3.0, 10.0, 40.0] {
            let p = SystemParams::new(30.0, 30.0, 2.0).unwrap();
            let baths = BathSetup::for_case(case, ta, ta).unwrap();
            let (_, r) =
                steady_report(&p, &baths, Approximation::NonSecular, DegeneratePolicy::FromMaximallyMixed).unwrap();
            assert!(r.coherence_abs < 1e-12, "{case} Ta = {ta}: {:e}", r.coherence_abs);
            assert_eq!(r.flux_12, -8.0 * r.rho32.im);
        }
    }
}

#[test]
fn flux_runs_from_atom_two_to_atom_one_when_bath_b_is_hotter() {
    // J₁₋₂ < 0 throughout: with bath b (coupled to atom 2) hotter, heat
    // flows from atom 2 into atom 1.
    for delta in [-10.0, 0.0, 10.0] {
        for ta in [1.0, 5.0, 10.0, 20.0] {
            for delta_t in [5.0, 25.0, 50.0, 100.0] {
                let r = case_a(delta, ta, delta_t);
                assert!(r.flux_12 < 0.0, "Δ = {delta}, Ta = {ta}, ΔT = {delta_t}: {}", r.flux_12);
            }
        }
    }
}

#[test]
fn collective_coupling_leaves_no_coherence() {
    let p = SystemParams::new(30.0, 30.0, 2.0).unwrap();
    for (ta, delta_t) in [(0.5, 10.0), (10.0, 50.0), (20.0, 100.0)] {
        let baths = BathSetup::for_case(Case::D, ta, ta + delta_t).unwrap();
        let (_, r) =
            steady_report(&p, &baths, Approximation::NonSecular, DegeneratePolicy::FromMaximallyMixed).unwrap();
        assert!(r.coherence_abs < 1e-10);
        assert!(r.flux_12.abs() < 1e-9);
    }
}
