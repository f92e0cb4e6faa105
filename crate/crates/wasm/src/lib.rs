//! Browser bindings: a single steady state, a coherence-vs-ΔT curve and a
//! (ΔT, T_a) phase diagram, all at fixed Ω, ξ, Δ.
//!
//! Points whose steady state cannot be computed come back as NaN so one bad
//! grid point does not blank a whole plot. Degenerate null spaces are resolved
//! from the maximally mixed state, as in the command-line tool.

use std::str::FromStr;

use steadycoh::generator::{build_generator, Approximation};
use steadycoh::observables::report;
use steadycoh::solver::{solve, DegeneratePolicy};
use steadycoh::{BathSetup, Case, Error, SteadyReport, SystemParams};
use wasm_bindgen::prelude::*;

/// Model settings shared by every operation.
#[derive(Debug, Clone, Copy)]
pub struct Setup {
    pub case: Case,
    pub approximation: Approximation,
    pub params: SystemParams,
}

impl Setup {
    pub fn new(case: &str, secular: bool, omega: f64, xi: f64, delta: f64) -> Result<Self, String> {
        let case = Case::from_str(case).map_err(|e| e.to_string())?;
        let params = SystemParams::from_mean_and_detuning(omega, delta, xi).map_err(|e| e.to_string())?;
        Ok(Setup { case, approximation: Approximation::from_secular_flag(secular), params })
    }

    pub fn steady(&self, ta: f64, tb: f64) -> Result<SteadyReport, Error> {
        let baths = BathSetup::for_case(self.case, ta, tb)?;
        let g = build_generator(&self.params, &baths, self.approximation)?;
        let rho = solve(&g, DegeneratePolicy::FromMaximallyMixed)?;
        Ok(report(&rho, &g))
    }

    fn coherence(&self, ta: f64, tb: f64) -> f64 {
        self.steady(ta, tb).map_or(f64::NAN, |r| r.coherence_abs)
    }

    /// `|ρ₃₂|` at `steps` evenly spaced `ΔT ∈ [0, delta_t_max]`.
    pub fn curve(&self, ta: f64, delta_t_max: f64, steps: usize) -> Vec<f64> {
        grid(0.0, delta_t_max, steps).map(|dt| self.coherence(ta, ta + dt)).collect()
    }

    /// `|ρ₃₂|` over `ΔT ∈ [0, delta_t_max]` × `T_a ∈ (0, ta_max]`, row-major
    /// with `T_a` varying fastest.
    pub fn phase(&self, delta_t_max: f64, ta_max: f64, n_delta_t: usize, n_ta: usize) -> Vec<f64> {
        let ta: Vec<f64> = cold_grid(ta_max, n_ta).collect();
        grid(0.0, delta_t_max, n_delta_t).flat_map(|dt| ta.iter().map(move |&t| self.coherence(t, t + dt))).collect()
    }
}

/// `steps` evenly spaced values from `lo` to `hi` inclusive.
pub fn grid(lo: f64, hi: f64, steps: usize) -> impl Iterator<Item = f64> {
    let span = if steps > 1 { (hi - lo) / (steps - 1) as f64 } else { 0.0 };
    (0..steps).map(move |k| lo + span * k as f64)
}

/// `n` values `ta_max·k/n`, `k = 1..=n`: the cold-bath axis excludes zero.
pub fn cold_grid(ta_max: f64, n: usize) -> impl Iterator<Item = f64> {
    (1..=n).map(move |k| ta_max * k as f64 / n as f64)
}

fn js_error(e: impl std::fmt::Display) -> JsError {
    JsError::new(&e.to_string())
}

/// One steady state as seen from JavaScript.
#[wasm_bindgen]
pub struct Point {
    report: SteadyReport,
}

#[wasm_bindgen]
impl Point {
    /// `[ρ₁₁, ρ₂₂, ρ₃₃, ρ₄₄]` in the dressed basis.
    #[wasm_bindgen(getter)]
    pub fn populations(&self) -> Vec<f64> {
        self.report.populations.to_vec()
    }

    #[wasm_bindgen(getter, js_name = rho32Re)]
    pub fn rho32_re(&self) -> f64 {
        self.report.rho32.re
    }

    #[wasm_bindgen(getter, js_name = rho32Im)]
    pub fn rho32_im(&self) -> f64 {
        self.report.rho32.im
    }

    #[wasm_bindgen(getter)]
    pub fn coherence(&self) -> f64 {
        self.report.coherence_abs
    }

    /// Heat flux `J₁₋₂ = −4ξ Im ρ₃₂`.
    #[wasm_bindgen(getter)]
    pub fn flux(&self) -> f64 {
        self.report.flux_12
    }

    #[wasm_bindgen(getter, js_name = minEigenvalue)]
    pub fn min_eigenvalue(&self) -> f64 {
        self.report.positivity_min_eig
    }

    #[wasm_bindgen(getter)]
    pub fn residual(&self) -> f64 {
        self.report.residual
    }
}

/// Steady state at `(T_a, T_b)`.
#[wasm_bindgen(js_name = steadyState)]
pub fn steady_state(
    case: &str,
    secular: bool,
    omega: f64,
    xi: f64,
    delta: f64,
    ta: f64,
    tb: f64,
) -> Result<Point, JsError> {
    let setup = Setup::new(case, secular, omega, xi, delta).map_err(js_error)?;
    setup.steady(ta, tb).map(|report| Point { report }).map_err(js_error)
}

/// `|ρ₃₂|` against `ΔT ∈ [0, delta_t_max]` at fixed `T_a`.
#[wasm_bindgen(js_name = coherenceCurve)]
#[allow(clippy::too_many_arguments)]
pub fn coherence_curve(
    case: &str,
    secular: bool,
    omega: f64,
    xi: f64,
    delta: f64,
    ta: f64,
    delta_t_max: f64,
    steps: usize,
) -> Result<Vec<f64>, JsError> {
    Ok(Setup::new(case, secular, omega, xi, delta).map_err(js_error)?.curve(ta, delta_t_max, steps))
}

/// `|ρ₃₂|` on an `n_delta_t × n_ta` grid, `T_a` fastest.
#[wasm_bindgen(js_name = phaseDiagram)]
#[allow(clippy::too_many_arguments)]
pub fn phase_diagram(
    case: &str,
    secular: bool,
    omega: f64,
    xi: f64,
    delta: f64,
    delta_t_max: f64,
    ta_max: f64,
    n_delta_t: usize,
    n_ta: usize,
) -> Result<Vec<f64>, JsError> {
    let setup = Setup::new(case, secular, omega, xi, delta).map_err(js_error)?;
    Ok(setup.phase(delta_t_max, ta_max, n_delta_t, n_ta))
}
