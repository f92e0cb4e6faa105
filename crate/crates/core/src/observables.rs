//! Quantities read off a steady state: populations, the coherence `ρ₃₂`
//! and the inter-atom heat flux.

use num_complex::Complex64;

use crate::error::Error;
use crate::generator::{build_generator, Approximation, Generator, SecularCoefficients};
use crate::model::{BathSetup, SystemParams};
use crate::solver::{self, DegeneratePolicy, DensityMatrix};

/// Tolerance of [`verify_secular_closed_form`].
pub const CLOSED_FORM_TOLERANCE: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SteadyReport {
    /// `ρ₁₁ … ρ₄₄`.
    pub populations: [f64; 4],
    pub rho32: Complex64,
    /// `|ρ₃₂|`.
    pub coherence_abs: f64,
    /// Heat flux from atom 1 to atom 2, `J₁₋₂ = −4ξ Im ρ₃₂`.
    pub flux_12: f64,
    pub positivity_min_eig: f64,
    /// `max |L(ρ)|`.
    pub residual: f64,
}

/// `J₁₋₂ = −4ξ Im ρ₃₂`.
pub fn heat_flux(rho32: Complex64, xi: f64) -> f64 {
    -4.0 * xi * rho32.im
}

pub fn report(rho: &DensityMatrix, g: &Generator) -> SteadyReport {
    let rho32 = rho.element(3, 2);
    SteadyReport {
        populations: rho.populations(),
        rho32,
        coherence_abs: rho32.norm(),
        flux_12: heat_flux(rho32, g.meta().params.xi()),
        positivity_min_eig: rho.min_eigenvalue(),
        residual: solver::residual(g, rho.matrix()),
    }
}

/// Build the generator, solve for the steady state and report on it.
pub fn steady_report(
    params: &SystemParams,
    baths: &BathSetup,
    approximation: Approximation,
    policy: DegeneratePolicy,
) -> Result<(DensityMatrix, SteadyReport), Error> {
    let g = build_generator(params, baths, approximation)?;
    let rho = solver::solve(&g, policy)?;
    let r = report(&rho, &g);
    Ok((rho, r))
}

/// Diagonal secular steady state of Case A:
/// `ρ₁₁ = Γ₂Γ₄/Γ`, `ρ₂₂ = Γ₂Γ₃/Γ`, `ρ₃₃ = Γ₁Γ₄/Γ`, `ρ₄₄ = Γ₁Γ₃/Γ`
/// with `Γ = (Γ₁+Γ₂)(Γ₃+Γ₄)`.
pub fn secular_populations(c: &SecularCoefficients) -> [f64; 4] {
    let [g1, g2, g3, g4] = c.gamma;
    let total = (g1 + g2) * (g3 + g4);
    [g2 * g4 / total, g2 * g3 / total, g1 * g4 / total, g1 * g3 / total]
}

/// Populations compared with [`secular_populations`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClosedFormCheck {
    pub expected: [f64; 4],
    /// `ρ_kk − expected_k`.
    pub deltas: [f64; 4],
}

impl ClosedFormCheck {
    pub fn max_delta(&self) -> f64 {
        self.deltas.iter().fold(0.0, |m, d| m.max(d.abs()))
    }

    pub fn passed(&self) -> bool {
        self.max_delta() <= CLOSED_FORM_TOLERANCE
    }
}

pub fn verify_secular_closed_form(coeffs: &SecularCoefficients, rho: &DensityMatrix) -> ClosedFormCheck {
    let expected = secular_populations(coeffs);
    let got = rho.populations();
    ClosedFormCheck { expected, deltas: std::array::from_fn(|k| got[k] - expected[k]) }
}
