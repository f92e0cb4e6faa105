//! The 6x6 population/coherence system of the non-secular Case A generator.
//!
//! In Case A the non-secular terms couple the four populations only to
//! `ρ₃₂` and `ρ₂₃`, so the stationary condition closes on
//! `X = [ρ₁₁, ρ₂₂, ρ₃₃, ρ₄₄, ρ₃₂, ρ₂₃]`.

use nalgebra::{SMatrix, SVector};
use num_complex::Complex64;

use super::density::DensityMatrix;
use crate::error::SolverError;
use crate::generator::{
    nonsecular_coefficients_case_a, rate_coefficients, secular_coefficients_case_a, Generator, NonSecularCoefficients,
    SecularCoefficients,
};
use crate::linalg::{Op, ONE, ZERO};
use crate::model::{eigensystem, Case, EigenStructure};

pub type Matrix6 = SMatrix<Complex64, 6, 6>;
pub type Vector6 = SVector<Complex64, 6>;

#[derive(Debug, Clone, PartialEq)]
pub struct ReducedSystem {
    /// `dX/dt = M X`.
    pub m: Matrix6,
    /// `μ = iε₁₂ − Γ₁₂ − Γ₃₄`, the diagonal rate of `ρ₃₂`.
    pub mu: Complex64,
}

impl ReducedSystem {
    pub fn new(sec: &SecularCoefficients, nonsec: &NonSecularCoefficients, eig: &EigenStructure) -> Self {
        let [g1, g2, g3, g4] = sec.gamma;
        let [d1, d2, d3, d4, ..] = nonsec.delta;
        let mu = Complex64::new(-(g1 + g2 + g3 + g4), eig.eps12);
        let r = |x: f64| Complex64::new(x, 0.0);
        let (d13, d24, d14b, d32b) = (r(d1 + d3), r(d2 + d4), r(d1 - d4), r(d3 - d2));
        let z = ZERO;
        #[rustfmt::skip]
        let m = Matrix6::from_row_slice(&[
            r(-2.0 * (g1 + g3)), r(2.0 * g4),          r(2.0 * g2),          z,                    d24,  d24,
            r(2.0 * g3),         r(-2.0 * (g1 + g4)),  z,                    r(2.0 * g2),          d32b, d32b,
            r(2.0 * g1),         z,                    r(-2.0 * (g2 + g3)),  r(2.0 * g4),          d14b, d14b,
            z,                   r(2.0 * g1),          r(2.0 * g3),          r(-2.0 * (g2 + g4)),  -d13, -d13,
            d13,                 d14b,                 d32b,                 -d24,                 mu,   z,
            d13,                 d14b,                 d32b,                 -d24,                 z,    mu.conj(),
        ]);
        Self { m, mu }
    }

    /// Solve `M X = 0` with `ρ₁₁ + ρ₂₂ + ρ₃₃ + ρ₄₄ = 1` (replacing the first row).
    pub fn solve(&self) -> Result<Vector6, SolverError> {
        let mut a = self.m;
        a.row_mut(0).copy_from_slice(&[ONE, ONE, ONE, ONE, ZERO, ZERO]);
        let mut b = Vector6::zeros();
        b[0] = ONE;
        a.lu().solve(&b).ok_or(SolverError::Singular)
    }
}

/// Steady state from the reduced system, embedded in a 4x4 matrix whose
/// other coherences are zero.
pub fn reduced_steady_state_case_a(
    sec: &SecularCoefficients,
    nonsec: &NonSecularCoefficients,
    eig: &EigenStructure,
) -> Result<DensityMatrix, SolverError> {
    let x = ReducedSystem::new(sec, nonsec, eig).solve()?;
    let mut m = Op::zeros();
    for k in 0..4 {
        m[(k, k)] = x[k];
    }
    m[(2, 1)] = x[4];
    m[(1, 2)] = x[5];
    DensityMatrix::new(m)
}

/// [`reduced_steady_state_case_a`] at the parameters a Case A generator was built with.
pub fn reduced_steady_state(g: &Generator) -> Result<DensityMatrix, SolverError> {
    let meta = g.meta();
    if meta.case() != Some(Case::A) {
        return Err(SolverError::NotCaseA);
    }
    let eig = eigensystem(&meta.params);
    let rates = rate_coefficients(&eig, &meta.baths).expect("generator parameters were validated at construction");
    let nonsec = if meta.approximation.is_secular() {
        NonSecularCoefficients { delta: [0.0; 8] }
    } else {
        nonsecular_coefficients_case_a(&eig, &rates)
    };
    reduced_steady_state_case_a(&secular_coefficients_case_a(&eig, &rates), &nonsec, &eig)
}
