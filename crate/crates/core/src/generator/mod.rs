//! Master-equation generators on 4x4 density matrices.
//!
//! [`build_generator`] assembles the Born-Markov (Redfield) generator for
//! any channel configuration. The [`tables`] submodule holds the printed
//! closed-form coefficient tables for Cases A and B, which the tests use as
//! an independent route to the same superoperator.

mod rates;
mod redfield;
pub mod tables;

pub use rates::{rate_coefficients, RateCoefficients, EPS1, EPS2};
pub use redfield::{build_generator, build_generator_allowing_uncoupled};
pub use tables::{
    coefficients_case_b, nonsecular_coefficients_case_a, secular_coefficients_case_a, CaseBCoefficients,
    NonSecularCoefficients, SecularCoefficients,
};

use crate::linalg::{self, adjoint_map, vec_index, Op, Superop, DIM};
use crate::model::{BathSetup, Case, SystemParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Approximation {
    /// Drop every term oscillating at `e^{±iε₁₂t}`.
    Secular,
    /// Keep the cross-frequency terms as static Schrödinger-picture terms.
    NonSecular,
}

impl Approximation {
    pub fn from_secular_flag(secular: bool) -> Self {
        if secular {
            Approximation::Secular
        } else {
            Approximation::NonSecular
        }
    }

    pub fn is_secular(self) -> bool {
        self == Approximation::Secular
    }
}

/// How a generator was assembled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Origin {
    Redfield,
    CaseATable,
    CaseBTable,
    Custom,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorMeta {
    pub params: SystemParams,
    pub baths: BathSetup,
    pub approximation: Approximation,
    pub origin: Origin,
}

impl GeneratorMeta {
    pub fn case(&self) -> Option<Case> {
        self.baths.channels().case()
    }
}

/// A time-independent linear map `ρ ↦ L(ρ)` on dressed-basis operators.
#[derive(Debug, Clone, PartialEq)]
pub struct Generator {
    matrix: Superop,
    meta: GeneratorMeta,
}

impl Generator {
    pub fn from_matrix(matrix: Superop, meta: GeneratorMeta) -> Self {
        Self { matrix, meta }
    }

    pub fn matrix(&self) -> &Superop {
        &self.matrix
    }

    pub fn meta(&self) -> &GeneratorMeta {
        &self.meta
    }

    pub fn apply(&self, rho: &Op) -> Op {
        linalg::apply(&self.matrix, rho)
    }

    /// Largest entry magnitude of the 16x16 matrix.
    pub fn norm_max(&self) -> f64 {
        linalg::max_abs(&self.matrix)
    }

    /// `max |tr L(E_kl)|` over the 16 matrix units.
    pub fn trace_defect(&self) -> f64 {
        (0..DIM * DIM)
            .map(|col| (0..DIM).map(|i| self.matrix[(vec_index(i, i), col)]).sum::<num_complex::Complex64>().norm())
            .fold(0.0, f64::max)
    }

    /// Largest entry of `L − (ρ ↦ L(ρ†)†)`; zero iff `L(ρ)† = L(ρ†)`.
    pub fn hermiticity_defect(&self) -> f64 {
        linalg::max_abs(&(self.matrix - adjoint_map(&self.matrix)))
    }
}
