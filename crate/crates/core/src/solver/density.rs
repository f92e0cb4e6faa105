use num_complex::Complex64;

use crate::error::SolverError;
use crate::linalg::{self, Op, DIM, ONE, ZERO};

/// Smallest eigenvalue tolerated before a state is declared non-positive.
///
/// Non-secular generators are not guaranteed to be completely positive, so
/// steady states may carry tiny negative eigenvalues.
pub const POSITIVITY_TOLERANCE: f64 = 1e-8;

/// Largest `|ρ − ρ†|` entry accepted before symmetrising.
pub const HERMITICITY_TOLERANCE: f64 = 1e-10;

/// Largest accepted `|tr ρ − 1|`.
pub const TRACE_TOLERANCE: f64 = 1e-10;

/// A Hermitian, unit-trace 4x4 matrix in the dressed basis whose eigenvalues
/// are at least [`-POSITIVITY_TOLERANCE`](POSITIVITY_TOLERANCE).
#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    m: Op,
}

impl DensityMatrix {
    /// Validate `m`, then replace it by its Hermitian part `(m + m†)/2`.
    pub fn new(m: Op) -> Result<Self, SolverError> {
        let defect = linalg::hermiticity_defect(&m);
        if defect.is_nan() || defect > HERMITICITY_TOLERANCE {
            return Err(SolverError::NonHermitian { defect });
        }
        let m = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
        let trace = m.trace().re;
        if trace.is_nan() || (trace - 1.0).abs() > TRACE_TOLERANCE {
            return Err(SolverError::BadTrace { trace });
        }
        let min_eigenvalue = min_eigenvalue(&m);
        if min_eigenvalue.is_nan() || min_eigenvalue < -POSITIVITY_TOLERANCE {
            return Err(SolverError::NotPositive { min_eigenvalue, matrix: Box::new(m) });
        }
        Ok(Self { m })
    }

    /// The dressed eigenstate projector `|λ_k⟩⟨λ_k|`, `k ∈ 1..=4`.
    pub fn eigenstate(k: usize) -> Self {
        assert!((1..=DIM).contains(&k), "dressed labels run 1..=4");
        let mut m = Op::zeros();
        m[(k - 1, k - 1)] = ONE;
        Self { m }
    }

    /// `I/4`.
    pub fn maximally_mixed() -> Self {
        Self { m: Op::identity() * Complex64::new(0.25, 0.0) }
    }

    pub fn matrix(&self) -> &Op {
        &self.m
    }

    pub fn into_matrix(self) -> Op {
        self.m
    }

    /// `ρ_ij` with 1-based dressed labels, so `element(3, 2)` is `ρ₃₂`.
    pub fn element(&self, i: usize, j: usize) -> Complex64 {
        self.m[(i - 1, j - 1)]
    }

    pub fn populations(&self) -> [f64; 4] {
        populations(&self.m)
    }

    pub fn min_eigenvalue(&self) -> f64 {
        min_eigenvalue(&self.m)
    }

    /// Largest off-diagonal magnitude.
    pub fn max_coherence(&self) -> f64 {
        let mut off = self.m;
        off.fill_diagonal(ZERO);
        linalg::max_abs(&off)
    }
}

pub(crate) fn populations(m: &Op) -> [f64; 4] {
    [m[(0, 0)].re, m[(1, 1)].re, m[(2, 2)].re, m[(3, 3)].re]
}

/// Smallest eigenvalue of the Hermitian part of `m`.
pub fn min_eigenvalue(m: &Op) -> f64 {
    let h = (m + m.adjoint()) * Complex64::new(0.5, 0.0);
    h.symmetric_eigenvalues().min()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::tau;

    #[test]
    fn accepts_and_symmetrises_nearly_hermitian_input() {
        let mut m = Op::identity() * Complex64::new(0.25, 0.0);
        m[(2, 1)] = Complex64::new(0.1, 0.05);
        m[(1, 2)] = Complex64::new(0.1, -0.05 + 1e-12);
        let rho = DensityMatrix::new(m).unwrap();
        assert_eq!(linalg::hermiticity_defect(rho.matrix()), 0.0);
        assert_eq!(rho.element(3, 2).re, 0.1);
        assert!((rho.min_eigenvalue() - (0.25 - 0.05f64.hypot(0.1))).abs() < 1e-12);
    }

    #[test]
    fn rejects_bad_states() {
        let herm =
            DensityMatrix::new(Op::identity() * Complex64::new(0.25, 0.0) + tau(3, 2) * Complex64::new(1e-6, 0.0));
        assert!(matches!(herm, Err(SolverError::NonHermitian { .. })));
        let trace = DensityMatrix::new(Op::identity() * Complex64::new(0.3, 0.0));
        assert!(matches!(trace, Err(SolverError::BadTrace { .. })));
        let mut m = Op::zeros();
        m[(0, 0)] = Complex64::new(1.1, 0.0);
        m[(1, 1)] = Complex64::new(-0.1, 0.0);
        match DensityMatrix::new(m) {
            Err(SolverError::NotPositive { min_eigenvalue, matrix }) => {
                assert!((min_eigenvalue + 0.1).abs() < 1e-15);
                assert_eq!(matrix[(0, 0)].re, 1.1);
            }
            other => panic!("expected NotPositive, got {other:?}"),
        }
    }

    #[test]
    fn presets() {
        assert_eq!(DensityMatrix::eigenstate(1).populations(), [1.0, 0.0, 0.0, 0.0]);
        assert_eq!(DensityMatrix::maximally_mixed().populations(), [0.25; 4]);
        assert_eq!(DensityMatrix::maximally_mixed().max_coherence(), 0.0);
    }
}
