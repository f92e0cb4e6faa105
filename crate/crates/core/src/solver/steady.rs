use nalgebra::{DMatrix, SMatrix};
use num_complex::Complex64;

use super::density::DensityMatrix;
use crate::error::SolverError;
use crate::generator::Generator;
use crate::linalg::{self, unvectorize, vec_index, vectorize, Op, OpVec, Superop, DIM, ONE, SUPER_DIM, ZERO};

/// Singular values below this fraction of the largest count as zero.
pub const RANK_TOLERANCE: f64 = 1e-10;

/// Largest `|L v|`, relative to the largest singular value, accepted for a null vector.
const NULL_VECTOR_TOLERANCE: f64 = 1e-12;

/// What to do when the generator has more than one stationary state.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum DegeneratePolicy {
    /// Report [`SolverError::DegenerateNullSpace`].
    #[default]
    Reject,
    /// Return the long-time limit reached from `I/4`.
    FromMaximallyMixed,
}

/// Dimension of `ker L`, from the singular values of the 16x16 matrix.
pub fn null_space_dimension(g: &Generator) -> usize {
    let sv = g.matrix().singular_values();
    let cutoff = RANK_TOLERANCE * sv.max();
    sv.iter().filter(|&&s| s <= cutoff).count()
}

/// Solve `L ρ = 0` with `tr ρ = 1` by replacing the `ρ₁₁` row of the
/// vectorised system with the trace functional.
///
/// No rank or positivity check is made; the result is whatever the square
/// system yields, which makes it suitable for comparing solution routes.
pub fn null_space_solution(g: &Generator) -> Result<Op, SolverError> {
    let mut a: Superop = *g.matrix();
    let mut b = OpVec::zeros();
    let row = vec_index(0, 0);
    a.row_mut(row).fill(ZERO);
    for i in 0..DIM {
        a[(row, vec_index(i, i))] = ONE;
    }
    b[row] = ONE;
    let x = a.lu().solve(&b).ok_or(SolverError::Singular)?;
    if x.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
        return Err(SolverError::Singular);
    }
    Ok(unvectorize(&x))
}

/// The unique steady state of `g`.
pub fn steady_state(g: &Generator) -> Result<DensityMatrix, SolverError> {
    let dim = null_space_dimension(g);
    if dim != 1 {
        return Err(SolverError::DegenerateNullSpace { dim });
    }
    DensityMatrix::new(null_space_solution(g)?)
}

/// Orthonormal basis of `ker a`, from the right singular vectors of `a`.
///
/// Right singular vectors are used on purpose: the left ones of a complex
/// SVD can be inaccurate for (near-)zero singular values, so the left null
/// space is obtained as the right null space of `aᴴ`.
fn right_null_basis(a: &Superop) -> Result<DMatrix<Complex64>, SolverError> {
    let svd = a.svd(false, true);
    let v_t = svd.v_t.expect("requested Vᵀ");
    let cutoff = RANK_TOLERANCE * svd.singular_values.max();
    let null: Vec<usize> = (0..SUPER_DIM).filter(|&k| svd.singular_values[k] <= cutoff).collect();
    if null.is_empty() {
        return Err(SolverError::Singular);
    }
    let basis = DMatrix::from_fn(SUPER_DIM, null.len(), |i, j| v_t[(null[j], i)].conj());
    let defect = (0..null.len()).map(|j| (a * basis.column(j)).camax()).fold(0.0, f64::max);
    if defect > NULL_VECTOR_TOLERANCE * svd.singular_values.max() {
        return Err(SolverError::Singular);
    }
    Ok(basis)
}

/// The `t → ∞` limit of `e^{Lt} ρ₀`, also when `ker L` is degenerate.
///
/// Uses the spectral projector `P = R (Wᴴ R)⁻¹ Wᴴ` onto `ker L` along
/// `range L`, where the columns of `R` and `W` span the right and left null
/// spaces. This is the long-time limit whenever every non-zero eigenvalue of
/// `L` has a negative real part.
pub fn steady_state_from(g: &Generator, rho0: &DensityMatrix) -> Result<DensityMatrix, SolverError> {
    let right = right_null_basis(g.matrix())?;
    let left = right_null_basis(&g.matrix().adjoint())?;
    if left.ncols() != right.ncols() {
        return Err(SolverError::Singular);
    }
    let overlap_inv = (left.adjoint() * &right).try_inverse().ok_or(SolverError::Singular)?;
    let v0 = vectorize(rho0.matrix());
    let v0 = DMatrix::from_column_slice(SUPER_DIM, 1, v0.as_slice());
    let limit = right * (overlap_inv * (left.adjoint() * v0));
    let x: OpVec = SMatrix::from_column_slice(limit.as_slice());
    DensityMatrix::new(unvectorize(&x))
}

/// [`steady_state`], falling back on `policy` for a degenerate null space.
pub fn solve(g: &Generator, policy: DegeneratePolicy) -> Result<DensityMatrix, SolverError> {
    match (steady_state(g), policy) {
        (Err(SolverError::DegenerateNullSpace { .. }), DegeneratePolicy::FromMaximallyMixed) => {
            steady_state_from(g, &DensityMatrix::maximally_mixed())
        }
        (result, _) => result,
    }
}

/// `max |L(ρ)|`, the stationarity residual of `ρ`.
pub fn residual(g: &Generator, rho: &Op) -> f64 {
    linalg::max_abs(&g.apply(rho))
}
