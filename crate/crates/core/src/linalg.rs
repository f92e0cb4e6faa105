//! Fixed-size operator and superoperator helpers.
//!
//! Operators on the two-atom space are 4x4 complex matrices. Superoperators
//! act on row-major vectorised operators: the entry `ρ[i][j]` sits at index
//! `4 * i + j`, so `S[(i, j), (k, l)]` is the coefficient of `τ_ik ρ τ_lj`.

use nalgebra::{Matrix4, SMatrix, SVector};
use num_complex::Complex64;

/// Hilbert-space dimension of the two-atom system.
pub const DIM: usize = 4;
/// Dimension of the space of operators.
pub const SUPER_DIM: usize = DIM * DIM;

pub type Op = Matrix4<Complex64>;
pub type Superop = SMatrix<Complex64, SUPER_DIM, SUPER_DIM>;
pub type OpVec = SVector<Complex64, SUPER_DIM>;

pub(crate) const ZERO: Complex64 = Complex64::new(0.0, 0.0);
pub(crate) const ONE: Complex64 = Complex64::new(1.0, 0.0);

#[inline]
pub fn vec_index(row: usize, col: usize) -> usize {
    DIM * row + col
}

pub fn vectorize(op: &Op) -> OpVec {
    OpVec::from_fn(|k, _| op[(k / DIM, k % DIM)])
}

pub fn unvectorize(v: &OpVec) -> Op {
    Op::from_fn(|i, j| v[vec_index(i, j)])
}

/// Transition operator `τ_ij = |λ_i⟩⟨λ_j|`, with dressed labels `1..=4`.
pub fn tau(i: usize, j: usize) -> Op {
    assert!((1..=DIM).contains(&i) && (1..=DIM).contains(&j), "dressed labels run 1..=4");
    let mut m = Op::zeros();
    m[(i - 1, j - 1)] = ONE;
    m
}

/// The map `ρ ↦ left · ρ · right`.
pub fn sandwich(left: &Op, right: &Op) -> Superop {
    let mut s = Superop::zeros();
    for i in 0..DIM {
        for j in 0..DIM {
            let row = vec_index(i, j);
            for k in 0..DIM {
                let a = left[(i, k)];
                if a == ZERO {
                    continue;
                }
                for l in 0..DIM {
                    let b = right[(l, j)];
                    if b != ZERO {
                        s[(row, vec_index(k, l))] += a * b;
                    }
                }
            }
        }
    }
    s
}

/// `ρ ↦ op · ρ`.
pub fn left_mul(op: &Op) -> Superop {
    sandwich(op, &Op::identity())
}

/// `ρ ↦ ρ · op`.
pub fn right_mul(op: &Op) -> Superop {
    sandwich(&Op::identity(), op)
}

/// `ρ ↦ left ρ right + h.c.`, i.e. adds `right† ρ left†`.
pub fn sandwich_hc(left: &Op, right: &Op) -> Superop {
    sandwich(left, right) + sandwich(&right.adjoint(), &left.adjoint())
}

/// Lindblad form `2XρX† − {X†X, ρ}`.
pub fn dissipator(x: &Op) -> Superop {
    let xd = x.adjoint();
    let xdx = xd * x;
    sandwich(x, &xd) * Complex64::new(2.0, 0.0) - left_mul(&xdx) - right_mul(&xdx)
}

/// `ρ ↦ −i[H, ρ]`.
pub fn commutator(h: &Op) -> Superop {
    (left_mul(h) - right_mul(h)) * Complex64::new(0.0, -1.0)
}

/// The superoperator `ρ ↦ (S(ρ†))†`.
///
/// `S + adjoint_map(S)` is the "+ h.c." completion of a dissipator half.
pub fn adjoint_map(s: &Superop) -> Superop {
    let mut out = Superop::zeros();
    for i in 0..DIM {
        for j in 0..DIM {
            for k in 0..DIM {
                for l in 0..DIM {
                    out[(vec_index(i, j), vec_index(l, k))] = s[(vec_index(j, i), vec_index(k, l))].conj();
                }
            }
        }
    }
    out
}

/// Apply a superoperator to an operator.
pub fn apply(s: &Superop, op: &Op) -> Op {
    unvectorize(&(s * vectorize(op)))
}

pub fn max_abs<const R: usize, const C: usize>(m: &SMatrix<Complex64, R, C>) -> f64 {
    m.iter().fold(0.0_f64, |acc, z| acc.max(z.norm()))
}

/// Largest entry of `op − op†`.
pub fn hermiticity_defect(op: &Op) -> f64 {
    max_abs(&(op - op.adjoint()))
}

/// Promote a real matrix to a complex one.
pub fn complexify(m: &Matrix4<f64>) -> Op {
    m.map(|x| Complex64::new(x, 0.0))
}
