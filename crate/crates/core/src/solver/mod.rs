//! Steady states and time evolution.

mod density;
mod evolve;
mod reduced;
mod steady;

pub use density::{min_eigenvalue, DensityMatrix, HERMITICITY_TOLERANCE, POSITIVITY_TOLERANCE, TRACE_TOLERANCE};
pub use evolve::{evolve, Evolution, INSTABILITY_THRESHOLD, RENORMALIZE_THRESHOLD};
pub use reduced::{reduced_steady_state, reduced_steady_state_case_a, Matrix6, ReducedSystem, Vector6};
pub use steady::{
    null_space_dimension, null_space_solution, residual, solve, steady_state, steady_state_from, DegeneratePolicy,
    RANK_TOLERANCE,
};
