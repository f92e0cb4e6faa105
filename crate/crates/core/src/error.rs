use thiserror::Error;

use crate::linalg::Op;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("{name} must be finite, got {value}")]
    NonFinite { name: &'static str, value: f64 },
    #[error("inter-atom coupling xi must be > 0, got {xi}")]
    NonPositiveCoupling { xi: f64 },
    #[error(
        "mean frequency Omega = {omega} must exceed sqrt(Delta^2+4xi^2)/2 = {half_splitting} \
         so that both transition energies are positive"
    )]
    NonPositiveTransition { omega: f64, half_splitting: f64 },
    #[error("transition energy must be > 0, got {eps}")]
    NonPositiveEnergy { eps: f64 },
    #[error("temperature {name} must be finite and >= 0, got {value}")]
    InvalidTemperature { name: &'static str, value: f64 },
    #[error("bath rate gamma must be finite and > 0, got {gamma}")]
    NonPositiveRate { gamma: f64 },
    #[error("unknown coupling case {0:?} (expected A, B, C or D)")]
    UnknownCase(String),
    #[error("bad channel switches {0:?} (expected four comma-separated 0/1 values c1a,c1b,c2a,c2b)")]
    BadChannels(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GeneratorError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("atom {atom} has no bath coupling (channels {channels}); pass the uncoupled-atom override to allow it")]
    UncoupledAtom { atom: u8, channels: String },
    #[error("coupling operator has a matrix element between dressed levels {from} -> {to}, which is not a lowering transition")]
    UnexpectedTransition { from: usize, to: usize },
    #[error("the Case {case} table needs channels {case}, got {channels}")]
    CaseMismatch { case: String, channels: String },
    #[error("no closed-form table exists for Case {case}")]
    NoClosedForm { case: String },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SolverError {
    #[error("generator null space has dimension {dim}, expected 1")]
    DegenerateNullSpace { dim: usize },
    #[error("steady-state linear system is singular")]
    Singular,
    #[error("solution is not Hermitian (defect {defect:.3e}); the generator does not preserve Hermiticity")]
    NonHermitian { defect: f64 },
    #[error("state has eigenvalue {min_eigenvalue:.3e} below the positivity tolerance")]
    NotPositive { min_eigenvalue: f64, matrix: Box<Op> },
    #[error("state trace is {trace}, expected 1")]
    BadTrace { trace: f64 },
    #[error("invalid time step: dt = {dt}, t_final = {t_final}")]
    InvalidStep { dt: f64, t_final: f64 },
    #[error("integration became unstable at t = {time} (trace drift {trace_drift:.3e}, Hermiticity drift {hermiticity_drift:.3e})")]
    Unstable { time: f64, trace_drift: f64, hermiticity_drift: f64 },
    #[error("reduced system applies to Case A generators only")]
    NotCaseA,
}

/// Any failure along the parameters → generator → steady state pipeline.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error(transparent)]
    Solver(#[from] SolverError),
}
