//! Fixed-step RK4 integration of `dρ/dt = L(ρ)`, used as an independent
//! check on the null-space solution.

use num_complex::Complex64;

use super::density::DensityMatrix;
use crate::error::SolverError;
use crate::generator::Generator;
use crate::linalg::{self, unvectorize, vec_index, vectorize, Op, OpVec, DIM, SUPER_DIM};

/// Trace drift above which the state is rescaled to unit trace.
pub const RENORMALIZE_THRESHOLD: f64 = 1e-9;

/// Drift in trace or Hermiticity beyond which the step is declared unstable.
pub const INSTABILITY_THRESHOLD: f64 = 1e-6;

/// Outcome of an integration run.
#[derive(Debug, Clone, PartialEq)]
pub struct Evolution {
    /// Final state, not re-validated (non-secular flows may leave it
    /// marginally non-positive).
    pub state: Op,
    pub steps: usize,
    /// Number of times the trace was reset to 1.
    pub renormalizations: usize,
    /// Largest `|tr ρ − 1|` seen before any renormalisation.
    pub max_trace_drift: f64,
    /// Largest `|ρ − ρ†|` entry seen.
    pub max_hermiticity_drift: f64,
}

impl Evolution {
    pub fn density(&self) -> Result<DensityMatrix, SolverError> {
        DensityMatrix::new(self.state)
    }
}

/// Non-zero entries of the generator, for a cheap matrix-vector product.
struct Sparse {
    entries: Vec<(usize, usize, Complex64)>,
}

impl Sparse {
    fn new(g: &Generator) -> Self {
        let m = g.matrix();
        let mut entries = Vec::new();
        for r in 0..SUPER_DIM {
            for c in 0..SUPER_DIM {
                let z = m[(r, c)];
                if z.re != 0.0 || z.im != 0.0 {
                    entries.push((r, c, z));
                }
            }
        }
        Self { entries }
    }

    fn apply(&self, x: &OpVec) -> OpVec {
        let mut y = OpVec::zeros();
        for &(r, c, z) in &self.entries {
            y[r] += z * x[c];
        }
        y
    }
}

fn trace(x: &OpVec) -> Complex64 {
    (0..DIM).map(|i| x[vec_index(i, i)]).sum()
}

/// Integrate from `rho0` to `t_final` with classical RK4.
///
/// The number of steps is `⌈t_final/dt⌉`, with the step shortened so the
/// run ends exactly at `t_final`.
pub fn evolve(g: &Generator, rho0: &DensityMatrix, t_final: f64, dt: f64) -> Result<Evolution, SolverError> {
    if !dt.is_finite() || dt <= 0.0 || !t_final.is_finite() || t_final < 0.0 {
        return Err(SolverError::InvalidStep { dt, t_final });
    }
    let steps = (t_final / dt).ceil() as usize;
    let h = if steps == 0 { 0.0 } else { t_final / steps as f64 };
    let l = Sparse::new(g);
    let half = Complex64::new(0.5 * h, 0.0);
    let full = Complex64::new(h, 0.0);
    let sixth = Complex64::new(h / 6.0, 0.0);
    let two = Complex64::new(2.0, 0.0);

    let mut x = vectorize(rho0.matrix());
    let mut out = Evolution {
        state: *rho0.matrix(),
        steps,
        renormalizations: 0,
        max_trace_drift: 0.0,
        max_hermiticity_drift: 0.0,
    };
    for n in 0..steps {
        let k1 = l.apply(&x);
        let k2 = l.apply(&(x + k1 * half));
        let k3 = l.apply(&(x + k2 * half));
        let k4 = l.apply(&(x + k3 * full));
        x += (k1 + (k2 + k3) * two + k4) * sixth;

        let tr = trace(&x);
        let trace_drift = (tr - 1.0).norm();
        let state = unvectorize(&x);
        let herm_drift = linalg::hermiticity_defect(&state);
        out.max_trace_drift = out.max_trace_drift.max(trace_drift);
        out.max_hermiticity_drift = out.max_hermiticity_drift.max(herm_drift);
        if trace_drift.is_nan() || herm_drift.is_nan() || trace_drift.max(herm_drift) > INSTABILITY_THRESHOLD {
            return Err(SolverError::Unstable { time: (n + 1) as f64 * h, trace_drift, hermiticity_drift: herm_drift });
        }
        if trace_drift > RENORMALIZE_THRESHOLD {
            x /= tr;
            out.renormalizations += 1;
        }
    }
    out.state = unvectorize(&x);
    Ok(out)
}
