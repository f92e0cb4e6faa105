use crate::error::ModelError;
use crate::model::{thermal_occupation, BathSetup, EigenStructure};

/// Index of `ε₁` in the per-energy arrays.
pub const EPS1: usize = 0;
/// Index of `ε₂` in the per-energy arrays.
pub const EPS2: usize = 1;

/// Emission and absorption rates of both baths at `ε₁` and `ε₂`.
///
/// `a1[k] = γ[N_a(ε_k)+1]`, `a2[k] = γN_a(ε_k)` and likewise `b1`, `b2` for
/// bath b.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateCoefficients {
    pub gamma: f64,
    pub a1: [f64; 2],
    pub a2: [f64; 2],
    pub b1: [f64; 2],
    pub b2: [f64; 2],
}

pub fn rate_coefficients(eig: &EigenStructure, baths: &BathSetup) -> Result<RateCoefficients, ModelError> {
    let gamma = baths.gamma();
    let energies = [eig.eps1, eig.eps2];
    let mut r = RateCoefficients { gamma, a1: [0.0; 2], a2: [0.0; 2], b1: [0.0; 2], b2: [0.0; 2] };
    for (k, &eps) in energies.iter().enumerate() {
        let na = thermal_occupation(eps, baths.ta())?;
        let nb = thermal_occupation(eps, baths.tb())?;
        r.a1[k] = gamma * (na + 1.0);
        r.a2[k] = gamma * na;
        r.b1[k] = gamma * (nb + 1.0);
        r.b2[k] = gamma * nb;
    }
    Ok(r)
}

impl RateCoefficients {
    /// `(emission, absorption)` for bath a (`false`) or b (`true`) at energy index `k`.
    pub(crate) fn bath(&self, hot: bool, k: usize) -> (f64, f64) {
        if hot {
            (self.b1[k], self.b2[k])
        } else {
            (self.a1[k], self.a2[k])
        }
    }
}
