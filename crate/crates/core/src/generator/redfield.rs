//! Generic Born-Markov generator for arbitrary coupling switches.
//!
//! Each bath couples through `L_α = c_{1α} σ₁⁻ + c_{2α} σ₂⁻`. In the dressed
//! basis `L_α = L_α(ε₁) + L_α(ε₂)`, where `L_α(ε)` lowers the energy by
//! `ε`. With a flat spectral density only the delta-function part of the
//! one-sided bath correlation transforms survives, giving the emission rate
//! `γ[N_α(ε)+1]` and absorption rate `γN_α(ε)`. The dissipative half is
//!
//! ```text
//! X(ρ) = Σ_α Σ_ω γ(N+1)[L(ω) ρ L† − L† L(ω) ρ] + γN[L(ω)† ρ L − L L(ω)† ρ]
//! ```
//!
//! and the generator is `−i[H_S, ρ] + X(ρ) + X(ρ)†`. The secular form keeps
//! only the products where both frequency components match.

use nalgebra::Matrix4;
use num_complex::Complex64;

use super::{rate_coefficients, Approximation, Generator, GeneratorMeta, Origin, EPS1, EPS2};
use crate::error::GeneratorError;
use crate::linalg::{adjoint_map, commutator, complexify, left_mul, sandwich, Op, Superop};
use crate::model::{eigensystem, sigma_plus, Atom, BathSetup, EigenStructure, SystemParams};

/// Dressed-basis entries below this are treated as structural zeros.
const ZERO_ELEMENT: f64 = 1e-14;

/// Build the generator, rejecting configurations where an atom has no bath.
pub fn build_generator(
    params: &SystemParams,
    baths: &BathSetup,
    approximation: Approximation,
) -> Result<Generator, GeneratorError> {
    let channels = baths.channels();
    if let Some(atom) = channels.uncoupled_atom() {
        return Err(GeneratorError::UncoupledAtom {
            atom: if atom == Atom::One { 1 } else { 2 },
            channels: channels.to_string(),
        });
    }
    build_generator_allowing_uncoupled(params, baths, approximation)
}

/// Same as [`build_generator`] but accepts any channel switches, including
/// an atom without dissipation (whose steady state is then not unique).
pub fn build_generator_allowing_uncoupled(
    params: &SystemParams,
    baths: &BathSetup,
    approximation: Approximation,
) -> Result<Generator, GeneratorError> {
    let eig = eigensystem(params);
    let rates = rate_coefficients(&eig, baths)?;
    let ch = baths.channels();

    let mut half = Superop::zeros();
    for (hot, c1, c2) in [(false, ch.c1a, ch.c2a), (true, ch.c1b, ch.c2b)] {
        if !c1 && !c2 {
            continue;
        }
        let components = split_by_transition(&bath_lowering(&eig, c1, c2))?;
        for w in [EPS1, EPS2] {
            let (emission, absorption) = rates.bath(hot, w);
            let lw = &components[w];
            let lw_dag = lw.adjoint();
            for w2 in [EPS1, EPS2] {
                if approximation.is_secular() && w != w2 {
                    continue;
                }
                let l2 = &components[w2];
                let l2_dag = l2.adjoint();
                half += (sandwich(lw, &l2_dag) - left_mul(&(l2_dag * lw))) * Complex64::new(emission, 0.0);
                if absorption != 0.0 {
                    half += (sandwich(&lw_dag, l2) - left_mul(&(l2 * lw_dag))) * Complex64::new(absorption, 0.0);
                }
            }
        }
    }

    let h = complexify(&eig.dressed_hamiltonian());
    let matrix = commutator(&h) + half + adjoint_map(&half);
    Ok(Generator::from_matrix(
        matrix,
        GeneratorMeta { params: *params, baths: *baths, approximation, origin: Origin::Redfield },
    ))
}

/// `c₁σ₁⁻ + c₂σ₂⁻` in the dressed basis.
fn bath_lowering(eig: &EigenStructure, c1: bool, c2: bool) -> Matrix4<f64> {
    let mut raising = Matrix4::zeros();
    if c1 {
        raising += sigma_plus(Atom::One);
    }
    if c2 {
        raising += sigma_plus(Atom::Two);
    }
    eig.to_dressed(&raising.transpose())
}

/// Split a dressed lowering operator into its `ε₁` and `ε₂` parts.
fn split_by_transition(lowering: &Matrix4<f64>) -> Result<[Op; 2], GeneratorError> {
    let mut parts = [Op::zeros(), Op::zeros()];
    for to in 0..4 {
        for from in 0..4 {
            let x = lowering[(to, from)];
            if x.abs() <= ZERO_ELEMENT {
                continue;
            }
            // dressed labels are 1-based: λ₁ → λ₃ and λ₂ → λ₄ release ε₁,
            // λ₁ → λ₂ and λ₃ → λ₄ release ε₂
            let k = match (from + 1, to + 1) {
                (1, 3) | (2, 4) => EPS1,
                (1, 2) | (3, 4) => EPS2,
                _ => return Err(GeneratorError::UnexpectedTransition { from: from + 1, to: to + 1 }),
            };
            parts[k][(to, from)] = Complex64::new(x, 0.0);
        }
    }
    Ok(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{max_abs, tau};
    use crate::model::Case;

    #[test]
    fn case_a_jump_operators_match_dressed_expansion() {
        // σ₁⁻ = s τ₂₁ + c τ₃₁ + c τ₄₂ − s τ₄₃ and σ₂⁻ = c τ₂₁ − s τ₃₁ + s τ₄₂ + c τ₄₃
        let eig = eigensystem(&SystemParams::from_mean_and_detuning(30.0, 7.0, 2.0).unwrap());
        let (c, s) = (eig.cos_half, eig.sin_half);
        let cx = |x: f64| num_complex::Complex64::new(x, 0.0);
        let a = split_by_transition(&bath_lowering(&eig, true, false)).unwrap();
        assert!(max_abs(&(a[EPS1] - (tau(3, 1) + tau(4, 2)) * cx(c))) < 1e-15);
        assert!(max_abs(&(a[EPS2] - (tau(2, 1) - tau(4, 3)) * cx(s))) < 1e-15);
        let b = split_by_transition(&bath_lowering(&eig, false, true)).unwrap();
        assert!(max_abs(&(b[EPS1] - (tau(4, 2) - tau(3, 1)) * cx(s))) < 1e-15);
        assert!(max_abs(&(b[EPS2] - (tau(2, 1) + tau(4, 3)) * cx(c))) < 1e-15);
    }

    #[test]
    fn rejects_atom_without_bath() {
        let p = SystemParams::new(30.0, 30.0, 2.0).unwrap();
        let ch = "1,1,0,0".parse().unwrap();
        let baths = BathSetup::new(10.0, 60.0, 1.0, ch).unwrap();
        assert!(matches!(
            build_generator(&p, &baths, Approximation::NonSecular),
            Err(GeneratorError::UncoupledAtom { atom: 2, .. })
        ));
        let g = build_generator_allowing_uncoupled(&p, &baths, Approximation::NonSecular).unwrap();
        assert!(g.trace_defect() < 1e-12);
    }

    #[test]
    fn every_case_preserves_trace_and_hermiticity() {
        let p = SystemParams::from_mean_and_detuning(25.0, -4.0, 1.5).unwrap();
        for case in Case::ALL {
            for approx in [Approximation::Secular, Approximation::NonSecular] {
                let g = build_generator(&p, &BathSetup::for_case(case, 7.0, 42.0).unwrap(), approx).unwrap();
                assert!(g.trace_defect() < 1e-12, "{case} {approx:?}");
                assert!(g.hermiticity_defect() < 1e-12, "{case} {approx:?}");
                assert_eq!(g.meta().case(), Some(case));
            }
        }
    }
}
