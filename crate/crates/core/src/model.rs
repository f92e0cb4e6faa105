//! System parameters, the dressed eigenstructure of the two-atom
//! Hamiltonian, and the bath configuration.
//!
//! Energies and temperatures are in units of the bath coupling rate γ, with
//! `ħ = k_B = 1`. The product basis is ordered `{|ee⟩, |eg⟩, |ge⟩, |gg⟩}`.

use std::f64::consts::FRAC_1_SQRT_2;
use std::fmt;
use std::str::FromStr;

use nalgebra::Matrix4;

use crate::error::ModelError;

/// Bare atomic frequencies and the dipole-dipole coupling.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    omega1: f64,
    omega2: f64,
    xi: f64,
}

impl SystemParams {
    pub fn new(omega1: f64, omega2: f64, xi: f64) -> Result<Self, ModelError> {
        for (name, v) in [("omega1", omega1), ("omega2", omega2), ("xi", xi)] {
            if !v.is_finite() {
                return Err(ModelError::NonFinite { name, value: v });
            }
        }
        if xi <= 0.0 {
            return Err(ModelError::NonPositiveCoupling { xi });
        }
        let p = Self { omega1, omega2, xi };
        let half_split = p.half_splitting();
        let omega = p.mean_frequency();
        if omega <= half_split {
            return Err(ModelError::NonPositiveTransition { omega, half_splitting: half_split });
        }
        Ok(p)
    }

    /// Build from the mean frequency `Ω = (ω₁+ω₂)/2` and detuning `Δ = ω₁−ω₂`.
    pub fn from_mean_and_detuning(omega: f64, delta: f64, xi: f64) -> Result<Self, ModelError> {
        Self::new(omega + 0.5 * delta, omega - 0.5 * delta, xi)
    }

    pub fn omega1(&self) -> f64 {
        self.omega1
    }

    pub fn omega2(&self) -> f64 {
        self.omega2
    }

    pub fn xi(&self) -> f64 {
        self.xi
    }

    pub fn mean_frequency(&self) -> f64 {
        0.5 * (self.omega1 + self.omega2)
    }

    pub fn detuning(&self) -> f64 {
        self.omega1 - self.omega2
    }

    /// `√(Δ²+4ξ²)/2`, the energy of `|λ₂⟩`.
    fn half_splitting(&self) -> f64 {
        0.5 * self.detuning().hypot(2.0 * self.xi)
    }

    /// `H_S` in the product basis.
    pub fn hamiltonian(&self) -> Matrix4<f64> {
        let omega = self.mean_frequency();
        let half_delta = 0.5 * self.detuning();
        let mut h = Matrix4::from_diagonal(&[omega, half_delta, -half_delta, -omega].into());
        h[(1, 2)] = self.xi;
        h[(2, 1)] = self.xi;
        h
    }
}

/// Which atom an operator refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Atom {
    One,
    Two,
}

/// `σ_i⁺ = |e⟩⟨g|` on one atom, in the product basis.
pub fn sigma_plus(atom: Atom) -> Matrix4<f64> {
    let mut m = Matrix4::zeros();
    match atom {
        // |ge⟩ → |ee⟩, |gg⟩ → |eg⟩
        Atom::One => {
            m[(0, 2)] = 1.0;
            m[(1, 3)] = 1.0;
        }
        // |eg⟩ → |ee⟩, |gg⟩ → |ge⟩
        Atom::Two => {
            m[(0, 1)] = 1.0;
            m[(2, 3)] = 1.0;
        }
    }
    m
}

/// Closed-form eigenstructure of `H_S`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenStructure {
    pub omega: f64,
    pub delta: f64,
    /// Mixing angle with `cot θ = Δ/2ξ`, on the branch `θ ∈ (0, π)`.
    pub theta: f64,
    /// `cos(θ/2)`.
    pub cos_half: f64,
    /// `sin(θ/2)`.
    pub sin_half: f64,
    /// `λ₁ … λ₄`, descending.
    pub lambdas: [f64; 4],
    /// Columns are `|λ₁⟩ … |λ₄⟩` in the product basis.
    pub eigvecs: Matrix4<f64>,
    /// `ε₁ = λ₁−λ₃ = λ₂−λ₄`.
    pub eps1: f64,
    /// `ε₂ = λ₁−λ₂ = λ₃−λ₄`.
    pub eps2: f64,
    /// `ε₁₂ = ε₁−ε₂`.
    pub eps12: f64,
}

impl EigenStructure {
    /// The dressed-basis form of a product-basis operator, `U^T A U`.
    pub fn to_dressed(&self, a: &Matrix4<f64>) -> Matrix4<f64> {
        self.eigvecs.transpose() * a * self.eigvecs
    }

    /// `H_S` in the dressed basis, `diag(λ₁, …, λ₄)`.
    pub fn dressed_hamiltonian(&self) -> Matrix4<f64> {
        Matrix4::from_diagonal(&self.lambdas.into())
    }
}

pub fn eigensystem(p: &SystemParams) -> EigenStructure {
    let omega = p.mean_frequency();
    let delta = p.detuning();
    let split = delta.hypot(2.0 * p.xi);
    let l2 = 0.5 * split;

    // Half-angle formulas, each branch picking the cancellation-free root.
    // sin θ = 2ξ/split > 0 puts θ in (0, π).
    let cos_theta = delta / split;
    let sin_theta = 2.0 * p.xi / split;
    let (c, s) = if delta == 0.0 {
        (FRAC_1_SQRT_2, FRAC_1_SQRT_2)
    } else if delta > 0.0 {
        let c = (0.5 * (1.0 + cos_theta)).sqrt();
        (c, 0.5 * sin_theta / c)
    } else {
        let s = (0.5 * (1.0 - cos_theta)).sqrt();
        (0.5 * sin_theta / s, s)
    };
    let theta = (2.0 * p.xi).atan2(delta);

    #[rustfmt::skip]
    let eigvecs = Matrix4::new(
        1.0, 0.0, 0.0, 0.0,
        0.0,   c,  -s, 0.0,
        0.0,   s,   c, 0.0,
        0.0, 0.0, 0.0, 1.0,
    );

    EigenStructure {
        omega,
        delta,
        theta,
        cos_half: c,
        sin_half: s,
        lambdas: [omega, l2, -l2, -omega],
        eigvecs,
        eps1: omega + l2,
        eps2: omega - l2,
        eps12: split,
    }
}

/// Bose occupation `1/(e^{ε/T} − 1)`, defined as 0 at `T = 0`.
pub fn thermal_occupation(eps: f64, temperature: f64) -> Result<f64, ModelError> {
    if !eps.is_finite() || eps <= 0.0 {
        return Err(ModelError::NonPositiveEnergy { eps });
    }
    if !temperature.is_finite() || temperature < 0.0 {
        return Err(ModelError::InvalidTemperature { name: "T", value: temperature });
    }
    if temperature == 0.0 {
        return Ok(0.0);
    }
    Ok(1.0 / (eps / temperature).exp_m1())
}

/// Coupling switches `c_iα` between atom `i` and bath `α`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Channels {
    pub c1a: bool,
    pub c1b: bool,
    pub c2a: bool,
    pub c2b: bool,
}

impl Channels {
    pub const fn new(c1a: bool, c1b: bool, c2a: bool, c2b: bool) -> Self {
        Self { c1a, c1b, c2a, c2b }
    }

    /// Switch order `(c1a, c1b, c2a, c2b)`.
    pub fn as_array(&self) -> [bool; 4] {
        [self.c1a, self.c1b, self.c2a, self.c2b]
    }

    pub fn case(&self) -> Option<Case> {
        Case::ALL.into_iter().find(|c| c.channels() == *self)
    }

    /// First atom with no bath at all, if any.
    pub fn uncoupled_atom(&self) -> Option<Atom> {
        if !self.c1a && !self.c1b {
            Some(Atom::One)
        } else if !self.c2a && !self.c2b {
            Some(Atom::Two)
        } else {
            None
        }
    }
}

impl fmt::Display for Channels {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.as_array().map(u8::from);
        write!(f, "{a},{b},{c},{d}")
    }
}

impl FromStr for Channels {
    type Err = ModelError;

    /// Parses `"c1a,c1b,c2a,c2b"` with each switch `0` or `1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bits: Vec<&str> = s.split(',').map(str::trim).collect();
        let parse = |t: &str| match t {
            "0" => Ok(false),
            "1" => Ok(true),
            _ => Err(ModelError::BadChannels(s.to_string())),
        };
        match bits.as_slice() {
            [a, b, c, d] => Ok(Self::new(parse(a)?, parse(b)?, parse(c)?, parse(d)?)),
            _ => Err(ModelError::BadChannels(s.to_string())),
        }
    }
}

/// The four coupling configurations studied.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case {
    /// Each atom has its own bath.
    A,
    /// Atom 2 also couples to the cold bath.
    B,
    /// Atom 1 also couples to the hot bath.
    C,
    /// Both atoms couple to both baths.
    D,
}

impl Case {
    pub const ALL: [Case; 4] = [Case::A, Case::B, Case::C, Case::D];

    pub const fn channels(self) -> Channels {
        match self {
            Case::A => Channels::new(true, false, false, true),
            Case::B => Channels::new(true, false, true, true),
            Case::C => Channels::new(true, true, false, true),
            Case::D => Channels::new(true, true, true, true),
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Case::A => "A",
            Case::B => "B",
            Case::C => "C",
            Case::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for Case {
    type Err = ModelError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "A" | "a" => Ok(Case::A),
            "B" | "b" => Ok(Case::B),
            "C" | "c" => Ok(Case::C),
            "D" | "d" => Ok(Case::D),
            other => Err(ModelError::UnknownCase(other.to_string())),
        }
    }
}

/// Bath temperatures, the shared flat rate γ and the coupling switches.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BathSetup {
    ta: f64,
    tb: f64,
    gamma: f64,
    channels: Channels,
}

impl BathSetup {
    pub fn new(ta: f64, tb: f64, gamma: f64, channels: Channels) -> Result<Self, ModelError> {
        for (name, t) in [("Ta", ta), ("Tb", tb)] {
            if !t.is_finite() || t < 0.0 {
                return Err(ModelError::InvalidTemperature { name, value: t });
            }
        }
        if !gamma.is_finite() || gamma <= 0.0 {
            return Err(ModelError::NonPositiveRate { gamma });
        }
        Ok(Self { ta, tb, gamma, channels })
    }

    /// Unit rate, one of the four preset cases.
    pub fn for_case(case: Case, ta: f64, tb: f64) -> Result<Self, ModelError> {
        Self::new(ta, tb, 1.0, case.channels())
    }

    pub fn ta(&self) -> f64 {
        self.ta
    }

    pub fn tb(&self) -> f64 {
        self.tb
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn channels(&self) -> Channels {
        self.channels
    }

    /// `Δ_T = T_b − T_a`.
    pub fn delta_t(&self) -> f64 {
        self.tb - self.ta
    }
}
