//! Closed-form coefficient tables for Cases A and B.
//!
//! Both cases admit a hand-derived master equation written as a sum of
//! fixed dressed-basis "shape" superoperators weighted by real
//! coefficients. This module evaluates those coefficients, assembles the
//! resulting generators, and projects any generator back onto the shapes so
//! the two constructions can be compared term by term.
//!
//! The printed shapes are not linearly independent: some coincide (the `Δ₅`
//! and `Δ₇` terms of Case A are the same map) and the four difference-type
//! shapes of each case satisfy one linear relation. Only the identifiable
//! combinations are kept, each as a single labelled shape, so the projection
//! is well posed.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use super::{rate_coefficients, Approximation, Generator, GeneratorMeta, Origin, RateCoefficients, EPS1, EPS2};
use crate::error::GeneratorError;
use crate::linalg::{commutator, complexify, dissipator, max_abs, sandwich_hc, tau, Op, Superop};
use crate::model::{eigensystem, BathSetup, Case, EigenStructure, SystemParams};

/// Case A coefficients that survive the secular approximation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecularCoefficients {
    /// `Γ₁ … Γ₄`: rates of the four dressed jump pairs.
    pub gamma: [f64; 4],
    /// `Λ₁ … Λ₄`: same-frequency cross terms between the two transitions
    /// sharing an energy.
    pub lambda: [f64; 4],
}

/// Case A cross-frequency coefficients `Δ₁ … Δ₈`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NonSecularCoefficients {
    pub delta: [f64; 8],
}

/// Case B coefficients `Γ′₁ … Γ′₈`, `Λ′₁ … Λ′₄` and `Δ′₁ … Δ′₁₆`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CaseBCoefficients {
    pub gamma: [f64; 8],
    pub lambda: [f64; 4],
    pub delta: [f64; 16],
}

pub fn secular_coefficients_case_a(eig: &EigenStructure, r: &RateCoefficients) -> SecularCoefficients {
    let (c2, s2) = (eig.cos_half.powi(2), eig.sin_half.powi(2));
    let (e1, e2) = (EPS1, EPS2);
    SecularCoefficients {
        gamma: [
            c2 * r.a1[e1] + s2 * r.b1[e1],
            c2 * r.a2[e1] + s2 * r.b2[e1],
            s2 * r.a1[e2] + c2 * r.b1[e2],
            s2 * r.a2[e2] + c2 * r.b2[e2],
        ],
        lambda: [
            c2 * r.a1[e1] - s2 * r.b1[e1],
            c2 * r.a2[e1] - s2 * r.b2[e1],
            -s2 * r.a1[e2] + c2 * r.b1[e2],
            -s2 * r.a2[e2] + c2 * r.b2[e2],
        ],
    }
}

pub fn nonsecular_coefficients_case_a(eig: &EigenStructure, r: &RateCoefficients) -> NonSecularCoefficients {
    let sc = eig.sin_half * eig.cos_half;
    let pairs =
        [(r.a1[EPS1], r.b1[EPS1]), (r.a2[EPS1], r.b2[EPS1]), (r.a1[EPS2], r.b1[EPS2]), (r.a2[EPS2], r.b2[EPS2])];
    let mut delta = [0.0; 8];
    for (k, (a, b)) in pairs.into_iter().enumerate() {
        delta[k] = sc * (a - b);
        delta[k + 4] = sc * (a + b);
    }
    NonSecularCoefficients { delta }
}

pub fn coefficients_case_b(eig: &EigenStructure, r: &RateCoefficients) -> CaseBCoefficients {
    let (c, s) = (eig.cos_half, eig.sin_half);
    let m = (c - s).powi(2);
    let p = (c + s).powi(2);
    let d = c * c - s * s;
    let sc = s * c;
    let (c2, s2) = (c * c, s * s);

    let mut gamma = [0.0; 8];
    let mut lambda = [0.0; 4];
    let mut delta = [0.0; 16];
    // (energy, weight of A in the first/second Γ′ pair, weight of B, sign of B in Λ′)
    for (k, first, second, bw, sign) in [(EPS1, m, p, s2, -1.0), (EPS2, p, m, c2, 1.0)] {
        let o = if k == EPS1 { 0 } else { 2 };
        gamma[o] = first * r.a1[k] + bw * r.b1[k];
        gamma[o + 1] = first * r.a2[k] + bw * r.b2[k];
        gamma[o + 4] = second * r.a1[k] + bw * r.b1[k];
        gamma[o + 5] = second * r.a2[k] + bw * r.b2[k];
        lambda[o] = d * r.a1[k] + sign * bw * r.b1[k];
        lambda[o + 1] = d * r.a2[k] + sign * bw * r.b2[k];

        let o4 = 4 * k;
        delta[o4] = d * r.a1[k] - sc * r.b1[k];
        delta[o4 + 1] = d * r.a1[k] + sc * r.b1[k];
        delta[o4 + 2] = d * r.a2[k] + sc * r.b2[k];
        delta[o4 + 3] = d * r.a2[k] - sc * r.b2[k];
        delta[8 + o4] = p * r.a1[k] + sc * r.b1[k];
        delta[8 + o4 + 1] = m * r.a1[k] - sc * r.b1[k];
        delta[8 + o4 + 2] = p * r.a2[k] + sc * r.b2[k];
        delta[8 + o4 + 3] = m * r.a2[k] - sc * r.b2[k];
    }
    CaseBCoefficients { gamma, lambda, delta }
}

/// A named dissipative shape together with its weight.
#[derive(Debug, Clone, PartialEq)]
pub struct Term {
    pub label: &'static str,
    pub coefficient: f64,
    pub shape: Superop,
}

/// Least-squares weights of a generator's dissipative part on a shape set.
#[derive(Debug, Clone, PartialEq)]
pub struct Projection {
    pub labels: Vec<&'static str>,
    pub values: Vec<f64>,
    /// Largest entry of the part the shapes cannot express.
    pub residual: f64,
}

impl Projection {
    pub fn get(&self, label: &str) -> Option<f64> {
        self.labels.iter().position(|l| *l == label).map(|i| self.values[i])
    }
}

fn t(i: usize, j: usize) -> Op {
    tau(i, j)
}

fn hc(a: (usize, usize), b: (usize, usize)) -> Superop {
    sandwich_hc(&t(a.0, a.1), &t(b.0, b.1))
}

/// `hc` with the identity on one side; `None` stands for `I`.
fn hc_id(a: Option<(usize, usize)>, b: Option<(usize, usize)>) -> Superop {
    let op = |x: Option<(usize, usize)>| x.map_or_else(Op::identity, |(i, j)| t(i, j));
    sandwich_hc(&op(a), &op(b))
}

fn d(i: usize, j: usize) -> Superop {
    dissipator(&t(i, j))
}

fn lambda_shapes() -> [Superop; 4] {
    let two = Complex64::new(2.0, 0.0);
    [hc((4, 2), (1, 3)) * two, hc((2, 4), (3, 1)) * two, hc((2, 1), (3, 4)) * two, hc((1, 2), (4, 3)) * two]
}

fn case_a_terms(eig: &EigenStructure, r: &RateCoefficients, approximation: Approximation) -> Vec<Term> {
    let sec = secular_coefficients_case_a(eig, r);
    let gamma_shapes = [d(3, 1) + d(4, 2), d(1, 3) + d(2, 4), d(2, 1) + d(4, 3), d(1, 2) + d(3, 4)];
    let mut terms = Vec::with_capacity(13);
    for ((label, coefficient), shape) in
        ["Gamma1", "Gamma2", "Gamma3", "Gamma4"].into_iter().zip(sec.gamma).zip(gamma_shapes)
    {
        terms.push(Term { label, coefficient, shape });
    }
    for ((label, coefficient), shape) in
        ["Lambda1", "Lambda2", "Lambda3", "Lambda4"].into_iter().zip(sec.lambda).zip(lambda_shapes())
    {
        terms.push(Term { label, coefficient, shape });
    }
    if approximation.is_secular() {
        return terms;
    }
    let delta = nonsecular_coefficients_case_a(eig, r).delta;
    // The four difference shapes obey S₁ − S₂ − S₃ + S₄ = 0, so S₄ is
    // folded into the other three.
    let shapes = [
        hc_id(Some((3, 2)), None) + hc((3, 1), (1, 2)) - hc((4, 2), (3, 4)),
        hc((1, 2), (3, 1)) - hc_id(None, Some((3, 2))) - hc((3, 4), (4, 2)),
        hc_id(Some((2, 3)), None) + hc((2, 1), (1, 3)) - hc((4, 3), (2, 4)),
        // Δ₅ and Δ₇ share this shape, as do Δ₆ and Δ₈
        hc((4, 2), (1, 2)) - hc((3, 1), (3, 4)),
        hc((1, 2), (4, 2)) - hc((3, 4), (3, 1)),
    ];
    let values =
        [delta[0] - delta[3], delta[1] + delta[3], delta[2] + delta[3], delta[4] + delta[6], delta[5] + delta[7]];
    let labels = ["Delta1-Delta4", "Delta2+Delta4", "Delta3+Delta4", "Delta5+Delta7", "Delta6+Delta8"];
    for ((label, coefficient), shape) in labels.into_iter().zip(values).zip(shapes) {
        terms.push(Term { label, coefficient, shape });
    }
    terms
}

fn case_b_terms(eig: &EigenStructure, r: &RateCoefficients, approximation: Approximation) -> Vec<Term> {
    let co = coefficients_case_b(eig, r);
    let jumps = [(3, 1), (1, 3), (2, 1), (1, 2), (4, 2), (2, 4), (4, 3), (3, 4)];
    let gamma_labels = ["Gamma1'", "Gamma2'", "Gamma3'", "Gamma4'", "Gamma5'", "Gamma6'", "Gamma7'", "Gamma8'"];
    let mut terms = Vec::with_capacity(21);
    for ((label, coefficient), (i, j)) in gamma_labels.into_iter().zip(co.gamma).zip(jumps) {
        terms.push(Term { label, coefficient, shape: d(i, j) });
    }
    let lambda_labels = ["Lambda1'", "Lambda2'", "Lambda3'", "Lambda4'"];
    for ((label, coefficient), shape) in lambda_labels.into_iter().zip(co.lambda).zip(lambda_shapes()) {
        terms.push(Term { label, coefficient, shape });
    }
    if approximation.is_secular() {
        return terms;
    }
    let dl = co.delta;
    let merged = [
        ("Delta1'+Delta5'", dl[0] + dl[4], hc((3, 1), (1, 2))),
        // S₂ + S₄ − S₆ − S₈ = 0 among these four, so S₈ is folded in
        ("Delta2'+Delta8'", dl[1] + dl[7], hc((4, 2), (3, 4)) - hc_id(Some((3, 2)), None)),
        ("Delta3'+Delta7'", dl[2] + dl[6], hc((3, 4), (4, 2))),
        ("Delta4'+Delta8'", dl[3] + dl[7], hc((1, 2), (3, 1)) - hc_id(None, Some((3, 2)))),
        ("Delta6'-Delta8'", dl[5] - dl[7], hc((4, 3), (2, 4)) - hc_id(Some((2, 3)), None)),
        ("Delta9'+Delta13'", dl[8] + dl[12], hc((4, 2), (1, 2))),
        ("Delta10'+Delta14'", dl[9] + dl[13], hc((3, 1), (3, 4))),
        ("Delta11'+Delta15'", dl[10] + dl[14], hc((1, 2), (4, 2))),
        ("Delta12'+Delta16'", dl[11] + dl[15], hc((3, 4), (3, 1))),
    ];
    for (label, coefficient, shape) in merged {
        terms.push(Term { label, coefficient, shape });
    }
    terms
}

/// The closed-form terms for `case` (A or B) at the given parameters.
pub fn closed_form_terms(
    case: Case,
    params: &SystemParams,
    baths: &BathSetup,
    approximation: Approximation,
) -> Result<Vec<Term>, GeneratorError> {
    let eig = eigensystem(params);
    let rates = rate_coefficients(&eig, baths)?;
    match case {
        Case::A => Ok(case_a_terms(&eig, &rates, approximation)),
        Case::B => Ok(case_b_terms(&eig, &rates, approximation)),
        other => Err(GeneratorError::NoClosedForm { case: other.to_string() }),
    }
}

fn closed_form_generator(
    case: Case,
    origin: Origin,
    params: &SystemParams,
    baths: &BathSetup,
    approximation: Approximation,
) -> Result<Generator, GeneratorError> {
    if baths.channels() != case.channels() {
        return Err(GeneratorError::CaseMismatch { case: case.to_string(), channels: baths.channels().to_string() });
    }
    let terms = closed_form_terms(case, params, baths, approximation)?;
    let h = complexify(&eigensystem(params).dressed_hamiltonian());
    let matrix =
        terms.iter().fold(commutator(&h), |acc, term| acc + term.shape * Complex64::new(term.coefficient, 0.0));
    Ok(Generator::from_matrix(matrix, GeneratorMeta { params: *params, baths: *baths, approximation, origin }))
}

/// Case A generator assembled from its coefficient table.
pub fn case_a_generator(
    params: &SystemParams,
    baths: &BathSetup,
    approximation: Approximation,
) -> Result<Generator, GeneratorError> {
    closed_form_generator(Case::A, Origin::CaseATable, params, baths, approximation)
}

/// Case B generator assembled from its coefficient table.
pub fn case_b_generator(
    params: &SystemParams,
    baths: &BathSetup,
    approximation: Approximation,
) -> Result<Generator, GeneratorError> {
    closed_form_generator(Case::B, Origin::CaseBTable, params, baths, approximation)
}

/// Fit the dissipative part of `g` (everything except `−i[H_S, ·]`) onto the
/// shapes of the closed form for `case`, by real least squares.
pub fn project(g: &Generator, case: Case) -> Result<Projection, GeneratorError> {
    let meta = g.meta();
    let terms = closed_form_terms(case, &meta.params, &meta.baths, meta.approximation)?;
    let h = complexify(&eigensystem(&meta.params).dressed_hamiltonian());
    let target = g.matrix() - commutator(&h);

    let n = terms.len();
    let inner = |a: &Superop, b: &Superop| a.iter().zip(b.iter()).map(|(x, y)| (x.conj() * y).re).sum::<f64>();
    let gram = DMatrix::from_fn(n, n, |i, j| inner(&terms[i].shape, &terms[j].shape));
    let rhs = DVector::from_fn(n, |i, _| inner(&terms[i].shape, &target));
    let values = gram.cholesky().expect("closed-form shapes are linearly independent").solve(&rhs);

    let fitted = terms
        .iter()
        .zip(values.iter())
        .fold(Superop::zeros(), |acc, (term, &v)| acc + term.shape * Complex64::new(v, 0.0));
    Ok(Projection {
        labels: terms.iter().map(|t| t.label).collect(),
        values: values.iter().copied().collect(),
        residual: max_abs(&(target - fitted)),
    })
}
