//! The generic builder against the closed-form Case A and Case B tables.

mod common;

use steadycoh::generator::tables::{case_a_generator, case_b_generator, closed_form_terms, project};
use steadycoh::generator::{build_generator, Approximation};
use steadycoh::linalg::max_abs;
use steadycoh::Case;

const DRAWS: usize = 120;
const APPROXIMATIONS: [Approximation; 2] = [Approximation::Secular, Approximation::NonSecular];

#[test]
fn generic_builder_equals_closed_forms_entrywise() {
    let mut rng = common::rng(0x5eed_0001);
    let mut worst = 0.0_f64;
    for _ in 0..DRAWS {
        let p = common::random_params(&mut rng);
        for case in [Case::A, Case::B] {
            let baths = common::random_baths(&mut rng, case);
            for approx in APPROXIMATIONS {
                let generic = build_generator(&p, &baths, approx).unwrap();
                let table = match case {
                    Case::A => case_a_generator(&p, &baths, approx),
                    _ => case_b_generator(&p, &baths, approx),
                }
                .unwrap();
                let diff = max_abs(&(generic.matrix() - table.matrix()));
                assert!(diff < 1e-12, "{case} {approx:?} {p:?} {baths:?}: {diff:e}");
                worst = worst.max(diff);
            }
        }
    }
    println!("largest entrywise difference: {worst:e}");
}

#[test]
fn projected_coefficients_match_tables() {
    let mut rng = common::rng(0x5eed_0002);
    for _ in 0..DRAWS {
        let p = common::random_params(&mut rng);
        for case in [Case::A, Case::B] {
            let baths = common::random_baths(&mut rng, case);
            for approx in APPROXIMATIONS {
                let g = build_generator(&p, &baths, approx).unwrap();
                let proj = project(&g, case).unwrap();
                assert!(proj.residual < 1e-12, "{case} {approx:?}: unexplained part {:e}", proj.residual);
                for term in closed_form_terms(case, &p, &baths, approx).unwrap() {
                    let got = proj.get(term.label).unwrap();
                    assert!(
                        (got - term.coefficient).abs() < 1e-12,
                        "{case} {approx:?} {}: projected {got}, table {}",
                        term.label,
                        term.coefficient
                    );
                }
            }
        }
    }
}

#[test]
fn secular_projection_leaves_cross_frequency_terms_unexplained() {
    // Fitting a non-secular generator with only the secular shapes must
    // leave a residual: the cross-frequency terms are genuinely present.
    let mut rng = common::rng(0x5eed_0003);
    let p = common::random_params(&mut rng);
    let baths = steadycoh::BathSetup::for_case(Case::A, 10.0, 60.0).unwrap();
    let nonsec = build_generator(&p, &baths, Approximation::NonSecular).unwrap();
    let secular_only = steadycoh::Generator::from_matrix(
        *nonsec.matrix(),
        steadycoh::generator::GeneratorMeta { approximation: Approximation::Secular, ..*nonsec.meta() },
    );
    assert!(project(&secular_only, Case::A).unwrap().residual > 1e-3);
}
