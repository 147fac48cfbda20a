use std::f64::consts::PI;
use std::time::Instant;

use proptest::prelude::*;
use qball_core::algebra::{preset_by_name, poly, NCPoly, Word};
use qball_core::homs::{apply_hom, build_hom, check_hom, closed_form_check, induced_rep, theta_gamma_bridge};
use qball_core::reps::{build_rep, relation_residuals, Family, FamilySpec};
use qball_core::{Error, Scalar};

#[test]
fn d_is_a_homomorphism() {
    let h = build_hom("D").unwrap();
    let start = Instant::now();
    let r = check_hom(&h).unwrap();
    assert_eq!(r.per_item.len(), 28);
    assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    assert!(start.elapsed().as_secs() < 60);
}

#[test]
fn pi_is_a_homomorphism() {
    let r = check_hom(&build_hom("Pi").unwrap()).unwrap();
    assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
}

#[test]
fn generator_images() {
    let d = build_hom("D").unwrap();
    let pm = preset_by_name("polMat2").unwrap();
    let z11 = NCPoly::parse_word(&pm, "z_1^1").unwrap();
    assert_eq!(apply_hom(&d, &z11).unwrap().len(), 4);
    let expected = poly(
        &d.target,
        &[
            (Scalar::one(), "z_1^1@0 t12@1 t12@2"),
            (Scalar::one(), "z_1^2@0 t12@1 t22@2"),
            (Scalar::one(), "z_2^1@0 t22@1 t12@2"),
            (Scalar::one(), "z_2^2@0 t22@1 t22@2"),
        ],
    )
    .unwrap();
    let z22 = NCPoly::parse_word(&pm, "z_2^2").unwrap();
    assert_eq!(apply_hom(&d, &z22).unwrap(), expected.normal_form());
    assert_eq!(apply_hom(&d, &NCPoly::one(&pm)).unwrap(), NCPoly::one(&d.target));

    let p = build_hom("Pi").unwrap();
    let z21 = NCPoly::parse_word(&pm, "z_2^1").unwrap();
    assert!(apply_hom(&p, &z21).unwrap().is_empty());
    let z = NCPoly::parse_word(&p.target, "z1").unwrap().scale(&Scalar::q_pow(-1));
    assert_eq!(apply_hom(&p, &z11).unwrap(), z);
    let zz = NCPoly::parse_word(&pm, "z_2^2 z_2^2*").unwrap();
    assert_eq!(apply_hom(&p, &zz).unwrap(), NCPoly::one(&p.target));
}

#[test]
fn unknown_hom() {
    assert!(matches!(build_hom("E"), Err(Error::UnknownHom(_))));
}

#[test]
fn displayed_compositions_match() {
    for spec in [
        FamilySpec::induced_fock(0.0),
        FamilySpec::induced_fock(PI / 3.0),
        FamilySpec::induced_chi(0.4, 2.0),
    ] {
        let r = closed_form_check(&spec, 6, 0.5, 1e-12).unwrap();
        assert!(r.passed(), "{spec}: {r:?}");
    }
}

#[test]
fn fock_pi_sends_z22_to_phase() {
    let phi = 1.2;
    let f = qball_core::homs::fock_pi(phi, 6, 0.5).unwrap();
    let m = f.image_of("z_2^2").unwrap().materialize();
    let e = num_complex::Complex64::from_polar(1.0, phi);
    assert!((m - nalgebra::DMatrix::identity(6, 6).map(|x: num_complex::Complex64| x * e)).norm() < 1e-15);
}

#[test]
fn induced_rep_rejects_wrong_factors() {
    let d = build_hom("D").unwrap();
    let rho = build_rep(&FamilySpec::new(Family::Rho), 4, 0.5).unwrap();
    assert!(matches!(induced_rep(&d, std::slice::from_ref(&rho), 0.0, 0.0), Err(Error::FactorMismatch { .. })));
    assert!(matches!(
        induced_rep(&d, &[rho.clone(), rho.clone(), rho], 0.0, 0.0),
        Err(Error::FactorMismatch { index: 1, .. })
    ));
}

#[test]
fn induced_fock_relations() {
    let rep = build_rep(&FamilySpec::induced_fock(0.9), 12, 0.5).unwrap();
    assert!(relation_residuals(&rep, 4, 200, 42, 1e-10).unwrap().passed());
}

#[test]
fn bridge_is_exact() {
    for (a, b) in [(0.0, 0.0), (0.3, 2.0), (PI, 5.5)] {
        let r = theta_gamma_bridge(a, b, 0.5).unwrap();
        assert!(r.passed(), "{r:?}");
    }
}

fn arb_polmat2() -> impl Strategy<Value = NCPoly> {
    let pm = preset_by_name("polMat2").unwrap();
    prop::collection::vec((prop::collection::vec(0u16..8, 0..=2), -2i64..=2), 1..=2).prop_map(
        move |terms| {
            NCPoly::from_terms(&pm, terms.into_iter().map(|(w, c)| (Word::from_slice(&w), Scalar::int(c))))
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn homs_commute_with_star(x in arb_polmat2()) {
        for name in ["D", "Pi"] {
            let h = build_hom(name).unwrap();
            let lhs = apply_hom(&h, &x.adjoint()).unwrap();
            let rhs = apply_hom(&h, &x).unwrap().adjoint().normal_form();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
