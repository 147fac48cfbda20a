use std::f64::consts::PI;

use num_complex::Complex64;
use qball_core::algebra::{poly, preset_by_name, NCPoly};
use qball_core::boundary::{
    annihilation_report, gamma_bound_check, gamma_value, general_samples, holomorphic_samples,
    isometry_check, j_generators, quotient_norm, IsometryParams, PolySample,
};
use qball_core::fockops::{op_norm, DEFAULT_MAX_ITER, DEFAULT_TOL};
use qball_core::homs::induced_chi;
use qball_core::reps::{build_rep, Family, FamilySpec, NumericPoly};
use qball_core::{Binding, Scalar};

const Q: f64 = 0.5;

fn numeric(text: &str) -> NumericPoly {
    let pm = preset_by_name("polMat2").unwrap();
    let mut p = NCPoly::zero(&pm);
    for word in text.split('+') {
        p = p + NCPoly::parse_word(&pm, word.trim()).unwrap();
    }
    NumericPoly::from_poly(&p, &Binding::new(Q)).unwrap()
}

fn scalar_sample(text: &str) -> PolySample {
    PolySample::scalar(0, numeric(text))
}

#[test]
fn ideal_generators_match_displayed_forms() {
    let j = j_generators();
    let pm = preset_by_name("polMat2").unwrap();
    let g22 = poly(&pm, &[(Scalar::one(), "z_1^2 z_1^2*"), (Scalar::one(), "z_2^2 z_2^2*"), (Scalar::int(-1), "")]).unwrap();
    let g11 = poly(
        &pm,
        &[(Scalar::q_pow(2), "z_1^1 z_1^1*"), (Scalar::q_pow(2), "z_2^1 z_2^1*"), (Scalar::int(-1), "")],
    )
    .unwrap();
    let g12 = poly(&pm, &[(Scalar::q(), "z_1^1 z_1^2*"), (Scalar::q(), "z_2^1 z_2^2*")]).unwrap();
    assert_eq!(j.get(2, 2), &g22);
    assert_eq!(j.get(1, 1), &g11);
    assert_eq!(j.get(1, 2), &g12);
}

#[test]
fn ideal_generators_are_star_closed() {
    let j = j_generators();
    for a in 1..=2 {
        for b in 1..=2 {
            assert!((j.get(a, b).adjoint() - j.get(b, a).clone()).is_zero(), "g{a}{b}");
        }
    }
}

#[test]
fn boundary_families_annihilate_j() {
    let reps = [
        build_rep(&FamilySpec::new(Family::Rho).phis(0.3, 2.1), 16, Q).unwrap(),
        build_rep(&FamilySpec::new(Family::Gamma).phis(1.0, 4.0), 16, Q).unwrap(),
        induced_chi(0.8, 2.2, 16, Q).unwrap(),
    ];
    for rep in &reps {
        let r = annihilation_report(rep, 4, 200, 42, 1e-10).unwrap();
        assert!(r.passed(), "{}: {:?}", rep.label(), r.failures().collect::<Vec<_>>());
    }
}

#[test]
fn interior_families_violate_j() {
    let reps = [
        (build_rep(&FamilySpec::new(Family::PiF), 10, Q).unwrap()),
        (build_rep(&FamilySpec::new(Family::Tau).phi(0.7), 16, Q).unwrap()),
        (build_rep(&FamilySpec::new(Family::Nu1).phi(1.1), 16, Q).unwrap()),
        (build_rep(&FamilySpec::new(Family::Nu2).phi(2.3), 16, Q).unwrap()),
        (build_rep(&FamilySpec::new(Family::Theta).phi(3.0), 16, Q).unwrap()),
    ];
    for rep in &reps {
        let r = annihilation_report(rep, 4, 200, 42, 1e-10).unwrap();
        assert!(!r.passed(), "{}", rep.label());
        assert!(r.max_defect() >= 0.1, "{}: {}", rep.label(), r.max_defect());
    }
    let fock = annihilation_report(&reps[0], 4, 50, 1, 1e-10).unwrap();
    let vac = fock.item("g22 vacuum").unwrap();
    assert!((vac.defect - 1.0).abs() <= 1e-12, "{}", vac.defect);
    let theta = annihilation_report(&reps[4], 4, 50, 1, 1e-10).unwrap();
    assert!(!theta.item("g11").unwrap().pass);
}

#[test]
fn quotient_norm_of_simple_elements() {
    let n = 24;
    let one = PolySample::scalar(0, NumericPoly::one(&preset_by_name("polMat2").unwrap()));
    assert!((quotient_norm(&one, 4, n, Q, 1).unwrap().value - 1.0).abs() < 1e-12);
    let z21 = quotient_norm(&scalar_sample("z_2^1"), 4, n, Q, 1).unwrap();
    assert!((z21.value - 1.0).abs() < 1e-12);
    let z11 = quotient_norm(&scalar_sample("z_1^1"), 4, n, Q, 1).unwrap();
    let expected = (1.0 - Q.powi(2 * (n as i32 - 1))).sqrt() / Q;
    assert!((z11.value - expected).abs() < 1e-10, "{} vs {expected}", z11.value);
}

#[test]
fn quotient_norm_is_periodic_and_gauge_invariant() {
    let s = scalar_sample("z_1^1 z_2^2 + z_2^1");
    let a = quotient_norm(&s, 6, 20, Q, 3).unwrap().value;
    // Shifting every grid angle by 2π is the identity on the rep.
    let mut shifted = 0.0f64;
    for k1 in 0..6 {
        for k2 in 0..6 {
            let (p1, p2) = (2.0 * PI * k1 as f64 / 6.0 + 2.0 * PI, 2.0 * PI * k2 as f64 / 6.0 + 2.0 * PI);
            let rho = build_rep(&FamilySpec::new(Family::Rho).phis(p1, p2), 20, Q).unwrap();
            let v = op_norm(&rho.evaluate_numeric(&s.entries[0]).unwrap(), DEFAULT_TOL, DEFAULT_MAX_ITER, 3).value;
            shifted = shifted.max(v);
        }
    }
    assert!((a - shifted).abs() < 1e-10);

    let mut m = numeric("z_1^1 z_2^2 z_1^2");
    let base = quotient_norm(&PolySample::scalar(0, m.clone()), 6, 20, Q, 3).unwrap().value;
    m.terms[0].1 *= Complex64::from_polar(1.0, 1.234);
    let gauged = quotient_norm(&PolySample::scalar(0, m), 6, 20, Q, 3).unwrap().value;
    assert!((base - gauged).abs() < 1e-10);
}

#[test]
fn gamma_values_and_bound() {
    let g = gamma_value(&numeric("z_1^1"), 0.4, 1.3, Q).unwrap();
    assert!((g.norm() - 1.0 / Q).abs() < 1e-12);
    assert!(gamma_value(&numeric("z_2^1"), 0.4, 1.3, Q).unwrap().norm() < 1e-15);
    let samples = vec![scalar_sample("z_1^1"), scalar_sample("z_2^1")];
    let r = gamma_bound_check(&samples, 8, 48, Q, 1e-8, 42).unwrap();
    assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
}

#[test]
fn gamma_bound_gap_on_sum_is_a_truncation_effect() {
    // |γ| reaches 1 + 1/q = 3 at a grid point, where the truncated ρ norm
    // sits below the true one by O(1/N^2).
    let s = vec![scalar_sample("z_2^2 + z_1^1")];
    let coarse = gamma_bound_check(&s, 8, 48, Q, 1e-8, 42).unwrap();
    let fine = gamma_bound_check(&s, 8, 96, Q, 1e-8, 42).unwrap();
    let (d48, d96) = (coarse.per_item[0].defect, fine.per_item[0].defect);
    assert!(d48 < 1e-2 && d96 < d48 / 3.0, "{d48} {d96}");
}

#[test]
fn isometry_on_trivial_and_generator_samples() {
    let p = IsometryParams { grid: 4, n_fock: 8, n_rho: 32, q: Q, slack: 0.05, seed: 42 };
    let one = PolySample::scalar(0, NumericPoly::one(&preset_by_name("polMat2").unwrap()));
    let (r, rows) = isometry_check(&[one, scalar_sample("z_2^2")], p).unwrap();
    assert!(r.passed(), "{rows:?}");
    assert!((rows[0].f - 1.0).abs() < 1e-12 && (rows[0].q - 1.0).abs() < 1e-12);
}

#[test]
fn isometry_rejects_starred_samples() {
    let p = IsometryParams { grid: 2, n_fock: 4, n_rho: 8, q: Q, slack: 0.05, seed: 42 };
    assert!(isometry_check(&[scalar_sample("z_1^1*")], p).is_err());
}

#[test]
fn samplers_are_seeded_and_respect_shape() {
    let a = holomorphic_samples(3, 2, 3, 9).unwrap();
    let b = holomorphic_samples(3, 2, 3, 9).unwrap();
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(x.entries.len(), 4);
        assert!(x.is_holomorphic());
        for (p, r) in x.entries.iter().zip(&y.entries) {
            assert_eq!(p.terms, r.terms);
            assert!(p.degree() <= 3);
        }
    }
    let g = general_samples(40, 3, 1).unwrap();
    assert!(g.iter().any(|p| !p.is_holomorphic()));
}
