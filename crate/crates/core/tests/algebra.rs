use std::sync::Arc;

use proptest::prelude::*;
use qball_core::algebra::{
    build_preset, confluence_probe, poly, preset_by_name, unsound_relations, AlgebraPreset,
    NCPoly, PresetId, Word,
};
use qball_core::{Binding, Scalar};

fn p(preset: &Arc<AlgebraPreset>, text: &str) -> NCPoly {
    NCPoly::parse_word(preset, text).unwrap()
}

#[test]
fn polmat2_rule_census() {
    let pm = preset_by_name("polMat2").unwrap();
    assert_eq!(pm.generators.len(), 4);
    assert_eq!(pm.rules.len(), 28);
    let star = |l: u16| pm.letters[l as usize].star;
    let unstarred = pm.rules.iter().filter(|r| !star(r.lhs[0]) && !star(r.lhs[1])).count();
    let starred = pm.rules.iter().filter(|r| star(r.lhs[0]) && star(r.lhs[1])).count();
    assert_eq!((unstarred, starred, 28 - unstarred - starred), (6, 6, 16));
    assert!(pm.orientation_violations().is_empty());
}

#[test]
fn wick_rule_for_z22() {
    let pm = preset_by_name("polMat2").unwrap();
    let lhs = p(&pm, "z_2^2* z_2^2").normal_form();
    let rhs = poly(
        &pm,
        &[(Scalar::q_pow(2), "z_2^2 z_2^2*"), (Scalar::one_minus_q2(), "")],
    )
    .unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn exchange_rule_for_z11_z22() {
    let pm = preset_by_name("polMat2").unwrap();
    let rhs = poly(
        &pm,
        &[(Scalar::one(), "z_2^2 z_1^1"), (Scalar::q_minus_qinv(), "z_1^2 z_2^1")],
    )
    .unwrap();
    assert_eq!(p(&pm, "z_1^1 z_2^2").normal_form(), rhs);
}

#[test]
fn scale_and_add_build_wick_right_side() {
    let pm = preset_by_name("polMat2").unwrap();
    let built = p(&pm, "z_2^2 z_2^2*").scale(&Scalar::q_pow(2))
        + NCPoly::constant(&pm, Scalar::one_minus_q2());
    assert_eq!(built, p(&pm, "z_2^2* z_2^2").normal_form());
    let one = NCPoly::one(&pm);
    let x = p(&pm, "z_1^1 z_2^1*");
    assert_eq!(&one * &x, x);
}

#[test]
fn csu2_determinant_and_involution() {
    let cs = preset_by_name("csu2").unwrap();
    let rhs = poly(&cs, &[(Scalar::one(), ""), (Scalar::q(), "t12 t21")]).unwrap();
    assert_eq!(p(&cs, "t11 t22").normal_form(), rhs);
    let rhs = poly(&cs, &[(Scalar::one(), ""), (Scalar::q_pow(-1), "t12 t21")]).unwrap();
    assert_eq!(p(&cs, "t22 t11").normal_form(), rhs);

    let adj = p(&cs, "t12").adjoint().normal_form();
    assert_eq!(adj, p(&cs, "t21").scale(&-Scalar::q()));
    // no starred letter survives reduction
    let w = p(&cs, "t11* t12 t21* t22*").normal_form();
    assert!(w.terms().all(|(w, _)| w.iter().all(|&l| !cs.letters[l as usize].star)));
}

#[test]
fn polc1_single_rule() {
    let c1 = build_preset(&PresetId::PolC(1)).unwrap();
    assert_eq!(c1.rules.len(), 1);
    let rhs = poly(&c1, &[(Scalar::q_pow(2), "z1 z1*"), (Scalar::one_minus_q2(), "")]).unwrap();
    assert_eq!(p(&c1, "z1* z1").normal_form(), rhs);
}

#[test]
fn zero_tests() {
    let pm = preset_by_name("polMat2").unwrap();
    assert!((p(&pm, "z_2^1 z_1^2") - p(&pm, "z_1^2 z_2^1")).is_zero());
    assert!((p(&pm, "z_1^1") - p(&pm, "z_1^1")).is_zero());
    let d = p(&pm, "z_1^1 z_2^1") - p(&pm, "z_2^1 z_1^1");
    assert!(!d.is_zero());
    let expected = p(&pm, "z_2^1 z_1^1").scale(&(Scalar::q() - Scalar::one()));
    assert_eq!(d.normal_form(), expected);
}

#[test]
fn phase_adjoint() {
    let pm = preset_by_name("polMat2").unwrap();
    let x = p(&pm, "z_2^1").scale(&Scalar::u1_pow(1));
    assert_eq!(x.adjoint(), p(&pm, "z_2^1*").scale(&Scalar::u1_pow(-1)));
    assert_eq!(p(&pm, "z_1^1").adjoint(), p(&pm, "z_1^1*"));
}

#[test]
fn every_relation_is_sound() {
    for name in ["polC(1)", "polC(2)", "polC(3)", "csu2", "polMat2"] {
        let preset = preset_by_name(name).unwrap();
        assert!(!preset.relations.is_empty(), "{name}");
        assert_eq!(unsound_relations(&preset), Vec::<String>::new(), "{name}");
    }
}

#[test]
fn confluence_small_probe() {
    for name in ["polC(2)", "csu2", "polMat2", "tensor(polC(1),csu2)"] {
        let preset = preset_by_name(name).unwrap();
        let rep = confluence_probe(&preset, 150, 3);
        assert_eq!(rep.failures(), 0, "{name}: {:?}", rep.examples);
    }
}

#[test]
fn empty_triple_is_trivially_associative() {
    let pm = preset_by_name("polMat2").unwrap();
    let one = NCPoly::monomial(&pm, Word::new(), Scalar::one());
    assert_eq!((&(&one * &one) * &one).normal_form(), one);
}

#[test]
fn tensor_factors_commute() {
    let t = preset_by_name("tensor(polMat2,csu2,csu2)").unwrap();
    let a = p(&t, "t11@2 z_1^1@0 t22@1");
    let b = p(&t, "z_1^1@0 t22@1 t11@2");
    assert_eq!(a.normal_form(), b.normal_form());
}

#[test]
fn json_round_trip() {
    let pm = preset_by_name("polMat2").unwrap();
    let x = p(&pm, "z_1^1* z_1^1").normal_form().scale(&Scalar::u2_pow(2));
    let v = x.to_json().unwrap();
    assert_eq!(NCPoly::from_json(&pm, &v).unwrap(), x);
}

fn arb_poly(name: &'static str) -> impl Strategy<Value = NCPoly> {
    let preset = preset_by_name(name).unwrap();
    let n = preset.letter_count() as u16;
    let term = (
        prop::collection::vec(0..n, 0..=3),
        -3i64..=3,
        -2i32..=2,
        -1i32..=1,
    );
    prop::collection::vec(term, 1..=3).prop_map(move |terms| {
        NCPoly::from_terms(
            &preset,
            terms.into_iter().map(|(w, c, eq, eu)| {
                let s = &Scalar::int(c) * &(&Scalar::q_pow(eq) * &Scalar::u1_pow(eu));
                (Word::from_slice(&w), s)
            }),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn star_compatible_polmat2(x in arb_poly("polMat2")) {
        prop_assert_eq!(x.adjoint().normal_form(), x.normal_form().adjoint().normal_form());
    }

    #[test]
    fn star_compatible_csu2(x in arb_poly("csu2")) {
        prop_assert_eq!(x.adjoint().normal_form(), x.normal_form().adjoint().normal_form());
    }

    #[test]
    fn adjoint_reverses_products(x in arb_poly("polMat2"), y in arb_poly("polMat2")) {
        prop_assert_eq!((&x * &y).adjoint(), &y.adjoint() * &x.adjoint());
        prop_assert_eq!(x.adjoint().adjoint(), x);
    }

    #[test]
    fn normal_form_is_idempotent(x in arb_poly("polMat2")) {
        let nf = x.normal_form();
        prop_assert_eq!(nf.normal_form(), nf);
    }

    #[test]
    fn scalar_eval_is_homomorphic(
        a in (-3i64..=3, -2i32..=2, -2i32..=2),
        b in (-3i64..=3, -2i32..=2, -2i32..=2),
        phi in 0.0f64..6.3,
    ) {
        let mk = |(c, e, u): (i64, i32, i32)| &Scalar::int(c) * &(&Scalar::q_pow(e) * &Scalar::u1_pow(u))
            + Scalar::u2_pow(1);
        let (x, y) = (mk(a), mk(b));
        let bind = Binding::with_phases(0.5, phi, 1.0);
        let ev = |s: &Scalar| s.eval(&bind).unwrap();
        prop_assert!((ev(&(&x * &y)) - ev(&x) * ev(&y)).norm() < 1e-9);
        prop_assert!((ev(&(&x + &y)) - ev(&x) - ev(&y)).norm() < 1e-9);
        prop_assert!((ev(&x.conj()) - ev(&x).conj()).norm() < 1e-9);
    }
}
