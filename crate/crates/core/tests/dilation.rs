use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;
use qball_core::dilation::{
    egervary_unitary, julia_block, psi_compression_check, psi_construction, spectral_norm, PsiStep,
};
use qball_core::fockops::{build_factor, FactorKind};
use qball_core::Error;

const Q: f64 = 0.5;

fn cs(n: usize) -> DMatrix<Complex64> {
    let c = build_factor(FactorKind::C, n, Q).unwrap();
    let s = build_factor(FactorKind::S, n, Q).unwrap();
    c.mul(&s).matrix().clone()
}

#[test]
fn cs_dilation_reproduces_powers() {
    let d = egervary_unitary(&cs(6), 4).unwrap();
    assert!(d.unitarity_defect() <= 1e-12);
    assert!(d.power_defect(3) <= 1e-12);
    assert!(d.power_defect(0) <= 1e-15);
    assert!(d.check(1e-12).passed());
}

#[test]
fn power_dilation_fails_past_the_order() {
    let d = egervary_unitary(&cs(6), 2).unwrap();
    assert!(d.power_defect(3) > 1e-3);
}

#[test]
fn julia_block_rejects_non_contractions() {
    let t = DMatrix::from_element(2, 2, Complex64::new(1.0, 0.0));
    assert!(matches!(julia_block(&t), Err(Error::NotContraction(_))));
}

fn contraction(entries: Vec<(f64, f64)>, h: usize) -> DMatrix<Complex64> {
    let m = DMatrix::from_iterator(h, h, entries.into_iter().map(|(a, b)| Complex64::new(a, b)));
    let n = spectral_norm(&m);
    if n > 1.0 { m / Complex64::new(n, 0.0) } else { m }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn dilations_are_unitary_power_dilations(
        h in 1usize..4,
        m in 1usize..6,
        raw in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 9),
    ) {
        let t = contraction(raw[..h * h].to_vec(), h);
        let d = egervary_unitary(&t, m).unwrap();
        prop_assert!(d.unitarity_defect() <= 1e-12);
        for n in 0..=m {
            prop_assert!(d.power_defect(n) <= 1e-12, "n={} defect {}", n, d.power_defect(n));
        }
    }
}

#[test]
fn step_one_compresses_to_fock() {
    let r = psi_compression_check(PsiStep::FockLastSlot, 0.0, 3, 3, 20, 42, 6, Q, 1e-10).unwrap();
    assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
    assert!(r.item("word z_2^2").unwrap().defect == 0.0);
    assert!(r.item("word z_1^1 z_1^1").is_some());
}

#[test]
fn step_two_compresses_to_induced_fock() {
    let r = psi_compression_check(PsiStep::InducedFirstSlot, 1.0, 3, 3, 20, 42, 6, Q, 1e-10).unwrap();
    assert!(r.passed(), "{:?}", r.failures().collect::<Vec<_>>());
}

#[test]
fn degree_above_order_is_rejected() {
    let e = psi_compression_check(PsiStep::FockLastSlot, 0.0, 2, 3, 5, 42, 6, Q, 1e-10);
    assert!(matches!(e, Err(Error::DegreeExceedsOrder { deg: 3, m: 2 })));
}

#[test]
fn psi_dilated_slot_has_block_dimension() {
    let c = psi_construction(PsiStep::FockLastSlot, 0.0, 2, 5, Q).unwrap();
    assert_eq!(c.psi.dims(), &[5, 5, 5, 15]);
    let c = psi_construction(PsiStep::InducedFirstSlot, 0.0, 2, 5, Q).unwrap();
    assert_eq!(c.psi.dims(), &[15, 5, 5]);
}
