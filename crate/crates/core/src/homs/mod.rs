//! The homomorphisms D and Π, representations induced through them, and the
//! character bridge between ρ and γ.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::algebra::{preset_by_name, AlgebraPreset, Letter, NCPoly, Word};
use crate::error::{Error, Result};
use crate::fockops::{
    op_norm, theta_char, theta_scalar, SCdExpression, TensorOperator, DEFAULT_MAX_ITER,
    DEFAULT_TOL,
};
use crate::params;
use crate::report::{CheckReport, ItemResult};
use crate::reps::{build_rep, Blocks, Family, FamilySpec, InducedKind, Representation};
use crate::scalar::{Binding, Scalar};

/// A homomorphism given by the images of the source generators. Starred
/// generators go to the adjoints of their partners' images.
#[derive(Clone)]
pub struct HomSpec {
    pub name: String,
    pub source: Arc<AlgebraPreset>,
    pub target: Arc<AlgebraPreset>,
    images: Vec<NCPoly>,
}

impl fmt::Debug for HomSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "HomSpec({}: {} -> {})", self.name, self.source.name(), self.target.name())
    }
}

impl HomSpec {
    pub fn new(
        name: &str,
        source: &Arc<AlgebraPreset>,
        target: &Arc<AlgebraPreset>,
        gens: Vec<(Letter, NCPoly)>,
    ) -> Result<Self> {
        let zero = NCPoly::zero(target);
        let mut images = vec![zero; source.letter_count()];
        let mut seen = vec![false; source.letter_count()];
        for (l, img) in gens {
            if img.preset().name() != target.name() {
                return Err(Error::PresetMismatch { left: img.preset().name(), right: target.name() });
            }
            let partner = source.letters[l as usize].partner;
            images[partner as usize] = img.adjoint().normal_form();
            images[l as usize] = img.normal_form();
            seen[l as usize] = true;
            seen[partner as usize] = true;
        }
        if let Some(l) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidArgument(format!(
                "no image for `{}`",
                source.letter_name(l as Letter)
            )));
        }
        Ok(HomSpec { name: name.to_string(), source: source.clone(), target: target.clone(), images })
    }

    pub fn image(&self, l: Letter) -> &NCPoly {
        &self.images[l as usize]
    }
}

/// Builds `D` (into `polMat2 ⊗ csu2 ⊗ csu2`) or `Pi` (into `polC(1)`, with
/// the phase kept as the formal unit `u₁`).
pub fn build_hom(name: &str) -> Result<HomSpec> {
    let pm = preset_by_name("polMat2")?;
    match name {
        "D" => {
            let target = preset_by_name("tensor(polMat2,csu2,csu2)")?;
            let mut gens = Vec::new();
            for j in 1..=2 {
                for i in 1..=2 {
                    let mut img = NCPoly::zero(&target);
                    for a in 1..=2 {
                        for b in 1..=2 {
                            let w = format!("z_{b}^{a}@0 t{b}{j}@1 t{a}{i}@2");
                            img = img + NCPoly::parse_word(&target, &w)?;
                        }
                    }
                    gens.push((pm.letter(&format!("z_{j}^{i}"))?, img));
                }
            }
            HomSpec::new("D", &pm, &target, gens)
        }
        "Pi" => {
            let target = preset_by_name("polC(1)")?;
            let z = NCPoly::parse_word(&target, "z1")?.scale(&Scalar::q_pow(-1));
            let u = NCPoly::constant(&target, Scalar::u1_pow(1));
            let zero = NCPoly::zero(&target);
            HomSpec::new(
                "Pi",
                &pm,
                &target,
                vec![
                    (pm.letter("z_1^1")?, z),
                    (pm.letter("z_1^2")?, zero.clone()),
                    (pm.letter("z_2^1")?, zero),
                    (pm.letter("z_2^2")?, u),
                ],
            )
        }
        other => Err(Error::UnknownHom(other.to_string())),
    }
}

/// Image of `p` in the target's normal form.
pub fn apply_hom(h: &HomSpec, p: &NCPoly) -> Result<NCPoly> {
    if p.preset().name() != h.source.name() {
        return Err(Error::PresetMismatch { left: p.preset().name(), right: h.source.name() });
    }
    let mut out = NCPoly::zero(&h.target);
    for (w, c) in p.terms() {
        let mut acc = NCPoly::constant(&h.target, c.clone());
        for &l in w.iter() {
            acc = (&acc * h.image(l)).normal_form();
            if acc.is_empty() {
                break;
            }
        }
        out = out + acc;
    }
    Ok(out.normal_form())
}

/// Maps every defining relation of the source and tests the image for zero.
pub fn check_hom(h: &HomSpec) -> Result<CheckReport> {
    let items = h
        .source
        .relations
        .par_iter()
        .map(|rel| {
            let img = apply_hom(h, &rel.difference(&h.source))?;
            let ok = img.is_empty();
            Ok(ItemResult::symbolic(rel.label.clone(), img.to_string(), "0".into(), ok))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckReport::new(
        "check_hom",
        params! {"hom" => h.name, "source" => h.source.name(), "target" => h.target.name()},
        items,
    ))
}

/// `g ↦ (⊗ target_reps)(h(g))` with the phase units bound to `phi1`, `phi2`.
pub fn induced_rep(
    h: &HomSpec,
    target_reps: &[Representation],
    phi1: f64,
    phi2: f64,
) -> Result<Representation> {
    let combined = if h.target.is_tensor() {
        if target_reps.len() != h.target.factors.len() {
            return Err(Error::FactorMismatch {
                index: target_reps.len(),
                reason: format!("expected {} factor representations", h.target.factors.len()),
            });
        }
        for (i, (r, f)) in target_reps.iter().zip(&h.target.factors).enumerate() {
            if r.preset().name() != f.name() {
                return Err(Error::FactorMismatch {
                    index: i,
                    reason: format!("`{}` is not a representation of `{}`", r.label(), f.name()),
                });
            }
        }
        Representation::tensor(target_reps)?
    } else {
        match target_reps {
            [r] if r.preset().name() == h.target.name() => r.clone(),
            _ => {
                return Err(Error::FactorMismatch {
                    index: 0,
                    reason: format!("expected one representation of `{}`", h.target.name()),
                })
            }
        }
    };
    let gens = h
        .source
        .generators
        .iter()
        .map(|&g| Ok((g, combined.evaluate_at(h.image(g), phi1, phi2)?)))
        .collect::<Result<Vec<_>>>()?;
    let mut spec = FamilySpec::new(Family::Induced).phis(phi1, phi2);
    spec.n = target_reps.len();
    Representation::from_generators(&h.source, spec, combined.dims(), combined.q(), gens)
}

/// `F_φ = ρ_F ∘ Π_φ`.
pub fn fock_pi(phi: f64, n: usize, q: f64) -> Result<Representation> {
    let rho_f = build_rep(&FamilySpec::new(Family::PolCFock), n, q)?;
    induced_rep(&build_hom("Pi")?, &[rho_f], phi, 0.0)
}

/// `χ_{φ₁,φ₂} = ρ_{φ₁} ∘ Π_{φ₂}`.
pub fn chi(phi1: f64, phi2: f64, q: f64) -> Result<Representation> {
    let rho = build_rep(&FamilySpec::new(Family::PolCOnedim).phi(phi1), 2, q)?;
    induced_rep(&build_hom("Pi")?, &[rho], phi2, 0.0)
}

/// `(F_φ ⊗ π₀ ⊗ π₀) ∘ D` on three slots.
pub fn induced_fock(phi: f64, n: usize, q: f64) -> Result<Representation> {
    let pi0 = build_rep(&FamilySpec::new(Family::Csu2Pi), n, q)?;
    let rep = induced_rep(&build_hom("D")?, &[fock_pi(phi, n, q)?, pi0.clone(), pi0], 0.0, 0.0)?;
    Ok(rep.with_spec(FamilySpec::induced_fock(phi)))
}

/// `(χ_{φ₁,φ₂} ⊗ π₀ ⊗ π₀) ∘ D` on two slots.
pub fn induced_chi(phi1: f64, phi2: f64, n: usize, q: f64) -> Result<Representation> {
    let pi0 = build_rep(&FamilySpec::new(Family::Csu2Pi), n, q)?;
    let rep = induced_rep(&build_hom("D")?, &[chi(phi1, phi2, q)?, pi0.clone(), pi0], 0.0, 0.0)?;
    Ok(rep.with_spec(FamilySpec::induced_chi(phi1, phi2)))
}

/// The closed forms displayed for the two compositions, built directly from
/// `S`, `C`, `d`; keyed by generator name.
pub fn displayed_closed_form(spec: &FamilySpec, n: usize, q: f64) -> Result<Vec<(&'static str, TensorOperator)>> {
    let b = Blocks::new(n, q)?;
    let (one, d, cs, sc) = (&b.one, &b.d, &b.cs, &b.sc);
    let el = |c: Complex64, fs: &[&crate::fockops::FactorMatrix]| {
        TensorOperator::elementary(c, fs.iter().map(|&f| f.clone()).collect())
    };
    let r = |x: f64| Complex64::new(x, 0.0);
    let sum = |a: TensorOperator, b: TensorOperator| a.add(&b).expect("same slots");
    match spec.induced {
        Some(InducedKind::Fock) => {
            let e = Complex64::from_polar(1.0, spec.phi);
            Ok(vec![
                ("z_1^1", sum(el(r(1.0 / q), &[cs, sc, sc]), el(e, &[one, d, d]))),
                ("z_2^2", sum(el(r(q), &[cs, d, d]), el(e, &[one, cs, cs]))),
                ("z_1^2", sum(el(r(-1.0), &[cs, sc, d]), el(e, &[one, d, cs]))),
                ("z_2^1", sum(el(r(-1.0), &[cs, d, sc]), el(e, &[one, cs, d]))),
            ])
        }
        Some(InducedKind::Chi) => {
            let e1 = Complex64::from_polar(1.0, spec.phi1);
            let e2 = Complex64::from_polar(1.0, spec.phi2);
            Ok(vec![
                ("z_1^1", sum(el(e1 / q, &[sc, sc]), el(e2, &[d, d]))),
                ("z_2^2", sum(el(e1 * q, &[d, d]), el(e2, &[cs, cs]))),
                ("z_1^2", sum(el(-e1, &[sc, d]), el(e2, &[d, cs]))),
                ("z_2^1", sum(el(-e1, &[d, sc]), el(e2, &[cs, d]))),
            ])
        }
        None => Err(Error::InvalidParams("not one of the displayed compositions".into())),
    }
}

/// Compares an induced composition with its displayed closed form, generator
/// by generator, in operator norm.
pub fn closed_form_check(spec: &FamilySpec, n: usize, q: f64, tol: f64) -> Result<CheckReport> {
    let rep = build_rep(spec, n, q)?;
    let items = displayed_closed_form(spec, n, q)?
        .into_iter()
        .map(|(name, expected)| {
            let diff = rep.image_of(name)?.sub(&expected)?;
            let defect = op_norm(&diff, DEFAULT_TOL, DEFAULT_MAX_ITER, 0).value;
            Ok(ItemResult::residual(name, defect, tol))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckReport::new(
        "induced_closed_form",
        params! {"family" => spec.to_string(), "n" => n, "q" => q, "tol" => tol},
        items,
    ))
}

/// `ρ_{φ₁,π+φ₂}(g)` as an expression in `S`, `C`, `d` with `e^{iφ_k}` kept as
/// the formal units `u_k` (so `e^{i(π+φ₂)} = −u₂`).
pub fn rho_shifted_expression(generator: &str) -> Result<SCdExpression> {
    let pre = SCdExpression::preset();
    let word = |w: &str, s: Scalar| -> Result<NCPoly> {
        Ok(NCPoly::parse_word(&pre, w)?.scale(&s))
    };
    let p = match generator {
        "z_2^2" => word("C S", Scalar::one())?,
        "z_2^1" => word("d", Scalar::u1_pow(1))?,
        "z_1^2" => word("d", -Scalar::u2_pow(1))?,
        // -e^{i(φ₁+π+φ₂)} q⁻¹ = u₁u₂ q⁻¹
        "z_1^1" => word("S* C", &(&Scalar::u1_pow(1) * &Scalar::u2_pow(1)) * &Scalar::q_pow(-1))?,
        other => return Err(Error::UnknownLetter(other.to_string())),
    };
    SCdExpression::new(p)
}

/// `γ_{φ₁,φ₂}(g)` with the phases formal.
pub fn gamma_scalar(generator: &str) -> Result<Scalar> {
    Ok(match generator {
        "z_2^2" => Scalar::u1_pow(1),
        "z_1^1" => &Scalar::u2_pow(1) * &Scalar::q_pow(-1),
        "z_1^2" | "z_2^1" => Scalar::zero(),
        other => return Err(Error::UnknownLetter(other.to_string())),
    })
}

/// `Θ_{φ₁}(ρ_{φ₁,π+φ₂}(g)) = γ_{φ₁,φ₂}(g)` for the four generators: exactly,
/// with formal phases, and numerically at the given angles.
pub fn theta_gamma_bridge(phi1: f64, phi2: f64, q: f64) -> Result<CheckReport> {
    let binding = Binding::with_phases(q, phi1, phi2);
    let items = ["z_1^1", "z_1^2", "z_2^1", "z_2^2"]
        .iter()
        .map(|&g| {
            let e = rho_shifted_expression(g)?;
            let exact = theta_scalar(&e);
            let gamma = gamma_scalar(g)?;
            let numeric = theta_char(&e, phi1, &binding)?;
            let gamma_num = gamma.eval(&binding)?;
            let defect = (numeric - gamma_num).norm();
            let pass = (&exact - &gamma).is_zero() && defect <= 1e-14;
            let mut item = ItemResult::symbolic(g, exact.to_string(), gamma.to_string(), pass);
            item.defect = if (&exact - &gamma).is_zero() { defect } else { f64::MAX };
            Ok(item)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckReport::new(
        "theta_gamma_bridge",
        params! {"phi1" => phi1, "phi2" => phi2, "q" => q},
        items,
    ))
}

/// The shift `φ₂ ↦ π + φ₂` used by the bridge, reduced to `[0, 2π)`.
pub fn shifted_phase(phi2: f64) -> f64 {
    (PI + phi2).rem_euclid(2.0 * PI)
}

/// Words of the source whose images are needed most often; exposed for benches.
pub fn generator_words(h: &HomSpec) -> Vec<Word> {
    h.source.generators.iter().map(|&g| Word::from_slice(&[g])).collect()
}
