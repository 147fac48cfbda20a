use num_complex::Complex64;

use super::family::{Family, FamilySpec, InducedKind};
use super::representation::Representation;
use crate::algebra::{preset_by_name, Letter};
use crate::error::{Error, Result};
use crate::fockops::{build_factor, FactorKind, FactorMatrix, TensorOperator};

/// The single-slot building blocks at one truncation.
pub(crate) struct Blocks {
    pub one: FactorMatrix,
    pub d: FactorMatrix,
    pub cs: FactorMatrix,
    /// `S*C`
    pub sc: FactorMatrix,
}

impl Blocks {
    pub fn new(n: usize, q: f64) -> Result<Self> {
        let s = build_factor(FactorKind::S, n, q)?;
        let c = build_factor(FactorKind::C, n, q)?;
        Ok(Blocks {
            one: FactorMatrix::identity(n),
            d: build_factor(FactorKind::D, n, q)?,
            cs: c.mul(&s),
            sc: s.adjoint().mul(&c),
        })
    }
}

fn phase(phi: f64) -> Complex64 {
    Complex64::from_polar(1.0, phi)
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn el(c: Complex64, fs: &[&FactorMatrix]) -> TensorOperator {
    TensorOperator::elementary(c, fs.iter().map(|&f| f.clone()).collect())
}

fn sum(a: TensorOperator, b: TensorOperator) -> TensorOperator {
    a.add(&b).expect("same slot profile")
}

/// Phase charges `(a, b)` of the ρ images of z11, z12, z21, z22: the image at
/// `(φ₁, φ₂)` is `e^{i(aφ₁ + bφ₂)}` times the image at `(0, 0)`.
pub(crate) const RHO_CHARGES: [(i32, i32); 4] = [(1, 1), (0, 1), (1, 0), (0, 0)];

/// Builds a representation with per-slot truncation `n` at deformation `q`.
///
/// Images are exactly those of the classification list (truncated); the
/// `induced-*` families are the two displayed compositions through D.
pub fn build_rep(spec: &FamilySpec, n: usize, q: f64) -> Result<Representation> {
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::InvalidQ(q));
    }
    if n < 2 {
        return Err(Error::InvalidDimension(n));
    }
    if spec.family == Family::Induced {
        return match spec.induced {
            Some(InducedKind::Fock) => crate::homs::induced_fock(spec.phi, n, q),
            Some(InducedKind::Chi) => crate::homs::induced_chi(spec.phi1, spec.phi2, n, q),
            None => Err(Error::InvalidParams(
                "generic induced representations are built with homs::induced_rep".into(),
            )),
        };
    }
    let b = Blocks::new(n, q)?;
    let (one, d, cs, sc) = (&b.one, &b.d, &b.cs, &b.sc);
    let qi = 1.0 / q;
    let u = real(1.0);
    let pm = preset_by_name("polMat2")?;
    // polMat2 generator letters in the order z11, z12, z21, z22
    let g: Vec<Letter> = pm.generators.clone();
    let (z11, z12, z21, z22) = (g[0], g[1], g[2], g[3]);
    let dims = |k: usize| vec![n; k];
    let scalar = |z: Complex64| TensorOperator::scalar(&[], z);
    let polmat = |k: usize, images: [TensorOperator; 4]| {
        let [a, b, c, e] = images;
        Representation::from_generators(
            &pm,
            spec.clone(),
            &dims(k),
            q,
            vec![(z11, a), (z12, b), (z21, c), (z22, e)],
        )
    };
    match spec.family {
        Family::PiF => polmat(
            4,
            [
                sum(el(u, &[one, d, d, cs]), el(real(-qi), &[sc, cs, cs, one])),
                el(u, &[d, one, cs, one]),
                el(u, &[d, cs, one, one]),
                el(u, &[cs, one, one, one]),
            ],
        ),
        Family::Tau => polmat(
            3,
            [
                sum(el(phase(spec.phi), &[one, d, d]), el(real(-qi), &[sc, cs, cs])),
                el(u, &[d, one, cs]),
                el(u, &[d, cs, one]),
                el(u, &[cs, one, one]),
            ],
        ),
        Family::Nu1 | Family::Nu2 => {
            let e = phase(spec.phi);
            let (a, c) = (el(e, &[d, one]), el(u, &[d, cs]));
            let (z12_img, z21_img) = if spec.family == Family::Nu1 { (c, a) } else { (a, c) };
            polmat(2, [el(-e * qi, &[sc, cs]), z12_img, z21_img, el(u, &[cs, one])])
        }
        Family::Rho => {
            let ph = |k: usize| {
                let (a, b) = RHO_CHARGES[k];
                phase(a as f64 * spec.phi1 + b as f64 * spec.phi2)
            };
            polmat(1, [el(-ph(0) * qi, &[sc]), el(ph(1), &[d]), el(ph(2), &[d]), el(ph(3), &[cs])])
        }
        Family::Theta => polmat(
            1,
            [
                el(real(qi), &[cs]),
                TensorOperator::zero(&[n]),
                TensorOperator::zero(&[n]),
                el(phase(spec.phi), &[one]),
            ],
        ),
        Family::Gamma => polmat(
            0,
            [
                scalar(phase(spec.phi2) * qi),
                scalar(real(0.0)),
                scalar(real(0.0)),
                scalar(phase(spec.phi1)),
            ],
        ),
        Family::PolCFock => {
            let m = spec.n;
            let preset = preset_by_name(&format!("polC({m})"))?;
            // z_j = d^{⊗(m-j)} ⊗ CS ⊗ 1^{⊗(j-1)}
            let gens = (1..=m)
                .map(|j| {
                    let fs: Vec<&FactorMatrix> = (0..m)
                        .map(|slot| match slot.cmp(&(m - j)) {
                            std::cmp::Ordering::Less => d,
                            std::cmp::Ordering::Equal => cs,
                            std::cmp::Ordering::Greater => one,
                        })
                        .collect();
                    (preset.generators[j - 1], el(u, &fs))
                })
                .collect();
            Representation::from_generators(&preset, spec.clone(), &dims(m), q, gens)
        }
        Family::PolCOnedim => {
            let m = spec.n;
            let preset = preset_by_name(&format!("polC({m})"))?;
            let gens = (1..=m)
                .map(|j| {
                    let z = if j == m { phase(spec.phi) } else { real(0.0) };
                    (preset.generators[j - 1], scalar(z))
                })
                .collect();
            Representation::from_generators(&preset, spec.clone(), &[], q, gens)
        }
        Family::Csu2Xi => {
            let cs2 = preset_by_name("csu2")?;
            let e = phase(spec.phi);
            let t = |name: &str| cs2.letter(name).expect("csu2 letter");
            Representation::from_generators(
                &cs2,
                spec.clone(),
                &[],
                q,
                vec![
                    (t("t11"), scalar(e)),
                    (t("t12"), scalar(real(0.0))),
                    (t("t21"), scalar(real(0.0))),
                    (t("t22"), scalar(e.conj())),
                ],
            )
        }
        Family::Csu2Pi => {
            let cs2 = preset_by_name("csu2")?;
            let e = phase(spec.phi);
            let t = |name: &str| cs2.letter(name).expect("csu2 letter");
            Representation::from_generators(
                &cs2,
                spec.clone(),
                &[n],
                q,
                vec![
                    (t("t11"), el(u, &[sc])),
                    (t("t12"), el(-e.conj() * q, &[d])),
                    (t("t21"), el(e, &[d])),
                    (t("t22"), el(u, &[cs])),
                ],
            )
        }
        Family::Induced => unreachable!("handled above"),
    }
}
