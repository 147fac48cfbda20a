use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{egervary_unitary, FiniteDilation};
use crate::algebra::{preset_by_name, Word};
use crate::error::{Error, Result};
use crate::fockops::{FactorMatrix, TensorOperator};
use crate::homs::{build_hom, induced_fock, induced_rep};
use crate::params;
use crate::report::{CheckReport, ItemResult};
use crate::reps::{
    build_rep, interior_indices, relation_residuals, Blocks, Family, FamilySpec, NumericPoly,
    Representation,
};

/// Which slot of which composition is dilated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum PsiStep {
    /// Last slot of `π_F(z_1^1)`.
    FockLastSlot,
    /// The `F_φ` slot of `(F_φ ⊗ π₀ ⊗ π₀) ∘ D`.
    InducedFirstSlot,
}

impl PsiStep {
    pub fn from_index(step: u8) -> Result<Self> {
        match step {
            1 => Ok(PsiStep::FockLastSlot),
            2 => Ok(PsiStep::InducedFirstSlot),
            _ => Err(Error::InvalidArgument(format!("step must be 1 or 2, got {step}"))),
        }
    }

    pub fn index(self) -> u8 {
        match self {
            PsiStep::FockLastSlot => 1,
            PsiStep::InducedFirstSlot => 2,
        }
    }
}

impl fmt::Display for PsiStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {}", self.index())
    }
}

/// `Ψ`, the representation it compresses to, and the dilation used.
pub struct PsiConstruction {
    pub psi: Representation,
    pub reference: Representation,
    /// The slot carrying `U` in `psi` (block 0 is the original space).
    pub slot: usize,
    pub dilation: FiniteDilation,
}

/// Builds `Ψ` for `step` with the `CS` in the dilated slot replaced by an
/// order-`m` unitary dilation of the truncated `CS`.
pub fn psi_construction(step: PsiStep, phi: f64, m: usize, n: usize, q: f64) -> Result<PsiConstruction> {
    let b = Blocks::new(n, q)?;
    let dilation = egervary_unitary(b.cs.matrix(), m)?;
    let u = FactorMatrix::from_dense(dilation.u.clone());
    match step {
        PsiStep::FockLastSlot => {
            let reference = build_rep(&FamilySpec::new(Family::PiF), n, q)?;
            let pm = reference.preset().clone();
            let (one, d, cs, sc) = (&b.one, &b.d, &b.cs, &b.sc);
            let big = FactorMatrix::identity(dilation.dim());
            let el = |c: f64, fs: [&FactorMatrix; 4]| {
                TensorOperator::elementary(Complex64::new(c, 0.0), fs.iter().map(|&f| f.clone()).collect())
            };
            let g = &pm.generators;
            let gens = vec![
                (g[0], el(1.0, [one, d, d, &u]).add(&el(-1.0 / q, [sc, cs, cs, &big]))?),
                (g[1], el(1.0, [d, one, cs, &big])),
                (g[2], el(1.0, [d, cs, one, &big])),
                (g[3], el(1.0, [cs, one, one, &big])),
            ];
            let dims = [n, n, n, dilation.dim()];
            let psi = Representation::from_generators(&pm, FamilySpec::new(Family::PiF), &dims, q, gens)?;
            Ok(PsiConstruction { psi, reference, slot: 3, dilation })
        }
        PsiStep::InducedFirstSlot => {
            let reference = induced_fock(phi, n, q)?;
            let pc1 = preset_by_name("polC(1)")?;
            let z1 = TensorOperator::elementary(Complex64::new(1.0, 0.0), vec![u]);
            let unitary_disc = Representation::from_generators(
                &pc1,
                FamilySpec::new(Family::PolCFock).with_n(1),
                &[dilation.dim()],
                q,
                vec![(pc1.generators[0], z1)],
            )?;
            let f = induced_rep(&build_hom("Pi")?, &[unitary_disc], phi, 0.0)?;
            let pi0 = build_rep(&FamilySpec::new(Family::Csu2Pi), n, q)?;
            let psi = induced_rep(&build_hom("D")?, &[f, pi0.clone(), pi0], 0.0, 0.0)?
                .with_spec(FamilySpec::induced_fock(phi));
            Ok(PsiConstruction { psi, reference, slot: 0, dilation })
        }
    }
}

impl PsiConstruction {
    /// `max` over `indices` of `‖(P Ψ(w) P - π(w)) e_i‖`, where `P` projects
    /// the dilated slot onto block 0.
    pub fn compression_defect(&self, w: &Word, indices: &[Vec<usize>]) -> Result<f64> {
        let mono = |rep: &Representation| {
            rep.evaluate_numeric(&NumericPoly {
                preset: rep.preset().clone(),
                terms: vec![(w.clone(), Complex64::new(1.0, 0.0))],
            })
        };
        let (a, b) = (mono(&self.psi)?, mono(&self.reference)?);
        let n = self.reference.dims()[self.slot];
        let mut worst = 0.0f64;
        for idx in indices {
            let mut diff: BTreeMap<usize, Complex64> = BTreeMap::new();
            for (flat, z) in a.apply_basis(idx)? {
                let multi = a.multi_index(flat);
                if multi[self.slot] < n {
                    *diff.entry(b.flat_index(&multi)).or_default() += z;
                }
            }
            for (flat, z) in b.apply_basis(idx)? {
                *diff.entry(flat).or_default() -= z;
            }
            worst = worst.max(diff.values().map(|z| z.norm_sqr()).sum::<f64>().sqrt());
        }
        Ok(worst)
    }
}

fn sample_words(preset_gens: &[u16], deg: usize, samples: usize, seed: u64) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (z11, z22) = (preset_gens[0], preset_gens[3]);
    let mut words = vec![Word::from_slice(&[z22]), Word::from_slice(&[z11])];
    if deg >= 2 {
        words.push(Word::from_slice(&[z11, z11]));
    }
    for _ in 0..samples {
        let len = rng.random_range(1..=deg);
        words.push((0..len).map(|_| preset_gens[rng.random_range(0..preset_gens.len())]).collect());
    }
    let mut seen = std::collections::HashSet::new();
    words.retain(|w| seen.insert(w.clone()));
    words
}

/// Compression identity for holomorphic words of length `<= deg`, a starred
/// control word that must fail it, and the relations of `Ψ`.
#[allow(clippy::too_many_arguments)]
pub fn psi_compression_check(
    step: PsiStep,
    phi: f64,
    m: usize,
    deg: usize,
    samples: usize,
    seed: u64,
    n: usize,
    q: f64,
    tol: f64,
) -> Result<CheckReport> {
    if deg > m {
        return Err(Error::DegreeExceedsOrder { deg, m });
    }
    if deg == 0 {
        return Err(Error::InvalidArgument("deg must be >= 1".into()));
    }
    let c = psi_construction(step, phi, m, n, q)?;
    let pm = c.reference.preset().clone();
    let pad = 4.min(n - 1);
    let indices = interior_indices(c.reference.dims(), pad, 50, seed)?;
    let mut items = Vec::new();
    for w in sample_words(&pm.generators, deg, samples, seed) {
        let defect = c.compression_defect(&w, &indices)?;
        items.push(ItemResult::residual(format!("word {}", pm.word_name(&w)), defect, tol));
    }
    let z11 = pm.generators[0];
    let starred = Word::from_slice(&[z11, pm.letters[z11 as usize].partner]);
    let control = c.compression_defect(&starred, &indices)?;
    items.push(ItemResult::numeric(
        format!("starred control {} (must fail compression)", pm.word_name(&starred)),
        control,
        tol,
        control,
        control > tol,
    ));
    let rel = relation_residuals(&c.psi, pad, 200, seed, tol)?;
    items.push(ItemResult::residual("psi relations", rel.max_defect(), tol));
    Ok(CheckReport::new(
        "psi_compression",
        params! {
            "step" => step.index(), "phi" => phi, "m" => m, "deg" => deg, "samples" => samples,
            "seed" => seed, "n" => n, "q" => q, "tol" => tol,
        },
        items,
    ))
}
