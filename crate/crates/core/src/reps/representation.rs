use std::collections::HashMap;
use std::sync::Arc;

use num_complex::Complex64;

use super::family::{Family, FamilySpec};
use crate::algebra::{build_preset, AlgebraPreset, Letter, NCPoly, PresetId, Word};
use crate::error::{Error, Result};
use crate::fockops::TensorOperator;
use crate::scalar::Binding;

/// A polynomial with complex coefficients, for sampled elements whose
/// coefficients are not exact.
#[derive(Clone, Debug)]
pub struct NumericPoly {
    pub preset: Arc<AlgebraPreset>,
    pub terms: Vec<(Word, Complex64)>,
}

impl NumericPoly {
    /// Evaluates the exact coefficients of `p` at `binding`.
    pub fn from_poly(p: &NCPoly, binding: &Binding) -> Result<Self> {
        let terms = p
            .terms()
            .map(|(w, s)| Ok((w.clone(), s.eval(binding)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(NumericPoly { preset: p.preset().clone(), terms })
    }

    pub fn one(preset: &Arc<AlgebraPreset>) -> Self {
        NumericPoly { preset: preset.clone(), terms: vec![(Word::new(), Complex64::new(1.0, 0.0))] }
    }

    pub fn degree(&self) -> usize {
        self.terms.iter().map(|(w, _)| w.len()).max().unwrap_or(0)
    }

    pub fn is_holomorphic(&self) -> bool {
        self.terms
            .iter()
            .all(|(w, _)| w.iter().all(|&l| !self.preset.letters[l as usize].star))
    }

    /// Formal adjoint: words reversed, letters sent to their star partners,
    /// coefficients conjugated.
    pub fn adjoint(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(w, c)| {
                let w: Word = w.iter().rev().map(|&l| self.preset.letters[l as usize].partner).collect();
                (w, c.conj())
            })
            .collect();
        NumericPoly { preset: self.preset.clone(), terms }
    }

    pub fn mul(&self, other: &NumericPoly) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                terms.push((a.concat(b), x * y));
            }
        }
        NumericPoly { preset: self.preset.clone(), terms }
    }

    pub fn display(&self) -> String {
        self.terms
            .iter()
            .map(|(w, c)| format!("({:.4}{:+.4}i) {}", c.re, c.im, self.preset.word_name(w)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Generator images of a *-representation on a truncated tensor product of
/// `l²(Z+)` copies. Starred letters carry the adjoints of their partners.
#[derive(Clone, Debug)]
pub struct Representation {
    preset: Arc<AlgebraPreset>,
    spec: FamilySpec,
    dims: Vec<usize>,
    q: f64,
    images: Vec<TensorOperator>,
}

impl Representation {
    /// Assembles a representation from the images of the unstarred generators.
    pub fn from_generators(
        preset: &Arc<AlgebraPreset>,
        spec: FamilySpec,
        dims: &[usize],
        q: f64,
        gens: Vec<(Letter, TensorOperator)>,
    ) -> Result<Self> {
        let mut images: Vec<Option<TensorOperator>> = vec![None; preset.letter_count()];
        for (l, op) in gens {
            if op.dims() != dims {
                return Err(Error::DimensionMismatch {
                    expected: dims.iter().product(),
                    actual: op.dim(),
                });
            }
            let partner = preset.letters[l as usize].partner;
            images[partner as usize] = Some(op.adjoint());
            images[l as usize] = Some(op);
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(l, op)| {
                op.ok_or_else(|| {
                    Error::InvalidArgument(format!(
                        "no image for letter `{}`",
                        preset.letter_name(l as Letter)
                    ))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Representation { preset: preset.clone(), spec, dims: dims.to_vec(), q, images })
    }

    pub fn preset(&self) -> &Arc<AlgebraPreset> {
        &self.preset
    }

    pub fn family(&self) -> Family {
        self.spec.family
    }

    pub fn spec(&self) -> &FamilySpec {
        &self.spec
    }

    pub fn label(&self) -> String {
        self.spec.to_string()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn image(&self, l: Letter) -> &TensorOperator {
        &self.images[l as usize]
    }

    /// Image of the generator or starred generator with the given name.
    pub fn image_of(&self, name: &str) -> Result<&TensorOperator> {
        Ok(self.image(self.preset.letter(name)?))
    }

    fn check_preset(&self, other: &Arc<AlgebraPreset>) -> Result<()> {
        if self.preset.name() != other.name() {
            return Err(Error::PresetMismatch { left: self.preset.name(), right: other.name() });
        }
        Ok(())
    }

    /// Image of a phase-free polynomial.
    pub fn evaluate(&self, p: &NCPoly) -> Result<TensorOperator> {
        self.evaluate_bound(p, &Binding::new(self.q))
    }

    /// Image of a polynomial whose phase units are bound to `phi1`, `phi2`.
    pub fn evaluate_at(&self, p: &NCPoly, phi1: f64, phi2: f64) -> Result<TensorOperator> {
        self.evaluate_bound(p, &Binding::with_phases(self.q, phi1, phi2))
    }

    fn evaluate_bound(&self, p: &NCPoly, binding: &Binding) -> Result<TensorOperator> {
        self.check_preset(p.preset())?;
        self.evaluate_numeric(&NumericPoly::from_poly(p, binding)?)
    }

    pub fn evaluate_numeric(&self, p: &NumericPoly) -> Result<TensorOperator> {
        self.check_preset(&p.preset)?;
        let mut cache: HashMap<Word, TensorOperator> = HashMap::new();
        let mut out = TensorOperator::zero(&self.dims);
        for (w, c) in &p.terms {
            let op = self.word_operator(w, &mut cache)?;
            out = out.add(&op.scale(*c))?;
        }
        Ok(out)
    }

    fn word_operator(
        &self,
        w: &Word,
        cache: &mut HashMap<Word, TensorOperator>,
    ) -> Result<TensorOperator> {
        if w.is_empty() {
            return Ok(TensorOperator::identity(&self.dims));
        }
        if let Some(op) = cache.get(w) {
            return Ok(op.clone());
        }
        let prefix = Word::from_slice(&w[..w.len() - 1]);
        let head = self.word_operator(&prefix, cache)?;
        let op = head.compose(self.image(w[w.len() - 1]))?;
        cache.insert(w.clone(), op.clone());
        Ok(op)
    }

    /// `π(w) v`, applying letter images right to left by matvec.
    pub fn apply_word(&self, w: &Word, v: &[Complex64]) -> Result<Vec<Complex64>> {
        let mut cur = v.to_vec();
        for &l in w.iter().rev() {
            cur = self.image(l).matvec(&cur)?;
        }
        Ok(cur)
    }

    /// The vacuum `e_0 ⊗ ... ⊗ e_0`.
    pub fn vacuum(&self) -> Vec<Complex64> {
        let mut v = vec![Complex64::new(0.0, 0.0); self.dim()];
        v[0] = Complex64::new(1.0, 0.0);
        v
    }

    /// The representation `r_1 ⊗ ... ⊗ r_k` of the tensor product of the
    /// factors' algebras; slots are concatenated in order.
    pub fn tensor(reps: &[Representation]) -> Result<Representation> {
        let q = reps
            .first()
            .ok_or_else(|| Error::InvalidArgument("empty tensor product of representations".into()))?
            .q;
        let ids: Vec<PresetId> = reps.iter().map(|r| r.preset.id.clone()).collect();
        let preset = build_preset(&PresetId::Tensor(ids))?;
        let dims: Vec<usize> = reps.iter().flat_map(|r| r.dims.iter().copied()).collect();
        let mut images = Vec::with_capacity(preset.letter_count());
        for (f, r) in reps.iter().enumerate() {
            if (r.q - q).abs() > 0.0 {
                return Err(Error::FactorMismatch { index: f, reason: "different q".into() });
            }
            let before: Vec<usize> = reps[..f].iter().flat_map(|r| r.dims.clone()).collect();
            let after: Vec<usize> = reps[f + 1..].iter().flat_map(|r| r.dims.clone()).collect();
            images.extend(r.images.iter().map(|op| op.embed(&before, &after)));
        }
        let mut spec = FamilySpec::new(Family::Induced);
        spec.n = reps.len();
        Ok(Representation { preset, spec, dims, q, images })
    }

    /// Replaces the family tag and parameters (used by composite builders).
    pub fn with_spec(mut self, spec: FamilySpec) -> Self {
        self.spec = spec;
        self
    }
}
