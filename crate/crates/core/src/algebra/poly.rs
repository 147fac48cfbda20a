use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::preset::{AlgebraPreset, Terms};
use super::word::{Letter, Word};
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Finitely supported `Scalar`-weighted combination of words over one preset.
#[derive(Clone)]
pub struct NCPoly {
    preset: Arc<AlgebraPreset>,
    terms: BTreeMap<Word, Scalar>,
}

fn accumulate(map: &mut BTreeMap<Word, Scalar>, w: Word, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match map.entry(w) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let sum = o.get() + &c;
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

impl NCPoly {
    pub fn zero(preset: &Arc<AlgebraPreset>) -> Self {
        NCPoly { preset: preset.clone(), terms: BTreeMap::new() }
    }

    pub fn one(preset: &Arc<AlgebraPreset>) -> Self {
        NCPoly::constant(preset, Scalar::one())
    }

    pub fn constant(preset: &Arc<AlgebraPreset>, s: Scalar) -> Self {
        NCPoly::monomial(preset, Word::new(), s)
    }

    pub fn monomial(preset: &Arc<AlgebraPreset>, w: Word, s: Scalar) -> Self {
        let mut p = NCPoly::zero(preset);
        accumulate(&mut p.terms, w, s);
        p
    }

    pub fn letter(preset: &Arc<AlgebraPreset>, l: Letter) -> Self {
        NCPoly::monomial(preset, Word::from_slice(&[l]), Scalar::one())
    }

    /// Parses a product of letter names, e.g. `"z_1^1 z_2^2*"`.
    pub fn parse_word(preset: &Arc<AlgebraPreset>, text: &str) -> Result<Self> {
        Ok(NCPoly::monomial(preset, preset.word(text)?, Scalar::one()))
    }

    pub fn from_terms<I>(preset: &Arc<AlgebraPreset>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Word, Scalar)>,
    {
        let mut p = NCPoly::zero(preset);
        for (w, s) in terms {
            accumulate(&mut p.terms, w, s);
        }
        p
    }

    pub fn preset(&self) -> &Arc<AlgebraPreset> {
        &self.preset
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Empty support (the zero polynomial), before any reduction.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|w| w.len()).max().unwrap_or(0)
    }

    fn check_same(&self, other: &NCPoly) -> Result<()> {
        if Arc::ptr_eq(&self.preset, &other.preset) || self.preset.id == other.preset.id {
            Ok(())
        } else {
            Err(Error::PresetMismatch {
                left: self.preset.name(),
                right: other.preset.name(),
            })
        }
    }

    pub fn try_add(&self, other: &NCPoly) -> Result<NCPoly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            accumulate(&mut out.terms, w.clone(), c.clone());
        }
        Ok(out)
    }

    /// Free-algebra product (concatenation, no reduction).
    pub fn try_mul(&self, other: &NCPoly) -> Result<NCPoly> {
        self.check_same(other)?;
        let mut out = NCPoly::zero(&self.preset);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                accumulate(&mut out.terms, wa.concat(wb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Scalar) -> NCPoly {
        NCPoly::from_terms(&self.preset, self.terms.iter().map(|(w, c)| (w.clone(), s * c)))
    }

    pub fn pow(&self, n: u32) -> NCPoly {
        let mut acc = NCPoly::one(&self.preset);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Reverses each word, applies the involution letterwise and conjugates
    /// coefficients. The result is not reduced.
    pub fn adjoint(&self) -> NCPoly {
        let preset = &self.preset;
        let mut out = NCPoly::zero(preset);
        for (w, c) in &self.terms {
            let mut acc: Terms = vec![(Word::new(), c.conj())];
            for &l in w.iter().rev() {
                let image = &preset.involution[l as usize];
                let mut next = Vec::with_capacity(acc.len() * image.len());
                for (wa, ca) in &acc {
                    for (wb, cb) in image {
                        next.push((wa.concat(wb), ca * cb));
                    }
                }
                acc = next;
            }
            for (wa, ca) in acc {
                accumulate(&mut out.terms, wa, ca);
            }
        }
        out
    }

    /// Exhaustive rewriting to the preset's normal form.
    ///
    /// Terms are processed from the degree-lex largest word down, so every
    /// word is rewritten at most once after all its contributions merged;
    /// within a word the leftmost redex is reduced.
    pub fn normal_form(&self) -> NCPoly {
        if self.preset.is_tensor() {
            return self.tensor_normal_form();
        }
        reduce(&self.preset, self.terms.clone(), |redexes| redexes[0])
    }

    /// Normal form using a random redex at every step. Used to probe
    /// confluence of the rewrite system.
    pub fn normal_form_randomized<R: Rng + ?Sized>(&self, rng: &mut R) -> NCPoly {
        if self.preset.is_tensor() {
            return self.tensor_normal_form();
        }
        reduce(&self.preset, self.terms.clone(), |redexes| {
            redexes[rng.random_range(0..redexes.len())]
        })
    }

    fn tensor_normal_form(&self) -> NCPoly {
        let preset = &self.preset;
        let mut cache: Vec<HashMap<Word, Vec<(Word, Scalar)>>> =
            vec![HashMap::new(); preset.factors.len()];
        let mut out = NCPoly::zero(preset);
        for (w, c) in &self.terms {
            let parts = preset.split_factors(w);
            let mut acc: Vec<(Vec<Word>, Scalar)> = vec![(Vec::new(), c.clone())];
            for (f, part) in parts.into_iter().enumerate() {
                let factor = &preset.factors[f];
                let reduced = cache[f]
                    .entry(part.clone())
                    .or_insert_with(|| {
                        NCPoly::monomial(factor, part, Scalar::one())
                            .normal_form()
                            .terms
                            .into_iter()
                            .collect()
                    })
                    .clone();
                let mut next = Vec::with_capacity(acc.len() * reduced.len());
                for (ws, s) in &acc {
                    for (rw, rs) in &reduced {
                        let mut ws2 = ws.clone();
                        ws2.push(rw.clone());
                        next.push((ws2, s * rs));
                    }
                }
                acc = next;
            }
            for (ws, s) in acc {
                accumulate(&mut out.terms, preset.join_factors(&ws), s);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.normal_form().is_empty()
    }

    /// True if every word avoids starred letters.
    pub fn is_holomorphic(&self) -> bool {
        self.terms
            .keys()
            .all(|w| w.iter().all(|&l| !self.preset.letters[l as usize].star))
    }

    pub fn to_json(&self) -> Result<serde_json::Value> {
        let rows = self
            .terms
            .iter()
            .map(|(w, c)| {
                Ok(TermJson {
                    word: w.to_vec(),
                    coeff: CoeffJson { monomials: c.to_rows()? },
                })
            })
            .collect::<Result<Vec<_>>>()?;
        serde_json::to_value(rows).map_err(|e| Error::Serialization(e.to_string()))
    }

    pub fn from_json(preset: &Arc<AlgebraPreset>, value: &serde_json::Value) -> Result<Self> {
        let rows: Vec<TermJson> = serde_json::from_value(value.clone())
            .map_err(|e| Error::Serialization(e.to_string()))?;
        let mut p = NCPoly::zero(preset);
        for row in rows {
            if let Some(&bad) = row.word.iter().find(|&&l| l as usize >= preset.letter_count()) {
                return Err(Error::UnknownLetter(format!("code {bad}")));
            }
            accumulate(
                &mut p.terms,
                Word::from_slice(&row.word),
                Scalar::from_rows(&row.coeff.monomials)?,
            );
        }
        Ok(p)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    word: Vec<Letter>,
    coeff: CoeffJson,
}

#[derive(Serialize, Deserialize)]
struct CoeffJson {
    monomials: Vec<[i64; 5]>,
}

/// Positions `(index, length)` of all redexes in `w`; a single-letter rule
/// at a position takes precedence over a pair rule starting there.
fn redexes(preset: &AlgebraPreset, w: &Word) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..w.len() {
        if let Some(r) = preset.single_rule(w[i]) {
            out.push((i, 1, r));
        } else if i + 1 < w.len() {
            if let Some(r) = preset.pair_rule(w[i], w[i + 1]) {
                out.push((i, 2, r));
            }
        }
    }
    out
}

fn reduce<F>(preset: &Arc<AlgebraPreset>, mut pending: BTreeMap<Word, Scalar>, mut choose: F) -> NCPoly
where
    F: FnMut(&[(usize, usize, usize)]) -> (usize, usize, usize),
{
    let mut out = NCPoly::zero(preset);
    while let Some((w, c)) = pending.pop_last() {
        let found = redexes(preset, &w);
        if found.is_empty() {
            out.terms.insert(w, c);
            continue;
        }
        let (at, len, rule) = choose(&found);
        for (rw, rc) in &preset.rules[rule].rhs {
            accumulate(&mut pending, w.splice(at, len, rw), &c * rc);
        }
    }
    out
}

impl PartialEq for NCPoly {
    fn eq(&self, other: &Self) -> bool {
        self.preset.id == other.preset.id && self.terms == other.terms
    }
}

impl Add for &NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: &NCPoly) -> NCPoly {
        self.try_add(rhs).expect("preset mismatch in addition")
    }
}

impl Add for NCPoly {
    type Output = NCPoly;
    fn add(self, rhs: NCPoly) -> NCPoly {
        &self + &rhs
    }
}

impl Sub for &NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: &NCPoly) -> NCPoly {
        self + &(-rhs)
    }
}

impl Sub for NCPoly {
    type Output = NCPoly;
    fn sub(self, rhs: NCPoly) -> NCPoly {
        &self - &rhs
    }
}

impl Neg for &NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        self.scale(&Scalar::int(-1))
    }
}

impl Neg for NCPoly {
    type Output = NCPoly;
    fn neg(self) -> NCPoly {
        -&self
    }
}

impl Mul for &NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: &NCPoly) -> NCPoly {
        self.try_mul(rhs).expect("preset mismatch in multiplication")
    }
}

impl Mul for NCPoly {
    type Output = NCPoly;
    fn mul(self, rhs: NCPoly) -> NCPoly {
        &self * &rhs
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| {
                let word = self.preset.word_name(w);
                if c.is_one() {
                    word
                } else if w.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c}) {word}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NCPoly[{}]({self})", self.preset.name())
    }
}
