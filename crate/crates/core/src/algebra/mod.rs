//! Exact noncommutative *-polynomials over the q-deformed presets and their
//! normal-form rewriting.

mod confluence;
mod poly;
mod preset;
mod word;

pub use confluence::{confluence_probe, ConfluenceReport};
pub use poly::NCPoly;
pub use preset::{
    build_preset, preset_by_name, AlgebraPreset, LetterInfo, PresetId, Relation, Rule, Terms,
    POLMAT2_LETTERS,
};
pub use word::{Letter, Word};

use std::sync::Arc;

use crate::scalar::Scalar;

impl Relation {
    /// `lhs - rhs` as a polynomial over `preset`.
    pub fn difference(&self, preset: &Arc<AlgebraPreset>) -> NCPoly {
        let lhs = NCPoly::from_terms(preset, self.lhs.iter().cloned());
        let rhs = NCPoly::from_terms(preset, self.rhs.iter().cloned());
        &lhs - &rhs
    }
}

/// Relations whose difference does not reduce to zero (should be empty).
pub fn unsound_relations(preset: &Arc<AlgebraPreset>) -> Vec<String> {
    preset
        .relations
        .iter()
        .filter(|r| !r.difference(preset).is_zero())
        .map(|r| r.label.clone())
        .collect()
}

/// One symbolic item per defining relation: its normal-form difference
/// against zero.
pub fn relation_report(preset: &Arc<AlgebraPreset>) -> crate::CheckReport {
    let items = preset
        .relations
        .iter()
        .map(|r| {
            let nf = r.difference(preset).normal_form();
            crate::ItemResult::symbolic(r.label.clone(), nf.to_string(), "0".into(), nf.is_empty())
        })
        .collect();
    crate::CheckReport::new(
        "relations",
        crate::params! {"preset" => preset.name(), "relations" => preset.relations.len()},
        items,
    )
}

impl ConfluenceReport {
    pub fn to_check_report(&self, seed: u64) -> crate::CheckReport {
        let item = |id: &str, n: usize| {
            crate::ItemResult::numeric(id, n as f64, 0.0, n as f64, n == 0)
        };
        crate::CheckReport::new(
            "confluence",
            crate::params! {
                "preset" => self.preset.clone(), "samples" => self.samples, "seed" => seed,
                "examples" => self.examples.clone(),
            },
            vec![item("associativity failures", self.associativity_failures), item("strategy failures", self.strategy_failures)],
        )
    }
}

/// Convenience constructor for a polynomial from `(coefficient, word text)` pairs.
pub fn poly(preset: &Arc<AlgebraPreset>, items: &[(Scalar, &str)]) -> crate::Result<NCPoly> {
    let mut out = NCPoly::zero(preset);
    for (s, text) in items {
        out = &out + &NCPoly::monomial(preset, preset.word(text)?, s.clone());
    }
    Ok(out)
}
