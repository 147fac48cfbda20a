use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::poly::NCPoly;
use super::preset::AlgebraPreset;
use super::word::{Letter, Word};
use crate::scalar::Scalar;

/// Outcome of a statistical confluence probe.
#[derive(Debug, Clone, Serialize)]
pub struct ConfluenceReport {
    pub preset: String,
    pub samples: usize,
    pub associativity_failures: usize,
    pub strategy_failures: usize,
    /// Up to five offending triples, rendered with letter names.
    pub examples: Vec<String>,
}

impl ConfluenceReport {
    pub fn failures(&self) -> usize {
        self.associativity_failures + self.strategy_failures
    }
}

pub(crate) fn random_word<R: Rng>(rng: &mut R, alphabet: &[Letter], max_len: usize) -> Word {
    let len = rng.random_range(0..=max_len);
    (0..len)
        .map(|_| alphabet[rng.random_range(0..alphabet.len())])
        .collect()
}

/// For random word triples `(a, b, c)` of length at most 4 checks
/// `nf(nf(ab) c) == nf(a nf(bc))`, and that reducing `abc` with a random redex
/// order gives the leftmost-order normal form.
pub fn confluence_probe(preset: &Arc<AlgebraPreset>, samples: usize, seed: u64) -> ConfluenceReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let alphabet: Vec<Letter> = (0..preset.letter_count() as Letter).collect();
    let mut report = ConfluenceReport {
        preset: preset.name(),
        samples,
        associativity_failures: 0,
        strategy_failures: 0,
        examples: Vec::new(),
    };
    let mono = |w: Word| NCPoly::monomial(preset, w, Scalar::one());
    for _ in 0..samples {
        let a = random_word(&mut rng, &alphabet, 4);
        let b = random_word(&mut rng, &alphabet, 4);
        let c = random_word(&mut rng, &alphabet, 4);
        let (pa, pb, pc) = (mono(a.clone()), mono(b.clone()), mono(c.clone()));
        let left = (&(&pa * &pb).normal_form() * &pc).normal_form();
        let right = (&pa * &(&pb * &pc).normal_form()).normal_form();
        let full = &(&pa * &pb) * &pc;
        let shuffled = full.normal_form_randomized(&mut rng);
        let describe = || {
            format!(
                "({}) ({}) ({})",
                preset.word_name(&a),
                preset.word_name(&b),
                preset.word_name(&c)
            )
        };
        if left != right {
            report.associativity_failures += 1;
            if report.examples.len() < 5 {
                report.examples.push(describe());
            }
        }
        if shuffled != full.normal_form() {
            report.strategy_failures += 1;
            if report.examples.len() < 5 {
                report.examples.push(describe());
            }
        }
    }
    report
}
