use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use num_complex::Complex64;

use crate::algebra::{preset_by_name, AlgebraPreset, Letter, Word};
use crate::error::Result;
use crate::reps::NumericPoly;

/// Number of terms in every sampled polynomial.
pub const TERMS_PER_POLY: usize = 4;

/// A sampled `n x n` matrix of polynomials (`n = 1` for scalar samples).
#[derive(Clone, Debug)]
pub struct PolySample {
    pub id: usize,
    pub n: usize,
    pub deg: usize,
    /// Row-major entries.
    pub entries: Vec<NumericPoly>,
}

impl PolySample {
    pub fn scalar(id: usize, p: NumericPoly) -> Self {
        PolySample { id, n: 1, deg: p.degree(), entries: vec![p] }
    }

    pub fn entry(&self, i: usize, j: usize) -> &NumericPoly {
        &self.entries[i * self.n + j]
    }

    pub fn is_holomorphic(&self) -> bool {
        self.entries.iter().all(NumericPoly::is_holomorphic)
    }
}

/// `TERMS_PER_POLY` uniform random words of length `0..=deg` with standard
/// complex Gaussian coefficients; only unstarred letters when `holomorphic`.
pub fn sample_poly<R: Rng>(
    preset: &Arc<AlgebraPreset>,
    deg: usize,
    holomorphic: bool,
    rng: &mut R,
) -> NumericPoly {
    let alphabet: Vec<Letter> = if holomorphic {
        preset.generators.clone()
    } else {
        (0..preset.letter_count() as Letter).collect()
    };
    let terms = (0..TERMS_PER_POLY)
        .map(|_| {
            let len = rng.random_range(0..=deg);
            let w: Word = (0..len).map(|_| alphabet[rng.random_range(0..alphabet.len())]).collect();
            let re: f64 = StandardNormal.sample(rng);
            let im: f64 = StandardNormal.sample(rng);
            (w, Complex64::new(re, im) / 2f64.sqrt())
        })
        .collect();
    NumericPoly { preset: preset.clone(), terms }
}

/// `count` holomorphic `n x n` polMat2 samples from one seeded stream.
pub fn holomorphic_samples(count: usize, n: usize, deg: usize, seed: u64) -> Result<Vec<PolySample>> {
    let pm = preset_by_name("polMat2")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count)
        .map(|id| PolySample {
            id,
            n,
            deg,
            entries: (0..n * n).map(|_| sample_poly(&pm, deg, true, &mut rng)).collect(),
        })
        .collect())
}

/// `count` polMat2 polynomials with stars allowed.
pub fn general_samples(count: usize, deg: usize, seed: u64) -> Result<Vec<NumericPoly>> {
    let pm = preset_by_name("polMat2")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count).map(|_| sample_poly(&pm, deg, false, &mut rng)).collect())
}
