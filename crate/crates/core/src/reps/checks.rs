use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::family::Family;
use super::representation::Representation;
use crate::algebra::{Letter, Word};
use crate::error::{Error, Result};
use crate::fockops::{op_norm, sparse_norm, TensorOperator, DEFAULT_MAX_ITER, DEFAULT_TOL};
use crate::params;
use crate::report::{CheckReport, ItemResult};

/// Interior multi-indices (every slot index `< N - pad`): all of them when
/// there are at most `samples`, otherwise `samples` seeded uniform draws.
pub fn interior_indices(dims: &[usize], pad: usize, samples: usize, seed: u64) -> Result<Vec<Vec<usize>>> {
    for &n in dims {
        if pad >= n {
            return Err(Error::PadTooLarge { n, pad });
        }
    }
    let extents: Vec<usize> = dims.iter().map(|n| n - pad).collect();
    let total = extents.iter().try_fold(1usize, |acc, &e| acc.checked_mul(e)).unwrap_or(usize::MAX);
    if total <= samples {
        return Ok((0..total)
            .map(|mut flat| {
                let mut idx = vec![0; extents.len()];
                for (k, e) in extents.iter().enumerate().rev() {
                    idx[k] = flat % e;
                    flat /= e;
                }
                idx
            })
            .collect());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..samples)
        .map(|_| extents.iter().map(|&e| rng.random_range(0..e)).collect())
        .collect())
}

/// Largest `‖T e_i‖` over the given basis multi-indices.
pub fn max_basis_residual(t: &TensorOperator, indices: &[Vec<usize>]) -> Result<f64> {
    indices
        .iter()
        .map(|idx| Ok(sparse_norm(&t.apply_basis(idx)?)))
        .try_fold(0.0f64, |m, r: Result<f64>| Ok(m.max(r?)))
}

/// Residual of every defining relation of the representation's algebra on
/// sampled interior basis vectors.
pub fn relation_residuals(
    rep: &Representation,
    pad: usize,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Result<CheckReport> {
    let indices = interior_indices(rep.dims(), pad, samples, seed)?;
    let preset = rep.preset().clone();
    let items = preset
        .relations
        .par_iter()
        .map(|rel| {
            let op = rep.evaluate(&rel.difference(&preset))?;
            let r = max_basis_residual(&op, &indices)?;
            Ok(ItemResult::residual(rel.label.clone(), r, tol))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckReport::new(
        "relation_residuals",
        params! {
            "family" => rep.label(), "preset" => preset.name(), "dims" => rep.dims(),
            "q" => rep.q(), "pad" => pad, "samples" => indices.len(), "seed" => seed, "tol" => tol,
        },
        items,
    ))
}

fn dist(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm_sqr()).sum::<f64>().sqrt()
}

/// Coherent-state equalities at the vacuum of a three-slot representation:
/// `(Z_2^2)*Ω = (Z_2^1)*Ω = (Z_1^2)*Ω = 0` and `(Z_1^1)*Ω = e^{-iφ}Ω`.
pub fn coherent_check(rep: &Representation, tol: f64) -> Result<CheckReport> {
    if rep.dims().len() != 3 || rep.preset().name() != "polMat2" {
        return Err(Error::InvalidArgument(
            "coherent_check needs a three-slot polMat2 representation".into(),
        ));
    }
    let omega = rep.vacuum();
    let expected = Complex64::from_polar(1.0, -rep.spec().phi);
    let mut items = Vec::new();
    for (name, scale) in [
        ("z_2^2*", Complex64::new(0.0, 0.0)),
        ("z_2^1*", Complex64::new(0.0, 0.0)),
        ("z_1^2*", Complex64::new(0.0, 0.0)),
        ("z_1^1*", expected),
    ] {
        let v = rep.image_of(name)?.matvec(&omega)?;
        let target: Vec<Complex64> = omega.iter().map(|z| z * scale).collect();
        items.push(ItemResult::residual(format!("{name} vacuum"), dist(&v, &target), tol));
    }
    Ok(CheckReport::new("coherent_check", params! {"family" => rep.label(), "tol" => tol}, items))
}

/// All words of length `<= max_len` over the full alphabet, shortest first.
pub fn words_up_to(letters: usize, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::new()];
    let mut layer = vec![Word::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                (0..letters as Letter).map(move |l| {
                    let mut w = w.clone();
                    w.push(l);
                    w
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

fn gram(rep: &Representation, words: &[Word]) -> Result<Vec<Vec<Complex64>>> {
    let omega = rep.vacuum();
    let vecs = words
        .par_iter()
        .map(|w| rep.apply_word(w, &omega))
        .collect::<Result<Vec<_>>>()?;
    Ok(vecs
        .par_iter()
        .map(|a| {
            vecs.iter()
                .map(|b| a.iter().zip(b).map(|(x, y)| x.conj() * y).sum())
                .collect()
        })
        .collect())
}

/// Compares `⟨A(w)Ω, A(w')Ω⟩` with `⟨B(w)Ω, B(w')Ω⟩` over all words of length
/// at most `max_word_len`; one item per row `w`.
pub fn gram_equivalence(
    a: &Representation,
    b: &Representation,
    max_word_len: usize,
    tol: f64,
) -> Result<CheckReport> {
    if a.preset().name() != b.preset().name() {
        return Err(Error::PresetMismatch { left: a.preset().name(), right: b.preset().name() });
    }
    let words = words_up_to(a.preset().letter_count(), max_word_len);
    let (ga, gb) = (gram(a, &words)?, gram(b, &words)?);
    let items = words
        .iter()
        .enumerate()
        .map(|(i, w)| {
            let defect = ga[i]
                .iter()
                .zip(&gb[i])
                .map(|(x, y)| (x - y).norm())
                .fold(0.0, f64::max);
            let lhs = ga[i].iter().map(|z| z.norm()).fold(0.0, f64::max);
            let rhs = gb[i].iter().map(|z| z.norm()).fold(0.0, f64::max);
            ItemResult::numeric(a.preset().word_name(w), lhs, rhs, defect, defect <= tol)
        })
        .collect();
    Ok(CheckReport::new(
        "gram_equivalence",
        params! {
            "a" => a.label(), "b" => b.label(), "dims" => a.dims(), "q" => a.q(),
            "max_word_len" => max_word_len, "words" => words.len(), "tol" => tol,
        },
        items,
    ))
}

/// Diagonal pairs of `(ρ(z_1^2), ρ(z_2^1))` against `(e^{iφ₂}q^k, e^{iφ₁}q^k)`,
/// plus commutator and normality residuals.
pub fn joint_spectrum_check(rep: &Representation, k_max: usize, tol: f64) -> Result<CheckReport> {
    if rep.family() != Family::Rho {
        return Err(Error::InvalidArgument("joint_spectrum_check needs a rho representation".into()));
    }
    let n = rep.dim();
    if k_max >= n {
        return Err(Error::InvalidArgument(format!("k_max = {k_max} must be < N = {n}")));
    }
    let a = rep.image_of("z_1^2")?.materialize();
    let b = rep.image_of("z_2^1")?.materialize();
    let (p1, p2) = (rep.spec().phi1, rep.spec().phi2);
    let q = rep.q();
    let mut items = Vec::new();
    for k in 0..=k_max {
        let qk = q.powi(k as i32);
        let (ea, eb) = (Complex64::from_polar(qk, p2), Complex64::from_polar(qk, p1));
        let defect = (a[(k, k)] - ea).norm().max((b[(k, k)] - eb).norm());
        items.push(ItemResult::numeric(format!("k={k}"), a[(k, k)].norm(), qk, defect, defect <= tol));
    }
    let spectral = |m: nalgebra::DMatrix<Complex64>| {
        let t = TensorOperator::elementary(
            Complex64::new(1.0, 0.0),
            vec![crate::fockops::FactorMatrix::from_dense(m)],
        );
        op_norm(&t, DEFAULT_TOL, DEFAULT_MAX_ITER, 0).value
    };
    let comm = spectral(&a * &b - &b * &a);
    items.push(ItemResult::residual("commutator", comm, tol));
    for (name, m) in [("normality z_1^2", &a), ("normality z_2^1", &b)] {
        let r = spectral(m * m.adjoint() - m.adjoint() * m);
        items.push(ItemResult::residual(name, r, tol));
    }
    Ok(CheckReport::new(
        "joint_spectrum",
        params! {"family" => rep.label(), "n" => n, "q" => q, "k_max" => k_max, "tol" => tol},
        items,
    ))
}
