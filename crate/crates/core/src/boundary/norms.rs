use std::collections::BTreeMap;
use std::f64::consts::PI;

use nalgebra::DMatrix;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::sampler::PolySample;
use crate::algebra::{AlgebraPreset, Letter};
use crate::error::{Error, Result};
use crate::fockops::{
    op_norm, NormEstimate, TensorOperator, DEFAULT_MAX_ITER, DEFAULT_TOL, DENSE_LIMIT,
};
use crate::params;
use crate::report::{CheckReport, ItemResult};
use crate::reps::{build_rep, Family, FamilySpec, NumericPoly, Representation, RHO_CHARGES};

/// `2πk / grid` for `k = 0..grid`.
pub fn grid_angles(grid: usize) -> Vec<f64> {
    (0..grid).map(|k| 2.0 * PI * k as f64 / grid as f64).collect()
}

/// Image of a sample: the block operator `(π(a_ij))` on `C^n ⊗ H`.
pub fn evaluate_sample(rep: &Representation, a: &PolySample) -> Result<TensorOperator> {
    if a.n == 1 {
        return rep.evaluate_numeric(&a.entries[0]);
    }
    let blocks = (0..a.n)
        .map(|i| (0..a.n).map(|j| rep.evaluate_numeric(a.entry(i, j))).collect())
        .collect::<Result<Vec<Vec<_>>>>()?;
    TensorOperator::block(&blocks)
}

fn norm_of(rep: &Representation, a: &PolySample, seed: u64) -> Result<NormEstimate> {
    Ok(op_norm(&evaluate_sample(rep, a)?, DEFAULT_TOL, DEFAULT_MAX_ITER, seed))
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct QuotientNorm {
    pub value: f64,
    pub phi1: f64,
    pub phi2: f64,
}

/// `max` over the `grid x grid` angle grid of `‖ρ_{φ₁,φ₂}^{(n)}(a)‖` at
/// truncation `n_rho`. Ties go to the first grid point.
pub fn quotient_norm(a: &PolySample, grid: usize, n_rho: usize, q: f64, seed: u64) -> Result<QuotientNorm> {
    if grid == 0 {
        return Err(Error::InvalidArgument("grid must be >= 1".into()));
    }
    let angles = grid_angles(grid);
    let points: Vec<(f64, f64)> =
        angles.iter().flat_map(|&a1| angles.iter().map(move |&a2| (a1, a2))).collect();
    let values = if a.n * n_rho <= DENSE_LIMIT {
        let parts = rho_expansion(a, n_rho, q)?;
        points
            .par_iter()
            .map(|&(p1, p2)| {
                let mut m = DMatrix::<Complex64>::zeros(a.n * n_rho, a.n * n_rho);
                for ((c1, c2), part) in &parts {
                    m += part * Complex64::from_polar(1.0, *c1 as f64 * p1 + *c2 as f64 * p2);
                }
                Ok(m.singular_values().max())
            })
            .collect::<Result<Vec<f64>>>()?
    } else {
        points
            .par_iter()
            .map(|&(p1, p2)| {
                let rho = build_rep(&FamilySpec::new(Family::Rho).phis(p1, p2), n_rho, q)?;
                Ok(norm_of(&rho, a, seed)?.value)
            })
            .collect::<Result<Vec<f64>>>()?
    };
    let (best, value) = values
        .iter()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |acc, (i, &v)| if v > acc.1 { (i, v) } else { acc });
    Ok(QuotientNorm { value, phi1: points[best].0, phi2: points[best].1 })
}

type ChargePart = ((i32, i32), DMatrix<Complex64>);

/// Phase charge of a word under ρ.
fn rho_charge(preset: &AlgebraPreset, w: &[Letter]) -> (i32, i32) {
    w.iter().fold((0, 0), |(a, b), &l| {
        let info = &preset.letters[l as usize];
        let base = if info.star { info.partner } else { l };
        let k = preset.generators.iter().position(|&g| g == base).expect("generator letter");
        let (c1, c2) = RHO_CHARGES[k];
        let sign = if info.star { -1 } else { 1 };
        (a + sign * c1, b + sign * c2)
    })
}

/// Dense matrices `M_c` with `ρ_{φ₁,φ₂}(a) = Σ_c e^{i(c₁φ₁ + c₂φ₂)} M_c`.
fn rho_expansion(a: &PolySample, n_rho: usize, q: f64) -> Result<Vec<ChargePart>> {
    let rho0 = build_rep(&FamilySpec::new(Family::Rho).phis(0.0, 0.0), n_rho, q)?;
    let preset = rho0.preset().clone();
    let mut groups: BTreeMap<(i32, i32), Vec<NumericPoly>> = BTreeMap::new();
    for (k, entry) in a.entries.iter().enumerate() {
        for (w, c) in &entry.terms {
            let slot = groups.entry(rho_charge(&preset, w)).or_insert_with(|| {
                vec![NumericPoly { preset: preset.clone(), terms: Vec::new() }; a.entries.len()]
            });
            slot[k].terms.push((w.clone(), *c));
        }
    }
    groups
        .into_iter()
        .map(|(c, entries)| {
            let part = PolySample { id: a.id, n: a.n, deg: a.deg, entries };
            Ok((c, evaluate_sample(&rho0, &part)?.materialize()))
        })
        .collect()
}

/// `γ_{φ₁,φ₂}(p)` as a complex number.
pub fn gamma_value(p: &NumericPoly, phi1: f64, phi2: f64, q: f64) -> Result<Complex64> {
    let g = build_rep(&FamilySpec::new(Family::Gamma).phis(phi1, phi2), 2, q)?;
    let op = g.evaluate_numeric(p)?;
    Ok(op.terms().iter().map(|t| t.coeff).sum())
}

/// For each scalar sample: `max_grid |γ(p)| <= quotient_norm(p) + tol`.
pub fn gamma_bound_check(
    samples: &[PolySample],
    grid: usize,
    n_rho: usize,
    q: f64,
    tol: f64,
    seed: u64,
) -> Result<CheckReport> {
    let angles = grid_angles(grid);
    let items = samples
        .par_iter()
        .map(|s| {
            if s.n != 1 {
                return Err(Error::InvalidArgument("gamma_bound_check takes scalar samples".into()));
            }
            let mut g = 0.0f64;
            for &a1 in &angles {
                for &a2 in &angles {
                    g = g.max(gamma_value(&s.entries[0], a1, a2, q)?.norm());
                }
            }
            let qn = quotient_norm(s, grid, n_rho, q, seed)?.value;
            Ok(ItemResult::numeric(format!("sample {}", s.id), g, qn, (g - qn).max(0.0), g <= qn + tol))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CheckReport::new(
        "gamma_bound",
        params! {"samples" => samples.len(), "grid" => grid, "n_rho" => n_rho, "q" => q, "tol" => tol, "seed" => seed},
        items,
    ))
}

/// One row of the isometry table.
#[derive(Debug, Clone, Serialize)]
pub struct IsometryRow {
    pub sample: usize,
    pub n: usize,
    pub f: f64,
    pub q: f64,
    /// `|F - Q| / max(F, Q)`.
    pub defect: f64,
    pub f_converged: bool,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct IsometryParams {
    pub grid: usize,
    pub n_fock: usize,
    pub n_rho: usize,
    pub q: f64,
    pub slack: f64,
    pub seed: u64,
}

/// Two-sided comparison of the Fock norm `F` (truncation `n_fock`) with the
/// quotient norm `Q` (truncation `n_rho`) for every sample.
pub fn isometry_check(samples: &[PolySample], p: IsometryParams) -> Result<(CheckReport, Vec<IsometryRow>)> {
    if let Some(s) = samples.iter().find(|s| !s.is_holomorphic()) {
        return Err(Error::InvalidArgument(format!("sample {} is not holomorphic", s.id)));
    }
    let fock = build_rep(&FamilySpec::new(Family::PiF), p.n_fock, p.q)?;
    let rows = samples
        .iter()
        .map(|s| {
            let f = norm_of(&fock, s, p.seed)?;
            let qn = quotient_norm(s, p.grid, p.n_rho, p.q, p.seed)?.value;
            let scale = f.value.max(qn);
            let defect = if scale > 0.0 { (f.value - qn).abs() / scale } else { 0.0 };
            Ok(IsometryRow { sample: s.id, n: s.n, f: f.value, q: qn, defect, f_converged: f.converged })
        })
        .collect::<Result<Vec<_>>>()?;
    let items = rows
        .iter()
        .map(|r| {
            ItemResult::numeric(
                format!("sample {} ({}x{})", r.sample, r.n, r.n),
                r.f,
                r.q,
                r.defect,
                r.defect <= p.slack,
            )
        })
        .collect();
    let report = CheckReport::new(
        "isometry",
        params! {
            "samples" => samples.len(), "grid" => p.grid, "n_fock" => p.n_fock, "n_rho" => p.n_rho,
            "q" => p.q, "slack" => p.slack, "seed" => p.seed,
        },
        items,
    );
    Ok((report, rows))
}

/// `‖π(p)‖ <= (1 + slack)‖π_F(p)‖` for every sample and family. `π_F` itself
/// (and any `PiF` entry of `families`) is truncated at `n_fock`.
pub fn fock_dominance_check(
    samples: &[NumericPoly],
    families: &[FamilySpec],
    n: usize,
    n_fock: usize,
    q: f64,
    slack: f64,
    seed: u64,
) -> Result<CheckReport> {
    let fock = build_rep(&FamilySpec::new(Family::PiF), n_fock, q)?;
    let reps = families
        .iter()
        .map(|f| build_rep(f, if f.family == Family::PiF { n_fock } else { n }, q))
        .collect::<Result<Vec<_>>>()?;
    let mut items = Vec::new();
    for (i, p) in samples.iter().enumerate() {
        let f = op_norm(&fock.evaluate_numeric(p)?, DEFAULT_TOL, DEFAULT_MAX_ITER, seed).value;
        let norms = reps
            .par_iter()
            .map(|r| Ok(op_norm(&r.evaluate_numeric(p)?, DEFAULT_TOL, DEFAULT_MAX_ITER, seed).value))
            .collect::<Result<Vec<f64>>>()?;
        for (r, v) in reps.iter().zip(norms) {
            let ratio = if f > 0.0 { v / f } else if v > 0.0 { f64::INFINITY } else { 1.0 };
            items.push(ItemResult::numeric(
                format!("sample {i} {}", r.label()),
                v,
                f,
                (ratio - 1.0).max(0.0),
                v <= f + slack * f,
            ));
        }
    }
    Ok(CheckReport::new(
        "fock_dominance",
        params! {
            "samples" => samples.len(), "families" => families.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
            "n" => n, "n_fock" => n_fock, "q" => q, "slack" => slack, "seed" => seed,
        },
        items,
    ))
}
