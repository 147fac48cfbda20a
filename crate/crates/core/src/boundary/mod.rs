//! The ideal J, annihilation tests, quotient norms and the isometry
//! experiments.

mod norms;
mod sampler;

pub use norms::{
    evaluate_sample, fock_dominance_check, gamma_bound_check, gamma_value, grid_angles,
    isometry_check, quotient_norm, IsometryParams, IsometryRow, QuotientNorm,
};
pub use sampler::{
    general_samples, holomorphic_samples, sample_poly, PolySample, TERMS_PER_POLY,
};

use crate::algebra::{preset_by_name, NCPoly};
use crate::error::Result;
use crate::params;
use crate::report::{CheckReport, ItemResult};
use crate::reps::{interior_indices, max_basis_residual, Representation};
use crate::scalar::Scalar;

/// `g_{αβ} = Σ_j q^{4-α-β} z_j^α (z_j^β)* - δ^{αβ}`, indexed `[α-1][β-1]`.
#[derive(Clone, Debug)]
pub struct IdealGenerators {
    pub g: [[NCPoly; 2]; 2],
}

impl IdealGenerators {
    pub fn get(&self, alpha: usize, beta: usize) -> &NCPoly {
        &self.g[alpha - 1][beta - 1]
    }

    /// `("g11", g_11), ("g12", g_12), ...`
    pub fn iter(&self) -> impl Iterator<Item = (String, &NCPoly)> {
        (1..=2).flat_map(move |a| (1..=2).map(move |b| (format!("g{a}{b}"), self.get(a, b))))
    }
}

pub fn j_generators() -> IdealGenerators {
    let pm = preset_by_name("polMat2").expect("polMat2 preset");
    let g = |a: usize, b: usize| -> NCPoly {
        let mut p = NCPoly::zero(&pm);
        for j in 1..=2 {
            let w = format!("z_{j}^{a} z_{j}^{b}*");
            p = p + NCPoly::parse_word(&pm, &w).expect("generator word");
        }
        p = p.scale(&Scalar::q_pow(4 - a as i32 - b as i32));
        if a == b {
            p = p - NCPoly::one(&pm);
        }
        p
    };
    IdealGenerators { g: [[g(1, 1), g(1, 2)], [g(2, 1), g(2, 2)]] }
}

/// Largest interior residual of each `g_{αβ}` under `rep`; the verdict is
/// pass exactly when the representation annihilates all four.
///
/// The vacuum index is always among the tested vectors.
pub fn annihilation_report(
    rep: &Representation,
    pad: usize,
    samples: usize,
    seed: u64,
    tol: f64,
) -> Result<CheckReport> {
    let mut indices = interior_indices(rep.dims(), pad, samples, seed)?;
    let vacuum = vec![0; rep.dims().len()];
    if !indices.contains(&vacuum) {
        indices.insert(0, vacuum.clone());
    }
    let mut items = Vec::new();
    for (label, g) in j_generators().iter() {
        let op = rep.evaluate(g)?;
        items.push(ItemResult::residual(label.clone(), max_basis_residual(&op, &indices)?, tol));
    }
    for (label, g) in j_generators().iter() {
        let op = rep.evaluate(g)?;
        let r = max_basis_residual(&op, std::slice::from_ref(&vacuum))?;
        items.push(ItemResult::residual(format!("{label} vacuum"), r, tol));
    }
    Ok(CheckReport::new(
        "annihilation",
        params! {
            "family" => rep.label(), "dims" => rep.dims(), "q" => rep.q(), "pad" => pad,
            "samples" => indices.len(), "seed" => seed, "tol" => tol,
        },
        items,
    ))
}
