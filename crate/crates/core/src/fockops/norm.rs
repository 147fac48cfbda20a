use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::Serialize;

use super::sparse::{nnz_bound, SparseOperator};
use super::tensor::TensorOperator;

/// Above this many stored entries power iteration uses the structured kernel
/// instead of a sparse copy.
const SPARSE_LIMIT: usize = 50_000_000;

/// Total dimension up to which the dense SVD is used instead of power iteration.
pub const DENSE_LIMIT: usize = 512;
pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 5000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NormMethod {
    Zero,
    DenseSvd,
    PowerIteration,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct NormEstimate {
    pub value: f64,
    pub method: NormMethod,
    pub iterations: usize,
    /// False if power iteration hit `max_iter`; the value is then a lower bound.
    pub converged: bool,
}

pub(crate) fn gaussian_vector(rng: &mut ChaCha8Rng, n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|_| {
            let re: f64 = StandardNormal.sample(rng);
            let im: f64 = StandardNormal.sample(rng);
            Complex64::new(re, im)
        })
        .collect()
}

fn norm2(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Largest singular value of `t`.
///
/// Dense SVD at total dimension <= [`DENSE_LIMIT`], otherwise power iteration
/// on `T*T` from a seeded Gaussian start, stopping when successive estimates
/// agree to relative tolerance `tol`.
pub fn op_norm(t: &TensorOperator, tol: f64, max_iter: usize, seed: u64) -> NormEstimate {
    if t.is_zero() {
        return NormEstimate { value: 0.0, method: NormMethod::Zero, iterations: 0, converged: true };
    }
    if t.dim() <= DENSE_LIMIT {
        return NormEstimate {
            value: dense_norm(t),
            method: NormMethod::DenseSvd,
            iterations: 0,
            converged: true,
        };
    }
    power_norm(t, tol, max_iter, seed)
}

pub fn dense_norm(t: &TensorOperator) -> f64 {
    let m = t.materialize();
    m.singular_values().max()
}

/// Power iteration regardless of dimension.
pub fn power_norm(t: &TensorOperator, tol: f64, max_iter: usize, seed: u64) -> NormEstimate {
    if nnz_bound(t) <= SPARSE_LIMIT {
        let a = SparseOperator::from_tensor(t);
        power_iterate(t.dim(), |v| a.matvec(v), |w| a.adjoint_matvec(w), tol, max_iter, seed)
    } else {
        let adj = t.adjoint();
        power_iterate(
            t.dim(),
            |v| t.matvec(v).expect("dimension checked"),
            |w| adj.matvec(w).expect("dimension checked"),
            tol,
            max_iter,
            seed,
        )
    }
}

fn power_iterate<F, G>(
    dim: usize,
    apply: F,
    apply_adj: G,
    tol: f64,
    max_iter: usize,
    seed: u64,
) -> NormEstimate
where
    F: Fn(&[Complex64]) -> Vec<Complex64>,
    G: Fn(&[Complex64]) -> Vec<Complex64>,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v = gaussian_vector(&mut rng, dim);
    let nv = norm2(&v);
    v.iter_mut().for_each(|z| *z /= nv);
    let mut sigma = 0.0f64;
    for it in 1..=max_iter {
        let w = apply(&v);
        let next = norm2(&w);
        let x = apply_adj(&w);
        let nx = norm2(&x);
        let done = nx == 0.0 || (next - sigma).abs() <= tol * next.max(f64::MIN_POSITIVE);
        if done {
            return NormEstimate {
                value: next,
                method: NormMethod::PowerIteration,
                iterations: it,
                converged: true,
            };
        }
        v = x.into_iter().map(|z| z / nx).collect();
        sigma = next;
    }
    NormEstimate {
        value: sigma,
        method: NormMethod::PowerIteration,
        iterations: max_iter,
        converged: false,
    }
}
