use std::collections::BTreeMap;
use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rayon::prelude::*;

use super::factor::FactorMatrix;
use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// `coeff * (F_1 ⊗ ... ⊗ F_k)`.
#[derive(Clone, Debug)]
pub struct Term {
    pub coeff: Complex64,
    pub factors: Vec<Arc<FactorMatrix>>,
}

/// A finite sum of elementary tensors of slot matrices.
///
/// Vectors are laid out row-major over the slots: the last slot varies fastest.
#[derive(Clone, Debug)]
pub struct TensorOperator {
    dims: Vec<usize>,
    terms: Vec<Term>,
}

impl TensorOperator {
    pub fn zero(dims: &[usize]) -> Self {
        TensorOperator { dims: dims.to_vec(), terms: Vec::new() }
    }

    pub fn identity(dims: &[usize]) -> Self {
        Self::scalar(dims, ONE)
    }

    /// `z` times the identity.
    pub fn scalar(dims: &[usize], z: Complex64) -> Self {
        let factors = dims.iter().map(|&n| Arc::new(FactorMatrix::identity(n))).collect();
        let mut op = Self::zero(dims);
        if z != ZERO {
            op.terms.push(Term { coeff: z, factors });
        }
        op
    }

    pub fn elementary(coeff: Complex64, factors: Vec<FactorMatrix>) -> Self {
        let dims: Vec<usize> = factors.iter().map(FactorMatrix::dim).collect();
        let mut op = Self::zero(&dims);
        if coeff != ZERO {
            op.terms.push(Term { coeff, factors: factors.into_iter().map(Arc::new).collect() });
        }
        op
    }

    /// Places `factor` in slot `slot` with identities elsewhere.
    pub fn local(dims: &[usize], slot: usize, factor: FactorMatrix) -> Self {
        assert_eq!(dims[slot], factor.dim(), "slot dimension");
        let factors = dims
            .iter()
            .enumerate()
            .map(|(k, &n)| if k == slot { factor.clone() } else { FactorMatrix::identity(n) })
            .collect();
        Self::elementary(ONE, factors)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Total dimension of the tensor product space.
    pub fn dim(&self) -> usize {
        self.dims.iter().product()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_dims(&self, other: &TensorOperator) -> Result<()> {
        if self.dims != other.dims {
            return Err(Error::DimensionMismatch { expected: self.dim(), actual: other.dim() });
        }
        Ok(())
    }

    pub fn adjoint(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                coeff: t.coeff.conj(),
                factors: t.factors.iter().map(|f| Arc::new(f.adjoint())).collect(),
            })
            .collect();
        TensorOperator { dims: self.dims.clone(), terms }
    }

    pub fn scale(&self, z: Complex64) -> Self {
        if z == ZERO {
            return Self::zero(&self.dims);
        }
        let mut out = self.clone();
        out.terms.iter_mut().for_each(|t| t.coeff *= z);
        out
    }

    pub fn add(&self, other: &TensorOperator) -> Result<Self> {
        self.check_dims(other)?;
        let mut out = self.clone();
        out.terms.extend(other.terms.iter().cloned());
        Ok(out.compress())
    }

    pub fn sub(&self, other: &TensorOperator) -> Result<Self> {
        self.add(&other.scale(-ONE))
    }

    /// `self ∘ other`; term counts multiply before compression.
    pub fn compose(&self, other: &TensorOperator) -> Result<Self> {
        self.check_dims(other)?;
        let mut out = Self::zero(&self.dims);
        for a in &self.terms {
            for b in &other.terms {
                let factors = a
                    .factors
                    .iter()
                    .zip(&b.factors)
                    .map(|(x, y)| {
                        if y.is_identity() {
                            x.clone()
                        } else if x.is_identity() {
                            y.clone()
                        } else {
                            Arc::new(x.mul(y))
                        }
                    })
                    .collect();
                out.terms.push(Term { coeff: a.coeff * b.coeff, factors });
            }
        }
        Ok(out.compress())
    }

    /// Prepends a slot carrying `factor` to every term.
    pub fn with_leading(&self, factor: &FactorMatrix) -> Self {
        let f = Arc::new(factor.clone());
        let mut dims = vec![factor.dim()];
        dims.extend_from_slice(&self.dims);
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let mut factors = vec![f.clone()];
                factors.extend(t.factors.iter().cloned());
                Term { coeff: t.coeff, factors }
            })
            .collect();
        TensorOperator { dims, terms }
    }

    /// `I_before ⊗ self ⊗ I_after` over the given extra slots.
    pub fn embed(&self, before: &[usize], after: &[usize]) -> Self {
        let ids = |dims: &[usize]| -> Vec<Arc<FactorMatrix>> {
            dims.iter().map(|&n| Arc::new(FactorMatrix::identity(n))).collect()
        };
        let (pre, post) = (ids(before), ids(after));
        let dims = [before, &self.dims, after].concat();
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let factors = pre.iter().chain(&t.factors).chain(&post).cloned().collect();
                Term { coeff: t.coeff, factors }
            })
            .collect();
        TensorOperator { dims, terms }
    }

    /// The block operator `Σ E_ij ⊗ blocks[i][j]` on `C^n ⊗ H`.
    pub fn block(blocks: &[Vec<TensorOperator>]) -> Result<Self> {
        let n = blocks.len();
        let inner = blocks
            .first()
            .and_then(|r| r.first())
            .ok_or_else(|| Error::InvalidArgument("empty block matrix".into()))?
            .dims
            .clone();
        let mut dims = vec![n];
        dims.extend_from_slice(&inner);
        let mut out = Self::zero(&dims);
        for (i, row) in blocks.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidArgument("block matrix must be square".into()));
            }
            for (j, b) in row.iter().enumerate() {
                if b.dims != inner {
                    return Err(Error::DimensionMismatch {
                        expected: inner.iter().product(),
                        actual: b.dim(),
                    });
                }
                out.terms.extend(b.with_leading(&FactorMatrix::unit(n, i, j)).terms);
            }
        }
        Ok(out.compress())
    }

    /// Merges terms: exact duplicates are summed, then terms agreeing in all
    /// slots but one are folded into a single term. Zero terms are dropped.
    pub fn compress(mut self) -> Self {
        let mut terms: Vec<Term> = Vec::with_capacity(self.terms.len());
        'outer: for t in self.terms.drain(..) {
            for u in terms.iter_mut() {
                if same_factors(&u.factors, &t.factors, None) {
                    u.coeff += t.coeff;
                    continue 'outer;
                }
            }
            terms.push(t);
        }
        terms.retain(|t| t.coeff != ZERO && t.factors.iter().all(|f| !f.is_zero()));
        if terms.len() > 1 {
            for slot in 0..self.dims.len() {
                terms = fold_slot(terms, slot);
            }
        }
        terms.retain(|t| t.coeff != ZERO && t.factors.iter().all(|f| !f.is_zero()));
        self.terms = terms;
        self
    }

    /// Applies the operator slot by slot, never forming the full matrix.
    pub fn matvec(&self, v: &[Complex64]) -> Result<Vec<Complex64>> {
        let n = self.dim();
        if v.len() != n {
            return Err(Error::DimensionMismatch { expected: n, actual: v.len() });
        }
        let apply = |t: &Term| {
            let mut cur = v.to_vec();
            for (k, f) in t.factors.iter().enumerate() {
                if !f.is_identity() {
                    cur = apply_slot(&self.dims, k, f, &cur);
                }
            }
            cur
        };
        let parts: Vec<Vec<Complex64>> = if self.terms.len() > 1 && n * self.terms.len() > 1 << 16 {
            self.terms.par_iter().map(apply).collect()
        } else {
            self.terms.iter().map(apply).collect()
        };
        let mut out = vec![ZERO; n];
        for (t, p) in self.terms.iter().zip(parts) {
            for (o, x) in out.iter_mut().zip(p) {
                *o += t.coeff * x;
            }
        }
        Ok(out)
    }

    /// Image of the basis vector with the given multi-index, as sorted sparse
    /// `(flat index, value)` pairs.
    pub fn apply_basis(&self, index: &[usize]) -> Result<Vec<(usize, Complex64)>> {
        if index.len() != self.dims.len() || index.iter().zip(&self.dims).any(|(i, n)| i >= n) {
            return Err(Error::InvalidArgument(format!("basis index {index:?} out of range")));
        }
        let mut acc: BTreeMap<usize, Complex64> = BTreeMap::new();
        for t in &self.terms {
            let mut partial: Vec<(usize, Complex64)> = vec![(0, t.coeff)];
            for (k, f) in t.factors.iter().enumerate() {
                let col = f.column(index[k]);
                let nk = self.dims[k];
                partial = partial
                    .iter()
                    .flat_map(|&(flat, z)| col.iter().map(move |&(r, a)| (flat * nk + r, z * a)))
                    .collect();
                if partial.is_empty() {
                    break;
                }
            }
            for (i, z) in partial {
                *acc.entry(i).or_insert(ZERO) += z;
            }
        }
        Ok(acc.into_iter().filter(|(_, z)| *z != ZERO).collect())
    }

    /// Dense matrix of the operator (small dimensions only).
    pub fn materialize(&self) -> DMatrix<Complex64> {
        let mut m = DMatrix::from_element(self.dim(), self.dim(), ZERO);
        for t in &self.terms {
            let mut k = DMatrix::from_element(1, 1, t.coeff);
            for f in &t.factors {
                k = k.kronecker(f.matrix());
            }
            m += k;
        }
        m
    }

    /// Flat index of a multi-index.
    pub fn flat_index(&self, index: &[usize]) -> usize {
        index.iter().zip(&self.dims).fold(0, |acc, (i, n)| acc * n + i)
    }

    /// Multi-index of a flat index.
    pub fn multi_index(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.dims.len()];
        for (k, n) in self.dims.iter().enumerate().rev() {
            idx[k] = flat % n;
            flat /= n;
        }
        idx
    }
}

fn same_factors(a: &[Arc<FactorMatrix>], b: &[Arc<FactorMatrix>], skip: Option<usize>) -> bool {
    a.iter()
        .zip(b)
        .enumerate()
        .all(|(k, (x, y))| Some(k) == skip || Arc::ptr_eq(x, y) || x == y)
}

fn fold_slot(terms: Vec<Term>, slot: usize) -> Vec<Term> {
    let mut groups: Vec<Vec<Term>> = Vec::new();
    'outer: for t in terms {
        for g in groups.iter_mut() {
            if same_factors(&g[0].factors, &t.factors, Some(slot)) {
                g.push(t);
                continue 'outer;
            }
        }
        groups.push(vec![t]);
    }
    groups
        .into_iter()
        .map(|mut g| {
            if g.len() == 1 {
                return g.pop().unwrap();
            }
            let mut sum = g[0].factors[slot].matrix().map(|x| x * g[0].coeff);
            for t in &g[1..] {
                sum += t.factors[slot].matrix().map(|x| x * t.coeff);
            }
            let mut factors = g[0].factors.clone();
            factors[slot] = Arc::new(FactorMatrix::from_dense(sum));
            Term { coeff: ONE, factors }
        })
        .collect()
}

/// Applies `f` along axis `k` of a row-major tensor with extents `dims`.
fn apply_slot(dims: &[usize], k: usize, f: &FactorMatrix, v: &[Complex64]) -> Vec<Complex64> {
    let nk = dims[k];
    let inner: usize = dims[k + 1..].iter().product();
    let outer: usize = dims[..k].iter().product();
    let mut out = vec![ZERO; v.len()];
    for o in 0..outer {
        let base = o * nk * inner;
        for c in 0..nk {
            let src = &v[base + c * inner..base + (c + 1) * inner];
            if src.iter().all(|z| *z == ZERO) {
                continue;
            }
            for &(r, a) in f.column(c) {
                let dst = &mut out[base + r * inner..base + (r + 1) * inner];
                for (d, s) in dst.iter_mut().zip(src) {
                    *d += a * s;
                }
            }
        }
    }
    out
}

/// Euclidean norm of a sparse vector.
pub fn sparse_norm(v: &[(usize, Complex64)]) -> f64 {
    v.iter().map(|(_, z)| z.norm_sqr()).sum::<f64>().sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fockops::factor::{build_factor, FactorKind};

    fn cs(n: usize) -> FactorMatrix {
        let c = build_factor(FactorKind::C, n, 0.5).unwrap();
        let s = build_factor(FactorKind::S, n, 0.5).unwrap();
        c.mul(&s)
    }

    #[test]
    fn local_cs_on_vacuum() {
        let dims = [3, 3, 3, 3];
        let op = TensorOperator::local(&dims, 0, cs(3));
        let mut v = vec![ZERO; 81];
        v[0] = ONE;
        let w = op.matvec(&v).unwrap();
        let target = op.flat_index(&[1, 0, 0, 0]);
        assert!((w[target].re - 0.75f64.sqrt()).abs() < 1e-15);
        assert!((w.iter().map(|z| z.norm_sqr()).sum::<f64>() - 0.75).abs() < 1e-15);
    }

    #[test]
    fn compress_folds_single_slot_differences() {
        let n = 4;
        let s = build_factor(FactorKind::S, n, 0.5).unwrap();
        let d = build_factor(FactorKind::D, n, 0.5).unwrap();
        let a = TensorOperator::elementary(ONE, vec![s.clone(), d.clone()]);
        let b = TensorOperator::elementary(Complex64::new(0.0, 2.0), vec![s.clone(), s.clone()]);
        let sum = a.add(&b).unwrap();
        assert_eq!(sum.terms().len(), 1);
        let dense = a.materialize() + b.materialize();
        assert!((sum.materialize() - dense).norm() < 1e-14);
    }

    #[test]
    fn basis_application_matches_dense() {
        let n = 3;
        let s = build_factor(FactorKind::S, n, 0.5).unwrap();
        let d = build_factor(FactorKind::D, n, 0.5).unwrap();
        let op = TensorOperator::elementary(Complex64::new(0.3, -1.0), vec![s, cs(n)])
            .add(&TensorOperator::elementary(ONE, vec![d.clone(), d]))
            .unwrap();
        let m = op.materialize();
        for flat in 0..op.dim() {
            let col = op.apply_basis(&op.multi_index(flat)).unwrap();
            let mut dense = vec![ZERO; op.dim()];
            for (i, z) in col {
                dense[i] = z;
            }
            for (i, z) in dense.iter().enumerate() {
                assert!((z - m[(i, flat)]).norm() < 1e-14);
            }
        }
    }
}
