use num_complex::Complex64;
use rayon::prelude::*;

use super::tensor::TensorOperator;

/// Compressed sparse-column copy of a [`TensorOperator`], for repeated
/// products inside power iteration.
#[derive(Debug, Clone)]
pub struct SparseOperator {
    dim: usize,
    col_ptr: Vec<usize>,
    rows: Vec<usize>,
    vals: Vec<Complex64>,
}

impl SparseOperator {
    pub fn from_tensor(t: &TensorOperator) -> Self {
        let dim = t.dim();
        let cols: Vec<Vec<(usize, Complex64)>> = (0..dim)
            .into_par_iter()
            .map(|j| t.apply_basis(&t.multi_index(j)).expect("index in range"))
            .collect();
        let mut col_ptr = Vec::with_capacity(dim + 1);
        col_ptr.push(0);
        let nnz = cols.iter().map(Vec::len).sum();
        let mut rows = Vec::with_capacity(nnz);
        let mut vals = Vec::with_capacity(nnz);
        for c in cols {
            for (r, v) in c {
                rows.push(r);
                vals.push(v);
            }
            col_ptr.push(rows.len());
        }
        SparseOperator { dim, col_ptr, rows, vals }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn nnz(&self) -> usize {
        self.vals.len()
    }

    /// `A x`.
    pub fn matvec(&self, x: &[Complex64]) -> Vec<Complex64> {
        let mut y = vec![Complex64::new(0.0, 0.0); self.dim];
        for (j, &xj) in x.iter().enumerate() {
            for k in self.col_ptr[j]..self.col_ptr[j + 1] {
                y[self.rows[k]] += self.vals[k] * xj;
            }
        }
        y
    }

    /// `A* y`.
    pub fn adjoint_matvec(&self, y: &[Complex64]) -> Vec<Complex64> {
        (0..self.dim)
            .map(|j| {
                (self.col_ptr[j]..self.col_ptr[j + 1])
                    .map(|k| self.vals[k].conj() * y[self.rows[k]])
                    .sum()
            })
            .collect()
    }
}

/// Upper bound on the number of stored entries of `t` in sparse form.
pub fn nnz_bound(t: &TensorOperator) -> usize {
    let per_col: usize = t
        .terms()
        .iter()
        .map(|term| {
            term.factors
                .iter()
                .map(|f| (0..f.dim()).map(|c| f.column(c).len()).max().unwrap_or(0))
                .product::<usize>()
        })
        .sum();
    per_col.saturating_mul(t.dim())
}
