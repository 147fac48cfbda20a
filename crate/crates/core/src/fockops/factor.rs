use std::fmt;

use nalgebra::DMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Which named operator a factor is; anything built by arithmetic is `Composite`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FactorKind {
    S,
    SAdj,
    C,
    D,
    I,
    Composite,
}

impl fmt::Display for FactorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            FactorKind::S => "S",
            FactorKind::SAdj => "S*",
            FactorKind::C => "C",
            FactorKind::D => "d",
            FactorKind::I => "I",
            FactorKind::Composite => "composite",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for FactorKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S" => Ok(FactorKind::S),
            "S*" => Ok(FactorKind::SAdj),
            "C" => Ok(FactorKind::C),
            "d" | "D" => Ok(FactorKind::D),
            "I" | "1" => Ok(FactorKind::I),
            _ => Err(Error::InvalidArgument(format!("unknown factor kind `{s}`"))),
        }
    }
}

pub(crate) fn check_q(q: f64) -> Result<()> {
    if q > 0.0 && q < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidQ(q))
    }
}

/// A dense square matrix acting on one tensor slot, with a column-wise
/// sparsity index used by the structured kernels.
#[derive(Clone)]
pub struct FactorMatrix {
    kind: FactorKind,
    mat: DMatrix<Complex64>,
    cols: Vec<Vec<(usize, Complex64)>>,
}

impl FactorMatrix {
    /// The truncated S, S*, C, d or identity on `C^n` at deformation `q`.
    ///
    /// S kills the top basis vector (hard truncation).
    pub fn build(kind: FactorKind, n: usize, q: f64) -> Result<Self> {
        check_q(q)?;
        if n < 2 {
            return Err(Error::InvalidDimension(n));
        }
        let mut m = DMatrix::from_element(n, n, ZERO);
        match kind {
            FactorKind::S => (0..n - 1).for_each(|k| m[(k + 1, k)] = ONE),
            FactorKind::SAdj => (0..n - 1).for_each(|k| m[(k, k + 1)] = ONE),
            FactorKind::C => (0..n).for_each(|k| m[(k, k)] = c_entry(q, k).into()),
            FactorKind::D => (0..n).for_each(|k| m[(k, k)] = q.powi(k as i32).into()),
            FactorKind::I => (0..n).for_each(|k| m[(k, k)] = ONE),
            FactorKind::Composite => {
                return Err(Error::InvalidArgument(
                    "a composite factor cannot be built by kind".into(),
                ))
            }
        }
        Ok(Self::with_kind(kind, m))
    }

    pub fn identity(n: usize) -> Self {
        Self::with_kind(FactorKind::I, DMatrix::identity(n, n))
    }

    /// A 1x1 factor, used for scalar-valued representations.
    pub fn scalar(z: Complex64) -> Self {
        if z == ONE {
            return Self::identity(1);
        }
        Self::from_dense(DMatrix::from_element(1, 1, z))
    }

    pub fn from_dense(mat: DMatrix<Complex64>) -> Self {
        assert!(mat.is_square(), "factor matrices are square");
        Self::with_kind(FactorKind::Composite, mat)
    }

    /// Matrix unit `E_{ij}` on `C^n`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = DMatrix::from_element(n, n, ZERO);
        m[(i, j)] = ONE;
        Self::from_dense(m)
    }

    fn with_kind(kind: FactorKind, mat: DMatrix<Complex64>) -> Self {
        let cols = (0..mat.ncols())
            .map(|c| {
                (0..mat.nrows())
                    .filter_map(|r| {
                        let v = mat[(r, c)];
                        (v != ZERO).then_some((r, v))
                    })
                    .collect()
            })
            .collect();
        FactorMatrix { kind, mat, cols }
    }

    pub fn kind(&self) -> FactorKind {
        self.kind
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.mat
    }

    pub fn is_identity(&self) -> bool {
        self.kind == FactorKind::I
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(|c| c.is_empty())
    }

    /// Nonzero entries `(row, value)` of column `c`.
    pub fn column(&self, c: usize) -> &[(usize, Complex64)] {
        &self.cols[c]
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn adjoint(&self) -> Self {
        let kind = match self.kind {
            FactorKind::S => FactorKind::SAdj,
            FactorKind::SAdj => FactorKind::S,
            k => k,
        };
        Self::with_kind(kind, self.mat.adjoint())
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &FactorMatrix) -> Self {
        if self.is_identity() {
            return other.clone();
        }
        if other.is_identity() {
            return self.clone();
        }
        Self::from_dense(&self.mat * &other.mat)
    }

    /// `a * self + b * other`.
    pub fn combine(&self, a: Complex64, other: &FactorMatrix, b: Complex64) -> Self {
        Self::from_dense(self.mat.map(|x| x * a) + other.mat.map(|x| x * b))
    }

    /// Applies the factor to a single-slot vector.
    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        let mut out = vec![ZERO; self.dim()];
        for (c, &x) in v.iter().enumerate() {
            if x == ZERO {
                continue;
            }
            for &(r, a) in &self.cols[c] {
                out[r] += a * x;
            }
        }
        out
    }
}

impl PartialEq for FactorMatrix {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat
    }
}

impl fmt::Debug for FactorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.kind, self.dim())
    }
}

/// `(1 - q^{2k})^{1/2}`.
pub fn c_entry(q: f64, k: usize) -> f64 {
    (1.0 - q.powi(2 * k as i32)).sqrt()
}

/// Builds one of the named truncated operators.
pub fn build_factor(kind: FactorKind, n: usize, q: f64) -> Result<FactorMatrix> {
    FactorMatrix::build(kind, n, q)
}
