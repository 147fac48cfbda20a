//! Finite unitary power dilations and the compression maps built from them.

mod psi;

pub use psi::{psi_compression_check, psi_construction, PsiConstruction, PsiStep};

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::params;
use crate::report::{CheckReport, ItemResult};

/// Slack allowed on `‖T‖ <= 1`.
pub const CONTRACTION_TOL: f64 = 1e-12;

type CMat = DMatrix<Complex64>;

pub fn spectral_norm(a: &CMat) -> f64 {
    if a.is_empty() {
        return 0.0;
    }
    a.singular_values().max()
}

fn check_contraction(t: &CMat) -> Result<()> {
    if !t.is_square() {
        return Err(Error::InvalidArgument(format!("{}x{} matrix is not square", t.nrows(), t.ncols())));
    }
    let norm = spectral_norm(t);
    if norm > 1.0 + CONTRACTION_TOL {
        return Err(Error::NotContraction(norm));
    }
    Ok(())
}

/// `(D_T, D_{T*})` with `D_T = (I - T*T)^{1/2}`.
///
/// Both come from one SVD `T = W Σ V*`: the eigenpairs of `I - T*T` are
/// `(1 - σ², V)`, those of `I - TT*` are `(1 - σ², W)`. Eigenvalues are
/// clamped at zero. Sharing `W`, `V` keeps `T D_T = D_{T*} T` exact to rounding.
pub fn defect_operators(t: &CMat) -> (CMat, CMat) {
    let svd = t.clone().svd(true, true);
    let (w, v) = (svd.u.expect("left vectors"), svd.v_t.expect("right vectors").adjoint());
    let roots = svd.singular_values.map(|s| Complex64::new(((1.0 - s) * (1.0 + s)).max(0.0).sqrt(), 0.0));
    let root = CMat::from_diagonal(&roots);
    (&v * &root * v.adjoint(), &w * &root * w.adjoint())
}

/// `[[T, D_{T*}], [D_T, -T*]]`.
pub fn julia_block(t: &CMat) -> Result<CMat> {
    Ok(egervary_unitary(t, 1)?.u)
}

/// A unitary `U` on `m + 1` copies of `H` whose corner compressions
/// reproduce the powers of `T` up to `T^m`.
#[derive(Debug, Clone)]
pub struct FiniteDilation {
    pub t: CMat,
    pub m: usize,
    pub u: CMat,
}

pub fn egervary_unitary(t: &CMat, m: usize) -> Result<FiniteDilation> {
    if m == 0 {
        return Err(Error::InvalidArgument("dilation order m must be >= 1".into()));
    }
    check_contraction(t)?;
    let h = t.nrows();
    let mut u = CMat::zeros(h * (m + 1), h * (m + 1));
    let t_adj = t.adjoint();
    u.view_mut((0, 0), (h, h)).copy_from(t);
    let (d_t, d_t_adj) = defect_operators(t);
    u.view_mut((h, 0), (h, h)).copy_from(&d_t);
    u.view_mut((0, m * h), (h, h)).copy_from(&d_t_adj);
    u.view_mut((h, m * h), (h, h)).copy_from(&(-t_adj));
    for k in 1..m {
        u.view_mut(((k + 1) * h, k * h), (h, h)).fill_with_identity();
    }
    Ok(FiniteDilation { t: t.clone(), m, u })
}

impl FiniteDilation {
    /// Dimension of the dilated space.
    pub fn dim(&self) -> usize {
        self.u.nrows()
    }

    pub fn h(&self) -> usize {
        self.t.nrows()
    }

    /// `P₀ Uⁿ |₀`.
    pub fn compressed_power(&self, n: usize) -> CMat {
        let h = self.h();
        let mut cols = CMat::identity(self.dim(), h);
        for _ in 0..n {
            cols = &self.u * cols;
        }
        cols.rows(0, h).into_owned()
    }

    pub fn unitarity_defect(&self) -> f64 {
        spectral_norm(&(self.u.adjoint() * &self.u - CMat::identity(self.dim(), self.dim())))
    }

    /// `‖P₀Uⁿ|₀ - Tⁿ‖`.
    pub fn power_defect(&self, n: usize) -> f64 {
        let mut tn = CMat::identity(self.h(), self.h());
        for _ in 0..n {
            tn = &tn * &self.t;
        }
        spectral_norm(&(self.compressed_power(n) - tn))
    }

    pub fn check(&self, tol: f64) -> CheckReport {
        let mut items = vec![ItemResult::residual("unitarity", self.unitarity_defect(), tol)];
        items.extend((0..=self.m).map(|n| ItemResult::residual(format!("power n={n}"), self.power_defect(n), tol)));
        CheckReport::new("dilation", params! {"h" => self.h(), "m" => self.m, "tol" => tol}, items)
    }
}
