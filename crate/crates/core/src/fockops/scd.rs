use std::sync::Arc;

use num_complex::Complex64;

use super::factor::{build_factor, check_q, FactorKind, FactorMatrix};
use crate::algebra::{preset_by_name, AlgebraPreset, NCPoly};
use crate::error::{Error, Result};
use crate::params;
use crate::report::{CheckReport, ItemResult};
use crate::scalar::{Binding, Scalar};

/// A polynomial in `S`, `C`, `d` and their stars.
#[derive(Clone, Debug, PartialEq)]
pub struct SCdExpression(NCPoly);

impl SCdExpression {
    pub fn preset() -> Arc<AlgebraPreset> {
        preset_by_name("scd").expect("scd preset")
    }

    pub fn new(p: NCPoly) -> Result<Self> {
        if p.preset().name() != "scd" {
            return Err(Error::PresetMismatch { left: p.preset().name(), right: "scd".into() });
        }
        Ok(SCdExpression(p.normal_form()))
    }

    /// Parses a single word such as `"S* C"`.
    pub fn word(text: &str) -> Result<Self> {
        Self::new(NCPoly::parse_word(&Self::preset(), text)?)
    }

    pub fn poly(&self) -> &NCPoly {
        &self.0
    }

    /// Matrix of the expression on `C^n` at the binding's `q`.
    pub fn to_factor(&self, n: usize, binding: &Binding) -> Result<FactorMatrix> {
        check_q(binding.q)?;
        let letters = [
            build_factor(FactorKind::S, n, binding.q)?,
            build_factor(FactorKind::C, n, binding.q)?,
            build_factor(FactorKind::D, n, binding.q)?,
        ];
        let factor = |l: u16| -> FactorMatrix {
            let m = &letters[(l % 3) as usize];
            if l >= 3 {
                m.adjoint()
            } else {
                m.clone()
            }
        };
        let mut acc = nalgebra::DMatrix::from_element(n, n, Complex64::new(0.0, 0.0));
        for (w, s) in self.0.terms() {
            let mut m = FactorMatrix::identity(n);
            for &l in w.iter() {
                m = m.mul(&factor(l));
            }
            let z = s.eval(binding)?;
            acc += m.matrix().map(|x| x * z);
        }
        Ok(FactorMatrix::from_dense(acc))
    }
}

/// The character `S ↦ e^{iφ}`, `C ↦ 1`, `d ↦ 0`, stars conjugated; scalar
/// coefficients are evaluated at `binding`.
pub fn theta_char(e: &SCdExpression, phi: f64, binding: &Binding) -> Result<Complex64> {
    let s = Complex64::from_polar(1.0, phi);
    let value = |l: u16| match l {
        0 => s,
        1 | 4 => Complex64::new(1.0, 0.0),
        3 => s.conj(),
        _ => Complex64::new(0.0, 0.0),
    };
    let mut out = Complex64::new(0.0, 0.0);
    for (w, c) in e.poly().terms() {
        let prod: Complex64 = w.iter().map(|&l| value(l)).product();
        out += c.eval(binding)? * prod;
    }
    Ok(out)
}

/// The character with the angle kept formal: `S ↦ u₁`, `S* ↦ u₁⁻¹`, `C ↦ 1`,
/// `d ↦ 0`. Exact counterpart of [`theta_char`] at `φ = φ₁`.
pub fn theta_scalar(e: &SCdExpression) -> Scalar {
    let mut out = Scalar::zero();
    'terms: for (w, c) in e.poly().terms() {
        let mut k = 0;
        for &l in w.iter() {
            match l {
                0 => k += 1,
                3 => k -= 1,
                1 | 4 => {}
                _ => continue 'terms,
            }
        }
        out = out + c * &Scalar::u1_pow(k);
    }
    out
}

/// Residuals of the truncated series
/// `C² = (1−q²) Σ_{n≤K} q^{2n} S^{n+1}(S^{n+1})*` and
/// `d = Σ_{n≤K} qⁿ (Sⁿ(Sⁿ)* − S^{n+1}(S^{n+1})*)`
/// against the geometric tails `q^{2(K+1)}` and `q^{K+1}`.
///
/// Each identity is measured on `e_j` for `j ≤ K` and as an operator norm over
/// the whole truncated space.
pub fn c_formula_check(n: usize, q: f64, k: usize) -> Result<CheckReport> {
    check_q(q)?;
    if k >= n {
        return Err(Error::InvalidArgument(format!("series cutoff K = {k} must be < N = {n}")));
    }
    let s = build_factor(FactorKind::S, n, q)?;
    let c = build_factor(FactorKind::C, n, q)?;
    let d = build_factor(FactorKind::D, n, q)?;
    let sm = s.matrix();
    let mut proj = vec![nalgebra::DMatrix::<Complex64>::identity(n, n)];
    let mut pow = nalgebra::DMatrix::<Complex64>::identity(n, n);
    for _ in 0..=k {
        pow = sm * &pow;
        proj.push(&pow * pow.adjoint());
    }
    let mut c_series = nalgebra::DMatrix::<Complex64>::zeros(n, n);
    let mut d_series = nalgebra::DMatrix::<Complex64>::zeros(n, n);
    for m in 0..=k {
        c_series += proj[m + 1].map(|x| x * (1.0 - q * q) * q.powi(2 * m as i32));
        d_series += (&proj[m] - &proj[m + 1]).map(|x| x * q.powi(m as i32));
    }
    let c_res = c.matrix() * c.matrix() - c_series;
    let d_res = d.matrix() - d_series;
    let interior = |r: &nalgebra::DMatrix<Complex64>| {
        (0..=k).map(|j| r.column(j).norm()).fold(0.0, f64::max)
    };
    let full = |r: &nalgebra::DMatrix<Complex64>| r.singular_values().max();
    let c_tail = q.powi(2 * (k as i32 + 1));
    let d_tail = q.powi(k as i32 + 1);
    let item = |id: &str, res: f64, tail: f64| {
        ItemResult::numeric(id, res, tail, res, res <= tail + 1e-12)
    };
    let items = vec![
        item("C2 on e_j, j<=K", interior(&c_res), c_tail),
        item("C2 operator norm", full(&c_res), c_tail),
        item("d on e_j, j<=K", interior(&d_res), d_tail),
        item("d operator norm", full(&d_res), d_tail),
    ];
    Ok(CheckReport::new("c_formula", params! {"n" => n, "q" => q, "k" => k}, items))
}
