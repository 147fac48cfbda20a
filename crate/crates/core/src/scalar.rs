//! Exact coefficients: Laurent polynomials in `q` and two formal unimodular
//! phase units `u1`, `u2`, with rational coefficients.
//!
//! The involution fixes `q` (a real parameter) and inverts the phases
//! (`u_k* = u_k^{-1}`); rational coefficients are real and are left alone.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exponent vector `(e_q, e_u1, e_u2)` of a monomial.
pub type Exponent = [i32; 3];

/// Numeric values substituted for the formal symbols of a [`Scalar`].
///
/// Phases are angles: `u_k -> exp(i * phi_k)`. An unbound phase is an error
/// only if the scalar actually contains that unit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Binding {
    pub q: f64,
    pub phi1: Option<f64>,
    pub phi2: Option<f64>,
}

impl Binding {
    pub fn new(q: f64) -> Self {
        Binding { q, phi1: None, phi2: None }
    }

    pub fn with_phases(q: f64, phi1: f64, phi2: f64) -> Self {
        Binding { q, phi1: Some(phi1), phi2: Some(phi2) }
    }

    pub fn phi1(mut self, phi: f64) -> Self {
        self.phi1 = Some(phi);
        self
    }

    pub fn phi2(mut self, phi: f64) -> Self {
        self.phi2 = Some(phi);
        self
    }
}

/// Canonical Laurent polynomial in `q, u1, u2` over the rationals.
///
/// Monomials are kept sorted by exponent vector with no zero coefficients,
/// so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    terms: BTreeMap<Exponent, BigRational>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Scalar::monomial(BigRational::one(), [0, 0, 0])
    }

    pub fn int(n: i64) -> Self {
        Scalar::monomial(BigRational::from_integer(BigInt::from(n)), [0, 0, 0])
    }

    pub fn rational(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::monomial(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            [0, 0, 0],
        )
    }

    /// `q^k`.
    pub fn q_pow(k: i32) -> Self {
        Scalar::monomial(BigRational::one(), [k, 0, 0])
    }

    pub fn q() -> Self {
        Scalar::q_pow(1)
    }

    /// The formal phase `u1^k`.
    pub fn u1_pow(k: i32) -> Self {
        Scalar::monomial(BigRational::one(), [0, k, 0])
    }

    pub fn u2_pow(k: i32) -> Self {
        Scalar::monomial(BigRational::one(), [0, 0, k])
    }

    pub fn monomial(coeff: BigRational, exp: Exponent) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        Scalar { terms }
    }

    /// `c * q^{e_q} u1^{e_u1} u2^{e_u2}` from an integer fraction.
    pub fn term(num: i64, den: i64, exp: Exponent) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::monomial(BigRational::new(BigInt::from(num), BigInt::from(den)), exp)
    }

    /// `q - q^{-1}`, the deformation constant of the exchange relations.
    pub fn q_minus_qinv() -> Self {
        &Scalar::q() - &Scalar::q_pow(-1)
    }

    /// `1 - q^2`.
    pub fn one_minus_q2() -> Self {
        &Scalar::one() - &Scalar::q_pow(2)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&[0, 0, 0])
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn monomials(&self) -> impl Iterator<Item = (&Exponent, &BigRational)> {
        self.terms.iter()
    }

    /// True if neither phase unit occurs.
    pub fn is_phase_free(&self) -> bool {
        self.terms.keys().all(|e| e[1] == 0 && e[2] == 0)
    }

    fn add_monomial(&mut self, exp: Exponent, coeff: BigRational) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &coeff;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    /// Involution: phases are inverted, `q` and the rationals are fixed.
    pub fn conj(&self) -> Self {
        Scalar {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ([e[0], -e[1], -e[2]], c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Numeric evaluation; a ring homomorphism into the complex numbers.
    pub fn eval(&self, binding: &Binding) -> Result<Complex64> {
        let mut total = Complex64::new(0.0, 0.0);
        for (e, c) in &self.terms {
            let coeff = c.to_f64().unwrap_or(f64::NAN);
            let mut z = Complex64::new(coeff * binding.q.powi(e[0]), 0.0);
            if e[1] != 0 {
                let phi = binding.phi1.ok_or(Error::UnboundPhase(1))?;
                z *= Complex64::from_polar(1.0, phi * e[1] as f64);
            }
            if e[2] != 0 {
                let phi = binding.phi2.ok_or(Error::UnboundPhase(2))?;
                z *= Complex64::from_polar(1.0, phi * e[2] as f64);
            }
            total += z;
        }
        Ok(total)
    }

    /// Serialized monomial rows `[num, den, e_q, e_u1, e_u2]`.
    pub fn to_rows(&self) -> Result<Vec<[i64; 5]>> {
        self.terms
            .iter()
            .map(|(e, c)| {
                let num = c.numer().to_i64();
                let den = c.denom().to_i64();
                match (num, den) {
                    (Some(n), Some(d)) => Ok([n, d, e[0] as i64, e[1] as i64, e[2] as i64]),
                    _ => Err(Error::Serialization(format!(
                        "coefficient {c} does not fit in 64 bits"
                    ))),
                }
            })
            .collect()
    }

    pub fn from_rows(rows: &[[i64; 5]]) -> Result<Self> {
        let mut s = Scalar::zero();
        for r in rows {
            if r[1] == 0 {
                return Err(Error::Serialization("zero denominator".into()));
            }
            let exp = [r[2], r[3], r[4]].map(|x| x as i32);
            s.add_monomial(
                exp,
                BigRational::new(BigInt::from(r[0]), BigInt::from(r[1])),
            );
        }
        Ok(s)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(mut self, rhs: Scalar) -> Scalar {
        self += &rhs;
        self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        for (e, c) in &rhs.terms {
            self.add_monomial(*e, c.clone());
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        &self - &rhs
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_monomial([ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]], ca * cb);
            }
        }
        out
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        &self * &rhs
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let symbols: Vec<String> = [("q", e[0]), ("u1", e[1]), ("u2", e[2])]
                .iter()
                .filter(|(_, k)| *k != 0)
                .map(|(s, k)| if *k == 1 { s.to_string() } else { format!("{s}^{k}") })
                .collect();
            if symbols.is_empty() {
                write!(f, "{abs}")?;
            } else {
                if !abs.is_one() {
                    write!(f, "{abs}*")?;
                }
                write!(f, "{}", symbols.join("*"))?;
            }
        }
        Ok(())
    }
}
