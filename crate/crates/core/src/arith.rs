//! Exact residue arithmetic, radix-`p` digits, `q`-analogues and the
//! point count of `GL_n` over a finite field together with its `q -> 1`
//! limit.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{capacity, param, Result};

/// A residue class `value mod modulus`, stored by its representative in
/// `[0, modulus)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ResidueInt {
    value: u64,
    modulus: u64,
}

impl ResidueInt {
    pub fn new(value: i128, modulus: u64) -> Result<Self> {
        if modulus == 0 {
            return param("residue modulus must be positive");
        }
        let value = value.rem_euclid(modulus as i128) as u64;
        Ok(Self { value, modulus })
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl fmt::Display for ResidueInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

/// `base^exp`, or a capacity error when it does not fit in 64 bits.
pub fn checked_pow(base: u64, exp: u32) -> Result<u64> {
    match base.checked_pow(exp) {
        Some(v) => Ok(v),
        None => capacity(format!("{base}^{exp} exceeds 64-bit capacity")),
    }
}

/// `p^k - 1`, the order of the multiplicative group of `F_{p^k}`.
pub fn unit_group_order(p: u64, k: u32) -> Result<u64> {
    Ok(checked_pow(p, k)? - 1)
}

/// Digits `(v_0, ..., v_{2f-1})` with `v_0` the coefficient of the
/// highest power of the base.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RadixDigits {
    base: u64,
    digits: Vec<u64>,
}

impl RadixDigits {
    pub fn new(base: u64, digits: Vec<u64>) -> Result<Self> {
        if base < 2 {
            return param(format!("radix base must be at least 2, got {base}"));
        }
        if digits.is_empty() || !digits.len().is_multiple_of(2) {
            return param(format!(
                "digit vector must have even positive length 2f, got {}",
                digits.len()
            ));
        }
        if let Some(d) = digits.iter().find(|&&d| d >= base) {
            return param(format!("digit {d} not in [0, {}]", base - 1));
        }
        Ok(Self { base, digits })
    }

    /// A digit vector used only for its pattern (e.g. by the gene rules),
    /// where digits above 2 are immaterial. The base is taken large enough
    /// to hold every digit.
    pub fn pattern(digits: Vec<u64>) -> Result<Self> {
        let base = digits.iter().copied().max().unwrap_or(0).max(2) + 1;
        Self::new(base, digits)
    }

    pub fn base(&self) -> u64 {
        self.base
    }

    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// Half the length.
    pub fn f(&self) -> usize {
        self.digits.len() / 2
    }

    /// `sum_k base^(2f-1-k) * v_k`.
    pub fn recompose(&self) -> Result<u64> {
        self.digits.iter().try_fold(0u64, |acc, &d| {
            acc.checked_mul(self.base)
                .and_then(|a| a.checked_add(d))
                .ok_or_else(|| crate::Error::Capacity("digit recomposition overflow".into()))
        })
    }

    /// Cyclic re-indexing `v'_i = v_{i+k}`.
    pub fn rotate(&self, k: usize) -> Self {
        let mut digits = self.digits.clone();
        if !digits.is_empty() {
            digits.rotate_left(k % self.digits.len());
        }
        Self { base: self.base, digits }
    }
}

impl fmt::Display for RadixDigits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.digits.iter().map(|d| d.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Radix-`p` digits of a residue modulo `p^{2f} - 1`.
///
/// The class is represented in `[0, p^{2f} - 2]` first, so the all-`(p-1)`
/// string never occurs and the zero class yields all-zero digits.
pub fn radix_decompose(residue: &ResidueInt, p: u64, f: u32) -> Result<RadixDigits> {
    if p < 2 {
        return param(format!("radix base must be at least 2, got {p}"));
    }
    if f == 0 {
        return param("f must be positive");
    }
    let modulus = unit_group_order(p, 2 * f)?;
    if residue.modulus() != modulus {
        return param(format!(
            "residue modulus {} does not match p^(2f)-1 = {modulus}",
            residue.modulus()
        ));
    }
    let len = 2 * f as usize;
    let mut digits = vec![0u64; len];
    let mut rest = residue.value();
    for slot in digits.iter_mut().rev() {
        *slot = rest % p;
        rest /= p;
    }
    debug_assert_eq!(rest, 0);
    RadixDigits::new(p, digits)
}

/// Dense polynomial in a formal variable `q` with integer coefficients,
/// lowest degree first and no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Self { coeffs }
    }

    /// `q - 1`.
    pub fn q_minus_one() -> Self {
        Self::from_coeffs(vec![BigInt::from(-1), BigInt::one()])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, q: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * q + c)
    }

    pub fn eval_i64(&self, q: i64) -> BigInt {
        self.eval(&BigInt::from(q))
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(1), |acc, _| &acc * self)
    }

    /// Exact quotient by `q - 1`, or `None` when `1` is not a root.
    pub fn div_q_minus_one(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // synthetic division by (q - 1), highest degree first
        let n = self.coeffs.len();
        let mut quotient = vec![BigInt::zero(); n - 1];
        let mut carry = BigInt::zero();
        for k in (1..n).rev() {
            carry += &self.coeffs[k];
            quotient[k - 1] = carry.clone();
        }
        carry += &self.coeffs[0];
        carry.is_zero().then(|| Self::from_coeffs(quotient))
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match (k, a.is_one()) {
                (0, _) => write!(f, "{a}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{a}*q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{a}*q^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &QPolynomial {
    type Output = QPolynomial;
    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|k| {
                self.coeffs.get(k).cloned().unwrap_or_default()
                    + rhs.coeffs.get(k).cloned().unwrap_or_default()
            })
            .collect();
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &QPolynomial {
    type Output = QPolynomial;
    fn neg(self) -> QPolynomial {
        QPolynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;
    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;
    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

/// The `q`-analogue `[i]_q = 1 + q + ... + q^{i-1}`; `[0]_q = 0`.
pub fn q_int(i: usize) -> QPolynomial {
    QPolynomial::from_coeffs(vec![BigInt::one(); i])
}

/// `[n]_q [n-1]_q ... [1]_q`.
pub fn q_factorial(n: usize) -> QPolynomial {
    (1..=n).fold(QPolynomial::constant(1), |acc, i| &acc * &q_int(i))
}

/// `(q^n - 1)(q^n - q)...(q^n - q^{n-1})` as a polynomial in `q`.
pub fn gl_difference_polynomial(n: usize) -> QPolynomial {
    let top = QPolynomial::monomial(n);
    (0..n).fold(QPolynomial::constant(1), |acc, k| {
        &acc * &(&top - &QPolynomial::monomial(k))
    })
}

/// `(q-1)^n * q^{n(n-1)/2} * [n]_q ... [1]_q` as a polynomial in `q`.
pub fn gl_factored_polynomial(n: usize) -> QPolynomial {
    let torus = QPolynomial::q_minus_one().pow(n as u32);
    let unipotent = QPolynomial::monomial(n * n.saturating_sub(1) / 2);
    &(&torus * &unipotent) * &q_factorial(n)
}

/// `Card GL_n(F_q) / (q-1)^n`, obtained by `n` exact divisions of the
/// difference product by `q - 1`.
pub fn gl_cofactor_polynomial(n: usize) -> QPolynomial {
    let mut poly = gl_difference_polynomial(n);
    for _ in 0..n {
        poly = poly
            .div_q_minus_one()
            .expect("q = 1 is a root of every factor q^n - q^k");
    }
    poly
}

/// Bit budget for `card_gl` results.
pub const CARD_GL_MAX_BITS: u64 = 1 << 22;

/// `Card GL_n(F_q)` together with the three factors of its factored form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GlCardinality {
    pub n: u32,
    #[serde(serialize_with = "crate::exact::big")]
    pub q: BigInt,
    /// `(q^n - 1)(q^n - q)...(q^n - q^{n-1})`.
    #[serde(serialize_with = "crate::exact::big")]
    pub total: BigInt,
    /// `(q-1)^n`.
    #[serde(serialize_with = "crate::exact::big")]
    pub torus: BigInt,
    /// `q^{n(n-1)/2}`.
    #[serde(serialize_with = "crate::exact::big")]
    pub unipotent: BigInt,
    /// `[n]_q ... [1]_q`.
    #[serde(serialize_with = "crate::exact::big")]
    pub q_factorial: BigInt,
}

impl GlCardinality {
    pub fn factored_product(&self) -> BigInt {
        &self.torus * &self.unipotent * &self.q_factorial
    }

    pub fn forms_agree(&self) -> bool {
        self.total == self.factored_product()
    }
}

pub fn card_gl(n: u32, q: u64) -> Result<GlCardinality> {
    if n == 0 {
        return param("n must be positive");
    }
    if q < 2 {
        return param(format!("q must be at least 2, got {q}"));
    }
    let bits = u64::from(n) * u64::from(n) * (64 - u64::from(q.leading_zeros()));
    if bits > CARD_GL_MAX_BITS {
        return capacity(format!(
            "Card GL_{n}(F_{q}) needs about {bits} bits (limit {CARD_GL_MAX_BITS})"
        ));
    }
    let qb = BigInt::from(q);
    let qn = qb.pow(n);
    let total = (0..n).fold(BigInt::one(), |acc, k| acc * (&qn - qb.pow(k)));
    let torus = (&qb - 1u32).pow(n);
    let unipotent = qb.pow(n * (n - 1) / 2);
    let q_factorial = q_factorial(n as usize).eval(&qb);
    Ok(GlCardinality {
        n,
        q: qb,
        total,
        torus,
        unipotent,
        q_factorial,
    })
}

/// `n!`, the order of the Weyl group of `GL_n`.
pub fn weyl_limit(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Exhaustive search for the digit vector: all `(v_0, v_1)` with
    /// `p*v_0 + v_1` in the representative window and congruent to `r`.
    fn radix_oracle_f1(r: u64, p: u64) -> Vec<(u64, u64)> {
        let m = p * p - 1;
        let mut out = vec![];
        for v0 in 0..p {
            for v1 in 0..p {
                let x = p * v0 + v1;
                if x < m && x % m == r % m {
                    out.push((v0, v1));
                }
            }
        }
        out
    }

    #[test]
    fn radix_examples_match_exhaustive_search() {
        assert_eq!(radix_oracle_f1(5, 3), vec![(1, 2)]);
        assert_eq!(radix_oracle_f1(0, 3), vec![(0, 0)]);
        assert_eq!(radix_oracle_f1(7, 5), vec![(1, 2)]);

        let d = radix_decompose(&ResidueInt::new(5, 8).unwrap(), 3, 1).unwrap();
        assert_eq!(d.digits(), &[1, 2]);
        let d = radix_decompose(&ResidueInt::new(0, 8).unwrap(), 3, 1).unwrap();
        assert_eq!(d.digits(), &[0, 0]);
        let d = radix_decompose(&ResidueInt::new(7, 24).unwrap(), 5, 1).unwrap();
        assert_eq!(d.digits(), &[1, 2]);
    }

    #[test]
    fn radix_rejects_modulus_mismatch() {
        let r = ResidueInt::new(5, 9).unwrap();
        assert!(matches!(
            radix_decompose(&r, 3, 1),
            Err(crate::Error::Parameter(_))
        ));
    }

    #[test]
    fn radix_round_trip_all_residues() {
        for p in [3u64, 5] {
            for f in [1u32, 2] {
                let m = p.pow(2 * f) - 1;
                for r in 0..m {
                    let d = radix_decompose(&ResidueInt::new(r as i128, m).unwrap(), p, f).unwrap();
                    assert_eq!(d.len(), 2 * f as usize);
                    assert!(d.digits().iter().all(|&v| v < p));
                    assert_eq!(d.recompose().unwrap(), r);
                    // the all-(p-1) string is never produced
                    assert!(d.digits().iter().any(|&v| v != p - 1));
                }
            }
        }
    }

    #[test]
    fn residue_reduces_negative_values() {
        let r = ResidueInt::new(-3, 8).unwrap();
        assert_eq!(r.value(), 5);
        assert!(ResidueInt::new(1, 0).is_err());
    }

    #[test]
    fn q_int_examples() {
        assert_eq!(q_int(1), QPolynomial::constant(1));
        assert_eq!(q_int(3).eval_i64(1), BigInt::from(3));
        assert_eq!(q_int(2).eval_i64(3), BigInt::from(4));
        assert!(q_int(0).is_zero());
    }

    #[test]
    fn polynomial_display() {
        assert_eq!(q_int(3).to_string(), "q^2 + q + 1");
        assert_eq!(QPolynomial::q_minus_one().to_string(), "q - 1");
        assert_eq!(QPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn div_q_minus_one_detects_non_roots() {
        assert!(q_int(2).div_q_minus_one().is_none());
        let p = &QPolynomial::q_minus_one() * &q_int(3);
        assert_eq!(p.div_q_minus_one(), Some(q_int(3)));
    }

    #[test]
    fn card_gl_examples() {
        assert_eq!(card_gl(2, 3).unwrap().total, BigInt::from(48));
        assert_eq!(card_gl(1, 2).unwrap().total, BigInt::from(1));
        assert_eq!(card_gl(3, 2).unwrap().total, BigInt::from(168));
    }

    #[test]
    fn card_gl_forms_agree() {
        for n in 1..=4 {
            for q in 2..=5 {
                assert!(card_gl(n, q).unwrap().forms_agree(), "n={n} q={q}");
            }
        }
    }

    #[test]
    fn card_gl_parameter_and_capacity_errors() {
        assert!(matches!(card_gl(0, 3), Err(crate::Error::Parameter(_))));
        assert!(matches!(card_gl(2, 1), Err(crate::Error::Parameter(_))));
        assert!(matches!(card_gl(4000, u64::MAX), Err(crate::Error::Capacity(_))));
    }

    #[test]
    fn polynomial_identity_and_weyl_limit() {
        for n in 1..=5 {
            assert_eq!(gl_difference_polynomial(n), gl_factored_polynomial(n));
            let cofactor = gl_cofactor_polynomial(n);
            assert_eq!(cofactor.eval_i64(1), weyl_limit(n as u32));
        }
        assert_eq!(weyl_limit(1), BigInt::from(1));
        assert_eq!(weyl_limit(3), BigInt::from(6));
        assert_eq!(weyl_limit(5), BigInt::from(120));
    }
}
