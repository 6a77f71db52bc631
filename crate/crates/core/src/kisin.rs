//! Points of Kisin varieties `λ_i x_i y_{i+1} = μ_i x_{i+1} y_i` in
//! `(P^1)^f` over a finite field.

use std::fmt;

use serde::Serialize;

use crate::error::{param, Result};
use crate::ffield::FiniteField;
use crate::defring::Shape;
use crate::gene::Gene;

/// Equations indexed by `i ∈ Z/f`, with binary coefficients `(λ_i, μ_i)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KisinVarietyEq {
    coeffs: Vec<(u8, u8)>,
}

impl KisinVarietyEq {
    pub fn new(coeffs: Vec<(u8, u8)>) -> Result<Self> {
        if coeffs.is_empty() {
            return param("f must be positive");
        }
        if coeffs.iter().any(|&(l, m)| l > 1 || m > 1) {
            return param("coefficients must lie in {0, 1}");
        }
        Ok(Self { coeffs })
    }

    /// `"11,10"` for `(λ_0, μ_0) = (1, 1)`, `(λ_1, μ_1) = (1, 0)`.
    pub fn parse(s: &str) -> Result<Self> {
        let coeffs = s
            .split(',')
            .map(|t| match t.trim().as_bytes() {
                [l @ (b'0' | b'1'), m @ (b'0' | b'1')] => Ok((l - b'0', m - b'0')),
                _ => param(format!("bad coefficient pair {t:?}")),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(coeffs)
    }

    pub fn f(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[(u8, u8)] {
        &self.coeffs
    }
}

impl fmt::Display for KisinVarietyEq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|(l, m)| format!("{l}{m}")).collect();
        f.write_str(&parts.join(","))
    }
}

/// Supplies `(λ_i, μ_i)` from a gene and a shape. No rule is built in.
pub trait KisinCoefficientRule {
    fn coefficients(&self, gene: &Gene, shape: &Shape) -> Result<KisinVarietyEq>;
}

/// A point of `P^1`, normalized as `[1 : y]` or `[0 : 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProjPoint {
    Infinity,
    Affine(usize),
}

impl ProjPoint {
    /// Homogeneous coordinates `(x, y)`.
    pub fn coords(self) -> (usize, usize) {
        match self {
            ProjPoint::Infinity => (0, 1),
            ProjPoint::Affine(y) => (1, y),
        }
    }

    /// `[0:1]` first, then `[1:0], [1:1], ...`.
    pub fn all(q: usize) -> impl Iterator<Item = ProjPoint> {
        std::iter::once(ProjPoint::Infinity).chain((0..q).map(ProjPoint::Affine))
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (x, y) = self.coords();
        write!(f, "[{x}:{y}]")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KisinCount {
    pub q: usize,
    pub candidates: u64,
    pub count: u64,
    /// Every solution in enumeration order.
    pub points: Vec<Vec<ProjPoint>>,
}

/// Does the tuple satisfy `λ_i x_i y_{i+1} = μ_i x_{i+1} y_i` for all `i`?
pub fn satisfies(eq: &KisinVarietyEq, field: &FiniteField, coords: &[(usize, usize)]) -> bool {
    let f = eq.f();
    eq.coeffs().iter().enumerate().all(|(i, &(l, m))| {
        let (xi, yi) = coords[i];
        let (xn, yn) = coords[(i + 1) % f];
        let lhs = if l == 1 { field.mul(xi, yn) } else { 0 };
        let rhs = if m == 1 { field.mul(xn, yi) } else { 0 };
        lhs == rhs
    })
}

/// Brute force over the `(q+1)^f` points of `(P^1(F_q))^f`.
pub fn kisin_points(eq: &KisinVarietyEq, field: &FiniteField, bound: u64) -> Result<KisinCount> {
    let q = field.order();
    let f = eq.f();
    let candidates = (q as u64 + 1)
        .checked_pow(f as u32)
        .filter(|&c| c <= bound)
        .ok_or_else(|| crate::Error::Capacity(format!("(q+1)^f above the enumeration bound {bound}")))?;
    let line: Vec<ProjPoint> = ProjPoint::all(q).collect();
    let mut index = vec![0usize; f];
    let mut points = vec![];
    loop {
        let tuple: Vec<ProjPoint> = index.iter().map(|&k| line[k]).collect();
        let coords: Vec<(usize, usize)> = tuple.iter().map(|p| p.coords()).collect();
        if satisfies(eq, field, &coords) {
            points.push(tuple);
        }
        if !advance(&mut index, q + 1) {
            break;
        }
    }
    Ok(KisinCount {
        q,
        candidates,
        count: points.len() as u64,
        points,
    })
}

fn advance(index: &mut [usize], radix: usize) -> bool {
    for slot in index.iter_mut().rev() {
        *slot += 1;
        if *slot < radix {
            return true;
        }
        *slot = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(coeffs: &str, q: u64) -> u64 {
        let eq = KisinVarietyEq::parse(coeffs).unwrap();
        kisin_points(&eq, &FiniteField::new(q).unwrap(), crate::perm::DEFAULT_ENUMERATION_BOUND)
            .unwrap()
            .count
    }

    #[test]
    fn single_embedding() {
        for q in [3u64, 5, 9] {
            assert_eq!(count("11", q), q + 1);
            assert_eq!(count("10", q), 2);
            assert_eq!(count("01", q), 2);
            assert_eq!(count("00", q), q + 1);
        }
        let eq = KisinVarietyEq::parse("10").unwrap();
        let r = kisin_points(&eq, &FiniteField::new(3).unwrap(), 100).unwrap();
        assert_eq!(r.points, vec![vec![ProjPoint::Infinity], vec![ProjPoint::Affine(0)]]);
    }

    #[test]
    fn two_embeddings_diagonal() {
        // both equations say P_0 = P_1
        for q in [3u64, 4, 5] {
            assert_eq!(count("11,11", q), q + 1);
        }
    }

    #[test]
    fn parse_and_bounds() {
        assert!(KisinVarietyEq::parse("12").is_err());
        assert!(KisinVarietyEq::new(vec![]).is_err());
        assert_eq!(KisinVarietyEq::parse("11, 01").unwrap().to_string(), "11,01");
        let eq = KisinVarietyEq::parse("11,11,11").unwrap();
        assert!(matches!(
            kisin_points(&eq, &FiniteField::new(9).unwrap(), 100),
            Err(crate::Error::Capacity(_))
        ));
    }
}
