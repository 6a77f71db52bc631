//! Brute-force reference implementations, kept independent of the main
//! algorithms they are compared against.

use std::collections::BTreeSet;

use crate::arith::RadixDigits;
use crate::error::{capacity, param, Result};
use crate::ffield::FiniteField;
use crate::gene::{validate, Gene, Letter};
use crate::kisin::KisinVarietyEq;

/// Number of invertible `n x n` matrices over `F_q`, by row reduction of
/// every matrix.
pub fn gl_count_brute(n: usize, q: u64) -> Result<u64> {
    let field = FiniteField::new(q)?;
    let q = field.order();
    let entries = n * n;
    let total = (q as u64)
        .checked_pow(entries as u32)
        .filter(|&t| t <= 1 << 24)
        .ok_or_else(|| crate::Error::Capacity("too many matrices".into()))?;
    let mut count = 0;
    for code in 0..total {
        let mut c = code;
        let mut m: Vec<Vec<usize>> = vec![vec![0; n]; n];
        for slot in m.iter_mut().flatten() {
            *slot = (c % q as u64) as usize;
            c /= q as u64;
        }
        if full_rank(&field, m) {
            count += 1;
        }
    }
    Ok(count)
}

#[allow(clippy::needless_range_loop)]
fn full_rank(field: &FiniteField, mut m: Vec<Vec<usize>>) -> bool {
    let n = m.len();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| m[r][col] != 0) else {
            return false;
        };
        m.swap(col, pivot);
        let inv = field.inv(m[col][col]).expect("non-zero pivot");
        for r in col + 1..n {
            let factor = field.mul(m[r][col], inv);
            for c in col..n {
                let sub = field.mul(factor, m[col][c]);
                m[r][c] = field.sub(m[r][c], sub);
            }
        }
    }
    true
}

/// Kisin-variety points counted as non-zero affine pairs `(x_i, y_i)`
/// satisfying the equations, divided by `(q - 1)^f`.
pub fn kisin_count_affine(eq: &KisinVarietyEq, field: &FiniteField) -> Result<u64> {
    let q = field.order();
    let f = eq.f();
    let pairs: Vec<(usize, usize)> = (0..q)
        .flat_map(|x| (0..q).map(move |y| (x, y)))
        .filter(|&p| p != (0, 0))
        .collect();
    let total = (pairs.len() as u64)
        .checked_pow(f as u32)
        .filter(|&t| t <= 1 << 26)
        .ok_or_else(|| crate::Error::Capacity("too many affine tuples".into()))?;
    let mut hits = 0u64;
    let mut idx = vec![0usize; f];
    for _ in 0..total {
        let ok = eq.coeffs().iter().enumerate().all(|(i, &(l, m))| {
            let (xi, yi) = pairs[idx[i]];
            let (xn, yn) = pairs[idx[(i + 1) % f]];
            let lhs = field.mul(field.mul(l as usize, xi), yn);
            let rhs = field.mul(field.mul(m as usize, xn), yi);
            lhs == rhs
        });
        hits += ok as u64;
        for slot in idx.iter_mut().rev() {
            *slot += 1;
            if *slot < pairs.len() {
                break;
            }
            *slot = 0;
        }
    }
    let scale = (q as u64 - 1).pow(f as u32);
    if !hits.is_multiple_of(scale) {
        return param("affine count not divisible by the torus");
    }
    Ok(hits / scale)
}

/// Monomials of degree `k` in `n` variables not divisible by any `x_{2i} x_{2i+1}`,
/// `i < m`, counted directly.
pub fn monomials_avoiding_pairs(n: usize, m: usize, k: usize) -> Result<u64> {
    if 2 * m > n {
        return param("more pairs than variables");
    }
    fn rec(n: usize, m: usize, left: usize, exps: &mut Vec<usize>, count: &mut u64) {
        let i = exps.len();
        if i == n - 1 {
            exps.push(left);
            let ok = (0..m).all(|j| exps[2 * j] == 0 || exps[2 * j + 1] == 0);
            *count += ok as u64;
            exps.pop();
            return;
        }
        for e in 0..=left {
            exps.push(e);
            rec(n, m, left - e, exps, count);
            exps.pop();
        }
    }
    if n == 0 {
        return Ok((k == 0) as u64);
    }
    let mut count = 0;
    rec(n, m, k, &mut vec![], &mut count);
    Ok(count)
}

/// Every length-`2f` word over the four letters accepted by the validator.
pub fn gene_oracle(v: &RadixDigits) -> Result<BTreeSet<Gene>> {
    let len = v.len();
    if len > 10 {
        return capacity("4^(2f) oracle limited to 2f <= 10");
    }
    let mut out = BTreeSet::new();
    for code in 0..4usize.pow(len as u32) {
        let mut c = code;
        let letters = (0..len)
            .map(|_| {
                let l = Letter::ALL[c % 4];
                c /= 4;
                l
            })
            .collect();
        let g = Gene::new(letters);
        if validate(&g, v) {
            out.insert(g);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_brute_examples() {
        assert_eq!(gl_count_brute(2, 3).unwrap(), 48);
        assert_eq!(gl_count_brute(1, 2).unwrap(), 1);
        assert_eq!(gl_count_brute(3, 2).unwrap(), 168);
        assert_eq!(gl_count_brute(2, 4).unwrap(), 180);
    }

    #[test]
    fn monomial_examples() {
        assert_eq!(monomials_avoiding_pairs(2, 1, 3).unwrap(), 2);
        assert_eq!(monomials_avoiding_pairs(3, 1, 3).unwrap(), 7);
        assert_eq!(monomials_avoiding_pairs(1, 0, 5).unwrap(), 1);
    }

    #[test]
    fn affine_kisin() {
        let f = FiniteField::new(5).unwrap();
        assert_eq!(kisin_count_affine(&KisinVarietyEq::parse("10").unwrap(), &f).unwrap(), 2);
        assert_eq!(kisin_count_affine(&KisinVarietyEq::parse("11,11").unwrap(), &f).unwrap(), 6);
    }
}
