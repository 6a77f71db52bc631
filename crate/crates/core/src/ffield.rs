//! Small finite fields `F_q` as addition and multiplication tables.
//!
//! Elements are `0..q`; for `q = p^k` the element `c_0 + c_1 p + ...` stands
//! for the class of `c_0 + c_1 x + ...` modulo the defining polynomial.

use serde::Serialize;

use crate::error::{param, Result};
use crate::perm::is_prime;

/// Largest field order accepted.
pub const MAX_FIELD_ORDER: u64 = 256;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FiniteField {
    p: u64,
    k: u32,
    q: usize,
    /// Monic defining polynomial, lowest coefficient first (`[0, 1]` for prime fields).
    modulus: Vec<u64>,
    #[serde(skip)]
    add: Vec<u16>,
    #[serde(skip)]
    mul: Vec<u16>,
    #[serde(skip)]
    inv: Vec<u16>,
}

/// Defining polynomials used by [`FiniteField::new`] for proper prime powers.
pub fn default_modulus(q: u64) -> Option<(u64, Vec<u64>)> {
    Some(match q {
        4 => (2, vec![1, 1, 1]),
        8 => (2, vec![1, 1, 0, 1]),
        9 => (3, vec![1, 0, 1]),
        16 => (2, vec![1, 1, 0, 0, 1]),
        25 => (5, vec![3, 0, 1]),
        27 => (3, vec![1, 2, 0, 1]),
        32 => (2, vec![1, 0, 1, 0, 0, 1]),
        49 => (7, vec![1, 0, 1]),
        64 => (2, vec![1, 1, 0, 0, 0, 0, 1]),
        81 => (3, vec![2, 1, 0, 0, 1]),
        125 => (5, vec![3, 3, 0, 1]),
        128 => (2, vec![1, 1, 0, 0, 0, 0, 0, 1]),
        _ => return None,
    })
}

impl FiniteField {
    /// `F_q` for a prime `q` or a prime power with a built-in defining polynomial.
    pub fn new(q: u64) -> Result<Self> {
        if is_prime(q) {
            return Self::with_modulus(q, vec![0, 1]);
        }
        match default_modulus(q) {
            Some((p, m)) => Self::with_modulus(p, m),
            None => param(format!(
                "no built-in field of order {q}; supply a defining polynomial"
            )),
        }
    }

    /// `F_p[x] / (m)`, rejecting `m` unless the quotient is a field.
    pub fn with_modulus(p: u64, modulus: Vec<u64>) -> Result<Self> {
        if !is_prime(p) {
            return param(format!("{p} is not prime"));
        }
        let k = modulus.len().saturating_sub(1);
        if k == 0 || modulus[k] != 1 || modulus.iter().any(|&c| c >= p) {
            return param("defining polynomial must be monic of positive degree with coefficients below p");
        }
        let q = (p as u128).pow(k as u32);
        if q > MAX_FIELD_ORDER as u128 {
            return crate::error::capacity(format!("field order {q} above {MAX_FIELD_ORDER}"));
        }
        let q = q as usize;
        let to_poly = |a: usize| -> Vec<u64> {
            let mut a = a as u64;
            (0..k)
                .map(|_| {
                    let c = a % p;
                    a /= p;
                    c
                })
                .collect()
        };
        let from_poly = |c: &[u64]| -> usize { c.iter().rev().fold(0u64, |acc, &x| acc * p + x) as usize };
        let mut add = vec![0u16; q * q];
        let mut mul = vec![0u16; q * q];
        for a in 0..q {
            let pa = to_poly(a);
            for b in 0..q {
                let pb = to_poly(b);
                let sum: Vec<u64> = pa.iter().zip(&pb).map(|(x, y)| (x + y) % p).collect();
                add[a * q + b] = from_poly(&sum) as u16;
                let mut prod = vec![0u64; 2 * k - 1];
                for (i, x) in pa.iter().enumerate() {
                    for (j, y) in pb.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                for d in (k..prod.len()).rev() {
                    let c = prod[d];
                    if c != 0 {
                        for (i, m) in modulus.iter().enumerate().take(k) {
                            let slot = &mut prod[d - k + i];
                            *slot = (*slot + (p - c) * m) % p;
                        }
                        prod[d] = 0;
                    }
                }
                mul[a * q + b] = from_poly(&prod[..k]) as u16;
            }
        }
        let mut inv = vec![0u16; q];
        for a in 1..q {
            match (1..q).find(|&b| mul[a * q + b] == 1) {
                Some(b) => inv[a] = b as u16,
                None => return param("defining polynomial is reducible"),
            }
        }
        Ok(Self {
            p,
            k: k as u32,
            q,
            modulus,
            add,
            mul,
            inv,
        })
    }

    pub fn order(&self) -> usize {
        self.q
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.q
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.q + b] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.q + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        (0..self.q).find(|&b| self.add(a, b) == 0).expect("additive group")
    }

    pub fn sub(&self, a: usize, b: usize) -> usize {
        self.add(a, self.neg(b))
    }

    pub fn inv(&self, a: usize) -> Option<usize> {
        (a != 0).then(|| self.inv[a] as usize)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_default_field_is_a_field() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27, 32, 49, 64, 81, 125, 128] {
            let f = FiniteField::new(q).unwrap();
            assert_eq!(f.order() as u64, q);
            for a in f.elements() {
                assert_eq!(f.add(a, 0), a);
                assert_eq!(f.mul(a, 1), a);
                if a != 0 {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
                }
            }
        }
    }

    #[test]
    fn multiplicative_group_is_cyclic_of_order_q_minus_one() {
        for q in [4u64, 8, 9, 25] {
            let f = FiniteField::new(q).unwrap();
            let has_generator = (1..f.order()).any(|g| {
                let mut x = g;
                let mut ord = 1;
                while x != 1 {
                    x = f.mul(x, g);
                    ord += 1;
                }
                ord == f.order() - 1
            });
            assert!(has_generator, "q={q}");
        }
    }

    #[test]
    fn reducible_modulus_rejected() {
        // x^2 + 1 = (x + 1)^2 over F_2
        assert!(FiniteField::with_modulus(2, vec![1, 0, 1]).is_err());
        assert!(FiniteField::new(6).is_err());
        assert!(FiniteField::new(257).is_err());
    }
}
