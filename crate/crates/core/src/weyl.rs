//! Characters of the restriction of scalars of `GL_n` over `F_{p^f}`,
//! Serre-weight classes `X_1(T) / (p - π) X_0(T)`, extended Weyl group
//! elements and the exponents of the tame inertial type they define.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::arith::{checked_pow, ResidueInt};
use crate::error::{capacity, param, Error, Result};
use crate::lattice::{p_minus_shift, HermiteBasis};
use crate::perm::Perm;

/// An element of `X*(T) = (Z^n)^f`; `values[j]` is the vector at embedding `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Character {
    n: usize,
    values: Vec<Vec<i64>>,
}

impl Character {
    pub fn new(values: Vec<Vec<i64>>) -> Result<Self> {
        let Some(first) = values.first() else {
            return param("a character needs at least one embedding");
        };
        let n = first.len();
        if n == 0 || values.iter().any(|v| v.len() != n) {
            return param("every embedding must carry a vector of the same positive length");
        }
        Ok(Self { n, values })
    }

    pub fn zero(n: usize, f: usize) -> Result<Self> {
        Self::new(vec![vec![0; n]; f])
    }

    /// `t_j · (1, ..., 1)` at embedding `j`.
    pub fn constant(n: usize, t: &[i64]) -> Result<Self> {
        Self::new(t.iter().map(|&c| vec![c; n]).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn f(&self) -> usize {
        self.values.len()
    }

    pub fn values(&self) -> &[Vec<i64>] {
        &self.values
    }

    pub fn embedding(&self, j: usize) -> &[i64] {
        &self.values[j]
    }

    fn check_shape(&self, other: &Character) -> Result<()> {
        if (self.n, self.f()) != (other.n, other.f()) {
            return param("characters have different shapes");
        }
        Ok(())
    }

    pub fn add(&self, other: &Character) -> Result<Character> {
        self.check_shape(other)?;
        Ok(self.zip_with(other, |a, b| a + b))
    }

    pub fn sub(&self, other: &Character) -> Result<Character> {
        self.check_shape(other)?;
        Ok(self.zip_with(other, |a, b| a - b))
    }

    pub fn scale(&self, k: i64) -> Character {
        Character {
            n: self.n,
            values: self
                .values
                .iter()
                .map(|v| v.iter().map(|x| k * x).collect())
                .collect(),
        }
    }

    fn zip_with(&self, other: &Character, op: impl Fn(i64, i64) -> i64) -> Character {
        Character {
            n: self.n,
            values: self
                .values
                .iter()
                .zip(&other.values)
                .map(|(u, v)| u.iter().zip(v).map(|(&a, &b)| op(a, b)).collect())
                .collect(),
        }
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .values
            .iter()
            .map(|v| {
                let xs: Vec<String> = v.iter().map(ToString::to_string).collect();
                format!("({})", xs.join(","))
            })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Positive roots `e_i - e_j`, `i < j`, of the upper triangular Borel.
pub fn positive_roots(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

/// `<λ, α^∨>` for `α = e_i - e_j` at the given embedding.
pub fn coroot_pairing(lambda: &Character, i: usize, j: usize, embedding: usize) -> Result<i64> {
    let n = lambda.n();
    for index in [i, j] {
        if index >= n {
            return Err(Error::IndexOutOfRange { index, bound: n });
        }
    }
    if embedding >= lambda.f() {
        return Err(Error::IndexOutOfRange {
            index: embedding,
            bound: lambda.f(),
        });
    }
    if i >= j {
        return param(format!("({i}, {j}) is not a positive root"));
    }
    let v = lambda.embedding(embedding);
    Ok(v[i] - v[j])
}

pub fn in_x0(lambda: &Character) -> bool {
    lambda.values().iter().all(|v| v.iter().all(|&x| x == v[0]))
}

pub fn in_x1(lambda: &Character, p: u64) -> bool {
    let p = p as i64;
    lambda.values().iter().all(|v| {
        positive_roots(v.len()).all(|(i, j)| (0..p).contains(&(v[i] - v[j])))
    })
}

/// `(x_j)_j -> (x_{j+1})_j`.
pub fn pi_shift(lambda: &Character) -> Character {
    let mut values = lambda.values.clone();
    values.rotate_left(1);
    Character { n: lambda.n, values }
}

/// `(p - π) μ`.
pub fn p_minus_pi(lambda: &Character, p: u64) -> Character {
    lambda
        .scale(p as i64)
        .sub(&pi_shift(lambda))
        .expect("same shape")
}

/// A class in `X_1(T) / (p - π) X_0(T)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SerreWeightClass {
    pub p: u64,
    /// Canonical representative, in `X_1(T)`.
    pub representative: Character,
    /// Constant part `t`, with `λ_j = d_j + t_j (1, ..., 1)` and `d_j` ending in 0,
    /// reduced into the Hermite box of `(p - π) Z^f`.
    pub constant_part: Vec<i64>,
    /// `p^f - 1`, the index of `(p - π) Z^f` in `Z^f`.
    pub lattice_index: u64,
}

/// Hermite basis of `(p - π) Z^f`, the image of `c -> (p c_j - c_{j+1})_j`.
pub fn serre_lattice(p: u64, f: usize) -> Result<HermiteBasis> {
    if p < 2 || f == 0 {
        return param("need p >= 2 and f >= 1");
    }
    HermiteBasis::new(&p_minus_shift(p as i128, f))
}

/// Canonical representative of the class of `λ ∈ X_1(T)`.
///
/// Only the constant part changes within a class, so it is reduced modulo
/// the Hermite basis of `(p - π) Z^f`.
pub fn serre_normalize(lambda: &Character, p: u64) -> Result<SerreWeightClass> {
    let lattice = serre_lattice(p, lambda.f())?;
    serre_normalize_with(lambda, p, &lattice)
}

fn serre_normalize_with(lambda: &Character, p: u64, lattice: &HermiteBasis) -> Result<SerreWeightClass> {
    if !in_x1(lambda, p) {
        return Err(Error::Domain(format!("{lambda} is not p-restricted for p = {p}")));
    }
    let t: Vec<i128> = lambda.values().iter().map(|v| v[v.len() - 1] as i128).collect();
    let reduced = lattice.reduce(&t);
    let values = lambda
        .values()
        .iter()
        .zip(&t)
        .zip(&reduced)
        .map(|((v, &old), &new)| v.iter().map(|&x| x - old as i64 + new as i64).collect())
        .collect();
    Ok(SerreWeightClass {
        p,
        representative: Character::new(values)?,
        constant_part: reduced.iter().map(|&x| x as i64).collect(),
        lattice_index: lattice.index() as u64,
    })
}

/// Cap on the number of restricted characters visited by
/// [`enumerate_serre_weights`].
pub const SERRE_ENUMERATION_CAP: u64 = 5_000_000;

/// All classes of `X_1(T) / (p - π) X_0(T)`, sorted, by normalizing every
/// restricted character whose constant part lies in `[0, p^f - 2]^f`
/// (a complete set of residues, since `(p^f - 1) Z^f ⊆ (p - π) Z^f`).
///
/// `n > 2` requires `allow_large_n`.
pub fn enumerate_serre_weights(n: usize, f: usize, p: u64, allow_large_n: bool) -> Result<Vec<SerreWeightClass>> {
    if n == 0 {
        return param("n must be positive");
    }
    if n > 2 && !allow_large_n {
        return param("enumeration for n > 2 must be requested explicitly");
    }
    let lattice = serre_lattice(p, f)?;
    let idx = lattice.index() as u64;
    let diffs = restricted_difference_vectors(n, p);
    let per_embedding = diffs.len() as u64 * idx;
    let total = (0..f).try_fold(1u64, |acc, _| acc.checked_mul(per_embedding));
    match total {
        Some(t) if t <= SERRE_ENUMERATION_CAP => {}
        _ => return capacity(format!("more than {SERRE_ENUMERATION_CAP} restricted characters")),
    }

    let mut classes = BTreeSet::new();
    let mut index = vec![0u64; f];
    loop {
        let values = index
            .iter()
            .map(|&k| {
                let d = &diffs[(k / idx) as usize];
                let t = (k % idx) as i64;
                d.iter().map(|x| x + t).collect()
            })
            .collect();
        classes.insert(serre_normalize_with(&Character::new(values)?, p, &lattice)?);
        if !advance(&mut index, per_embedding) {
            break;
        }
    }
    Ok(classes.into_iter().collect())
}

/// Vectors `d` with last entry 0 and `0 <= d_i - d_j <= p - 1` for `i < j`.
fn restricted_difference_vectors(n: usize, p: u64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![0i64]];
    for _ in 1..n {
        out = out
            .into_iter()
            .flat_map(|v| {
                // prepend a_0 >= v_0 keeping a_0 - v_last <= p - 1
                let lo = v[0];
                let hi = v[v.len() - 1] + p as i64 - 1;
                (lo..=hi).map(move |a| {
                    let mut w = vec![a];
                    w.extend(&v);
                    w
                })
            })
            .collect();
    }
    out.sort();
    out
}

fn advance(index: &mut [u64], radix: u64) -> bool {
    for slot in index.iter_mut().rev() {
        *slot += 1;
        if *slot < radix {
            return true;
        }
        *slot = 0;
    }
    false
}

/// `η = (n-1, ..., 1, 0)` at every embedding.
pub fn eta_character(n: usize, f: usize) -> Result<Character> {
    Character::new(vec![(0..n as i64).rev().collect(); f])
}

/// `s = (s_0, ..., s_{f-1})` in `W = (S_n)^f`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeylElt {
    s: Vec<Perm>,
}

impl WeylElt {
    pub fn new(s: Vec<Perm>) -> Result<Self> {
        let Some(first) = s.first() else {
            return param("a Weyl element needs at least one embedding");
        };
        if s.iter().any(|x| x.degree() != first.degree()) {
            return param("all components must permute the same number of letters");
        }
        Ok(Self { s })
    }

    pub fn identity(n: usize, f: usize) -> Self {
        Self {
            s: vec![Perm::identity(n); f],
        }
    }

    pub fn components(&self) -> &[Perm] {
        &self.s
    }

    pub fn n(&self) -> usize {
        self.s[0].degree()
    }

    pub fn f(&self) -> usize {
        self.s.len()
    }

    /// `s_j` with `j` read modulo `f`.
    pub fn periodic(&self, j: usize) -> &Perm {
        &self.s[j % self.f()]
    }

    /// `s_0 s_{f-1} ... s_1`, with `s_1` applied first.
    pub fn product(&self) -> Perm {
        let f = self.f();
        (1..f)
            .rev()
            .fold(self.s[0].clone(), |acc, j| acc.compose(&self.s[j]))
    }
}

/// `(s, μ)` in `W ⋉ X*(T)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtWeylElt {
    pub s: WeylElt,
    pub mu: Character,
}

impl ExtWeylElt {
    pub fn new(s: WeylElt, mu: Character) -> Result<Self> {
        if (s.n(), s.f()) != (mu.n(), mu.f()) {
            return param("s and μ have different shapes");
        }
        Ok(Self { s, mu })
    }
}

/// The order `r` of `s_0 s_{f-1} ... s_1`.
pub fn order_of_product(s: &WeylElt) -> u64 {
    s.product().order()
}

/// `α'_j = s_1^{-1} s_2^{-1} ... s_j^{-1} (μ_j + η_j)` for `j = 0, ..., rf - 1`,
/// with `s` and `μ` extended `f`-periodically and the product applied
/// right to left. `α'_0 = μ_0 + η_0`.
pub fn alpha_prime(se: &ExtWeylElt) -> Vec<Vec<i64>> {
    let (n, f) = (se.mu.n(), se.mu.f());
    let r = order_of_product(&se.s) as usize;
    let eta = eta_character(n, f).expect("n, f > 0");
    let shifted = se.mu.add(&eta).expect("same shape");
    (0..r * f)
        .map(|j| {
            let mut v = shifted.embedding(j % f).to_vec();
            for k in (1..=j).rev() {
                v = se.s.periodic(k).inverse().permute_coordinates(&v);
            }
            v
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TameTypeExponents {
    pub p: u64,
    pub r: u64,
    pub f: usize,
    /// `p^{rf} - 1`.
    pub modulus: u64,
    pub exponents: Vec<ResidueInt>,
}

/// Exponent `i` is `sum_{j'} α'_{j', i} p^{j'}` modulo `p^{rf} - 1`.
pub fn tame_type_exponents(se: &ExtWeylElt, p: u64) -> Result<TameTypeExponents> {
    if p < 2 {
        return param("p must be at least 2");
    }
    let f = se.mu.f();
    let r = order_of_product(&se.s);
    let rf = u32::try_from(r * f as u64).map_err(|_| Error::Capacity("rf too large".into()))?;
    let modulus = checked_pow(p, rf)? - 1;
    let m = modulus as i128;
    let alpha = alpha_prime(se);
    let exponents = (0..se.mu.n())
        .map(|i| {
            let (sum, _) = alpha.iter().fold((0i128, 1i128 % m), |(acc, pw), a| {
                ((acc + a[i] as i128 * pw).rem_euclid(m), pw * p as i128 % m)
            });
            ResidueInt::new(sum, modulus)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(TameTypeExponents {
        p,
        r,
        f,
        modulus,
        exponents,
    })
}

/// `ρ̄ ≅ ω_{2f}^h ⊗ nr'(θ)` for `n = 2`; `θ` is carried as an opaque tag.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GaloisParam2 {
    pub p: u64,
    pub f: u32,
    pub h: ResidueInt,
    pub theta: String,
}

impl GaloisParam2 {
    pub fn new(p: u64, f: u32, h: i128, theta: impl Into<String>) -> Result<Self> {
        let h = ResidueInt::new(h, checked_pow(p, 2 * f)? - 1)?;
        Ok(Self {
            p,
            f,
            h,
            theta: theta.into(),
        })
    }
}

/// A tame type for `n = 2`, of level `f` (`ω_f^γ ⊕ ω_f^{γ'}`) or `2f`
/// (`ω_{2f}^γ ⊕ ω_{2f}^{qγ}`).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "level", rename_all = "snake_case")]
pub enum TameTypeParam2 {
    LevelF { gamma: ResidueInt, gamma_prime: ResidueInt },
    Level2F { gamma: ResidueInt },
}

impl TameTypeParam2 {
    pub fn level_f(p: u64, f: u32, gamma: i128, gamma_prime: i128) -> Result<Self> {
        let m = checked_pow(p, f)? - 1;
        Ok(Self::LevelF {
            gamma: ResidueInt::new(gamma, m)?,
            gamma_prime: ResidueInt::new(gamma_prime, m)?,
        })
    }

    pub fn level_2f(p: u64, f: u32, gamma: i128) -> Result<Self> {
        Ok(Self::Level2F {
            gamma: ResidueInt::new(gamma, checked_pow(p, 2 * f)? - 1)?,
        })
    }
}
