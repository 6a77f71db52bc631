use std::fmt;

use serde::Serialize;

use crate::error::{capacity, param, Result};
use crate::perm::{all_perms, Perm};

/// One factor of a [`StructuredMonoid`], written additively.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "modulus", rename_all = "snake_case")]
pub enum MonoidFactor {
    /// `X^N`.
    Natural,
    /// `X^Z`.
    Integer,
    /// `X^{Z/k}`.
    Cyclic(u64),
}

impl fmt::Display for MonoidFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidFactor::Natural => write!(f, "N"),
            MonoidFactor::Integer => write!(f, "Z"),
            MonoidFactor::Cyclic(k) => write!(f, "Z/{k}"),
        }
    }
}

/// A finite product of `N`, `Z` and `Z/k`, i.e. the monoid of monomials
/// `X_1^{a_1} ... X_r^{a_r}` with exponents constrained per factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct StructuredMonoid {
    factors: Vec<MonoidFactor>,
}

impl StructuredMonoid {
    pub fn new(factors: Vec<MonoidFactor>) -> Result<Self> {
        if factors.contains(&MonoidFactor::Cyclic(0)) {
            return param("cyclic factor Z/0 is not finite; use Integer");
        }
        Ok(Self { factors })
    }

    /// `X^N`, i.e. `F_1[X]`.
    pub fn f1_polynomial() -> Self {
        Self {
            factors: vec![MonoidFactor::Natural],
        }
    }

    /// `X^Z`, i.e. `F_1(X)`.
    pub fn f1_laurent() -> Self {
        Self {
            factors: vec![MonoidFactor::Integer],
        }
    }

    /// `X^{Z/n}`, the cyclotomic model of `F_{1^n}`.
    pub fn cyclotomic(n: u64) -> Result<Self> {
        Self::new(vec![MonoidFactor::Cyclic(n)])
    }

    /// `F_1[X_1, ..., X_d]`.
    pub fn polynomial_ring(d: usize) -> Self {
        Self {
            factors: vec![MonoidFactor::Natural; d],
        }
    }

    pub fn factors(&self) -> &[MonoidFactor] {
        &self.factors
    }

    pub fn identity(&self) -> Vec<i64> {
        vec![0; self.factors.len()]
    }

    pub fn contains(&self, x: &[i64]) -> bool {
        x.len() == self.factors.len()
            && self.factors.iter().zip(x).all(|(f, &a)| match f {
                MonoidFactor::Natural => a >= 0,
                MonoidFactor::Integer => true,
                MonoidFactor::Cyclic(k) => (0..*k as i64).contains(&a),
            })
    }

    /// Reduces cyclic coordinates; fails on negative `N` coordinates.
    pub fn element(&self, x: Vec<i64>) -> Result<Vec<i64>> {
        if x.len() != self.factors.len() {
            return param("element has the wrong number of coordinates");
        }
        let x: Vec<i64> = self
            .factors
            .iter()
            .zip(x)
            .map(|(f, a)| match f {
                MonoidFactor::Cyclic(k) => a.rem_euclid(*k as i64),
                _ => a,
            })
            .collect();
        if !self.contains(&x) {
            return param(format!("{x:?} is not an element of {self}"));
        }
        Ok(x)
    }

    pub fn op(&self, a: &[i64], b: &[i64]) -> Vec<i64> {
        self.factors
            .iter()
            .zip(a.iter().zip(b))
            .map(|(f, (x, y))| match f {
                MonoidFactor::Cyclic(k) => (x + y).rem_euclid(*k as i64),
                _ => x + y,
            })
            .collect()
    }

    pub fn is_unit(&self, a: &[i64]) -> bool {
        self.factors
            .iter()
            .zip(a)
            .all(|(f, &x)| *f != MonoidFactor::Natural || x == 0)
    }

    pub fn inverse(&self, a: &[i64]) -> Option<Vec<i64>> {
        self.is_unit(a).then(|| {
            self.factors
                .iter()
                .zip(a)
                .map(|(f, &x)| match f {
                    MonoidFactor::Cyclic(k) => (-x).rem_euclid(*k as i64),
                    _ => -x,
                })
                .collect()
        })
    }

    /// Number of `Z` factors of the unit group `M^gp`.
    pub fn unit_rank(&self) -> usize {
        self.factors
            .iter()
            .filter(|f| **f == MonoidFactor::Integer)
            .count()
    }

    /// Orders of the finite cyclic factors of `M^gp`.
    pub fn unit_torsion(&self) -> Vec<u64> {
        self.factors
            .iter()
            .filter_map(|f| match f {
                MonoidFactor::Cyclic(k) => Some(*k),
                _ => None,
            })
            .collect()
    }

    /// Units whose `Z` coordinates lie in `[-bound, bound]`, in
    /// lexicographic order.
    pub fn unit_window(&self, bound: i64) -> Vec<Vec<i64>> {
        let ranges: Vec<Vec<i64>> = self
            .factors
            .iter()
            .map(|f| match f {
                MonoidFactor::Natural => vec![0],
                MonoidFactor::Integer => (-bound..=bound).collect(),
                MonoidFactor::Cyclic(k) => (0..*k as i64).collect(),
            })
            .collect();
        cartesian(&ranges)
    }
}

impl fmt::Display for StructuredMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        write!(f, "{}", parts.join(" x "))
    }
}

fn cartesian(ranges: &[Vec<i64>]) -> Vec<Vec<i64>> {
    ranges.iter().fold(vec![vec![]], |acc, r| {
        acc.iter()
            .flat_map(|prefix| {
                r.iter().map(move |&x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect()
    })
}

/// An `M`-linear automorphism of the free module `{1..d} x M`:
/// `(i, m) -> (σ(i), u_i · m)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ModuleAutomorphism {
    pub perm: Perm,
    pub scalars: Vec<Vec<i64>>,
}

impl ModuleAutomorphism {
    pub fn apply(&self, monoid: &StructuredMonoid, (i, m): (usize, &[i64])) -> (usize, Vec<i64>) {
        (self.perm.apply(i), monoid.op(&self.scalars[i], m))
    }

    /// `next ∘ self`.
    pub fn then(&self, next: &ModuleAutomorphism, monoid: &StructuredMonoid) -> ModuleAutomorphism {
        let scalars = (0..self.perm.degree())
            .map(|i| monoid.op(&next.scalars[self.perm.apply(i)], &self.scalars[i]))
            .collect();
        ModuleAutomorphism {
            perm: next.perm.compose(&self.perm),
            scalars,
        }
    }
}

/// `GL_d(M) = S_d ⋉ (M^gp)^d`, with elements enumerated inside an exponent
/// window `[-bound, bound]` on the `Z` factors.
#[derive(Debug, Clone)]
pub struct GlModule {
    pub monoid: StructuredMonoid,
    pub d: usize,
    pub bound: i64,
}

/// Cap on the number of truncated elements [`GlModule::elements`] produces.
pub const GL_MODULE_ENUMERATION_CAP: u128 = 5_000_000;

pub fn gl_module(monoid: StructuredMonoid, d: usize, bound: i64) -> Result<GlModule> {
    if d == 0 {
        return param("d must be positive");
    }
    if bound < 0 {
        return param("exponent bound must be non-negative");
    }
    Ok(GlModule { monoid, d, bound })
}

impl GlModule {
    /// `d! * (2B+1)^{d * rank} * (prod k)^d`.
    pub fn predicted_count(&self) -> u128 {
        let fact: u128 = (1..=self.d as u128).product();
        let window = (2 * self.bound as u128 + 1).pow(self.monoid.unit_rank() as u32);
        let torsion: u128 = self.monoid.unit_torsion().iter().map(|&k| k as u128).product();
        fact * (window * torsion).pow(self.d as u32)
    }

    /// Adjacent transpositions with trivial scalars, and each generator of
    /// `M^gp` placed in the first coordinate.
    pub fn generators(&self) -> Vec<ModuleAutomorphism> {
        let one = self.monoid.identity();
        let mut gens: Vec<ModuleAutomorphism> = (0..self.d.saturating_sub(1))
            .map(|i| ModuleAutomorphism {
                perm: Perm::transposition(self.d, i, i + 1),
                scalars: vec![one.clone(); self.d],
            })
            .collect();
        for (j, f) in self.monoid.factors().iter().enumerate() {
            if *f == MonoidFactor::Natural || *f == MonoidFactor::Cyclic(1) {
                continue;
            }
            let mut u = one.clone();
            u[j] = 1;
            let mut scalars = vec![one.clone(); self.d];
            scalars[0] = u;
            gens.push(ModuleAutomorphism {
                perm: Perm::identity(self.d),
                scalars,
            });
        }
        gens
    }

    pub fn elements(&self) -> Result<Vec<ModuleAutomorphism>> {
        let count = self.predicted_count();
        if count > GL_MODULE_ENUMERATION_CAP {
            return capacity(format!("{count} truncated elements exceed the enumeration cap"));
        }
        let units = self.monoid.unit_window(self.bound);
        let idx_ranges = vec![(0..units.len() as i64).collect::<Vec<_>>(); self.d];
        let tuples = cartesian(&idx_ranges);
        let mut out = Vec::with_capacity(count as usize);
        for perm in all_perms(self.d) {
            for t in &tuples {
                out.push(ModuleAutomorphism {
                    perm: perm.clone(),
                    scalars: t.iter().map(|&k| units[k as usize].clone()).collect(),
                });
            }
        }
        Ok(out)
    }
}
