use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{param, Result};

/// A vector space over `F_1`: a finite set, here `{1, ..., dim}` (stored
/// 0-based). The dimension is the cardinality.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct F1Space {
    pub dim: usize,
}

impl F1Space {
    pub fn new(dim: usize) -> Self {
        Self { dim }
    }

    /// Disjoint union; the summand `other` is placed after `self`.
    pub fn direct_sum(self, other: F1Space) -> F1Space {
        F1Space::new(self.dim + other.dim)
    }

    /// Cartesian product; `(v, w)` is encoded as `v * other.dim + w`.
    pub fn tensor(self, other: F1Space) -> F1Space {
        F1Space::new(self.dim * other.dim)
    }

    /// Number of `F_1`-linear maps `self -> target`: `(|W| + 1)^{|V|}`.
    pub fn hom_count(self, target: F1Space) -> u128 {
        (target.dim as u128 + 1).pow(self.dim as u32)
    }
}

/// A partially defined map between finite sets.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PartialMap {
    domain: usize,
    codomain: usize,
    graph: Vec<Option<usize>>,
}

impl PartialMap {
    pub fn new(codomain: usize, graph: Vec<Option<usize>>) -> Result<Self> {
        if let Some(y) = graph.iter().flatten().find(|&&y| y >= codomain) {
            return param(format!("image {y} outside codomain of size {codomain}"));
        }
        Ok(Self {
            domain: graph.len(),
            codomain,
            graph,
        })
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            domain: dim,
            codomain: dim,
            graph: (0..dim).map(Some).collect(),
        }
    }

    /// The everywhere-undefined map.
    pub fn empty(domain: usize, codomain: usize) -> Self {
        Self {
            domain,
            codomain,
            graph: vec![None; domain],
        }
    }

    pub fn from_perm(p: &crate::perm::Perm) -> Self {
        Self {
            domain: p.degree(),
            codomain: p.degree(),
            graph: p.images().iter().copied().map(Some).collect(),
        }
    }

    pub fn domain(&self) -> F1Space {
        F1Space::new(self.domain)
    }

    pub fn codomain(&self) -> F1Space {
        F1Space::new(self.codomain)
    }

    pub fn graph(&self) -> &[Option<usize>] {
        &self.graph
    }

    pub fn get(&self, x: usize) -> Option<usize> {
        self.graph[x]
    }

    pub fn is_total(&self) -> bool {
        self.graph.iter().all(Option::is_some)
    }

    pub fn is_bijection(&self) -> bool {
        if self.domain != self.codomain || !self.is_total() {
            return false;
        }
        let mut hit = vec![false; self.codomain];
        self.graph
            .iter()
            .flatten()
            .all(|&y| !std::mem::replace(&mut hit[y], true))
    }

    /// `next ∘ self`, defined at `x` exactly when both steps are.
    pub fn then(&self, next: &PartialMap) -> PartialMap {
        debug_assert_eq!(self.codomain, next.domain);
        PartialMap {
            domain: self.domain,
            codomain: next.codomain,
            graph: self.graph.iter().map(|y| y.and_then(|y| next.graph[y])).collect(),
        }
    }

    /// Position in the canonical enumeration of `Hom(domain, codomain)`:
    /// base `codomain + 1` digits, least significant first, undefined = 0.
    pub fn index(&self) -> u128 {
        let base = self.codomain as u128 + 1;
        self.graph
            .iter()
            .rev()
            .fold(0u128, |acc, y| acc * base + y.map_or(0, |y| y as u128 + 1))
    }

    pub fn from_index(domain: usize, codomain: usize, mut index: u128) -> Self {
        let base = codomain as u128 + 1;
        let graph = (0..domain)
            .map(|_| {
                let d = index % base;
                index /= base;
                d.checked_sub(1).map(|y| y as usize)
            })
            .collect();
        Self {
            domain,
            codomain,
            graph,
        }
    }

    /// Every partial map `domain -> codomain`, in index order.
    pub fn all(domain: usize, codomain: usize) -> impl Iterator<Item = PartialMap> {
        let count = F1Space::new(domain).hom_count(F1Space::new(codomain));
        (0..count).map(move |i| PartialMap::from_index(domain, codomain, i))
    }
}

impl fmt::Display for PartialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .graph
            .iter()
            .enumerate()
            .map(|(x, y)| match y {
                Some(y) => format!("{}->{}", x + 1, y + 1),
                None => format!("{}->_", x + 1),
            })
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// A morphism of `F_{1^n}`-vector spaces: `n` partial maps sharing domain
/// and codomain. Composition is componentwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct F1nMorphism {
    components: Vec<PartialMap>,
}

impl F1nMorphism {
    pub fn new(components: Vec<PartialMap>) -> Result<Self> {
        let Some(first) = components.first() else {
            return param("an F_1^n morphism needs n >= 1 components");
        };
        if components
            .iter()
            .any(|c| c.domain != first.domain || c.codomain != first.codomain)
        {
            return param("components must share domain and codomain");
        }
        Ok(Self { components })
    }

    pub fn n(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[PartialMap] {
        &self.components
    }

    pub fn domain(&self) -> F1Space {
        self.components[0].domain()
    }

    pub fn codomain(&self) -> F1Space {
        self.components[0].codomain()
    }

    pub fn then(&self, next: &F1nMorphism) -> Result<F1nMorphism> {
        if self.n() != next.n() {
            return param("cannot compose morphisms over different F_1^n");
        }
        F1nMorphism::new(
            self.components
                .iter()
                .zip(&next.components)
                .map(|(a, b)| a.then(b))
                .collect(),
        )
    }

    pub fn is_automorphism(&self) -> bool {
        self.components.iter().all(PartialMap::is_bijection)
    }

    /// Every `F_{1^n}`-morphism `domain -> codomain`, lexicographic in the
    /// component indices.
    pub fn all(domain: usize, codomain: usize, n: usize) -> impl Iterator<Item = F1nMorphism> {
        let per = F1Space::new(domain).hom_count(F1Space::new(codomain));
        let total = per.pow(n as u32);
        (0..total).map(move |mut i| {
            let components = (0..n)
                .map(|_| {
                    let c = PartialMap::from_index(domain, codomain, i % per);
                    i /= per;
                    c
                })
                .collect();
            F1nMorphism { components }
        })
    }
}

/// A morphism of `F̄_1`-vector spaces with one global period `m`:
/// `f_i = components[i mod m]`.
#[derive(Debug, Clone, Serialize)]
pub struct FbarMorphism {
    components: Vec<PartialMap>,
}

impl FbarMorphism {
    pub fn new(components: Vec<PartialMap>) -> Result<Self> {
        let F1nMorphism { components } = F1nMorphism::new(components)?;
        Ok(Self { components })
    }

    /// Builds the morphism from one periodic image sequence per element;
    /// the global period is the lcm of the individual ones.
    pub fn from_pointwise(codomain: usize, sequences: &[Vec<Option<usize>>]) -> Result<Self> {
        if sequences.iter().any(Vec::is_empty) {
            return param("each element needs a non-empty period");
        }
        let period = sequences.iter().fold(1usize, |acc, s| acc.lcm(&s.len()));
        let components = (0..period)
            .map(|i| PartialMap::new(codomain, sequences.iter().map(|s| s[i % s.len()]).collect()))
            .collect::<Result<Vec<_>>>()?;
        if components.is_empty() {
            return Ok(Self {
                components: vec![PartialMap::empty(0, codomain)],
            });
        }
        Self::new(components)
    }

    /// The image of `(f_1, ..., f_n)` under `Vect_{F_1^n} -> Vect_{F̄_1}`.
    pub fn from_f1n(m: &F1nMorphism) -> Self {
        Self {
            components: m.components.clone(),
        }
    }

    /// Scalar extension from `F_1`: the constant sequence.
    pub fn constant(f: &PartialMap) -> Self {
        Self {
            components: vec![f.clone()],
        }
    }

    pub fn period(&self) -> usize {
        self.components.len()
    }

    pub fn component(&self, i: usize) -> &PartialMap {
        &self.components[i % self.components.len()]
    }

    /// Smallest `d | period` with `f_{i+d} = f_i` for all `i`.
    pub fn minimal_period(&self) -> usize {
        let m = self.period();
        (1..=m)
            .filter(|d| m.is_multiple_of(*d))
            .find(|&d| (0..m).all(|i| self.components[i] == self.components[(i + d) % m]))
            .unwrap_or(m)
    }

    pub fn then(&self, next: &FbarMorphism) -> FbarMorphism {
        let period = self.period().lcm(&next.period());
        FbarMorphism {
            components: (0..period)
                .map(|i| self.component(i).then(next.component(i)))
                .collect(),
        }
    }
}

impl PartialEq for FbarMorphism {
    fn eq(&self, other: &Self) -> bool {
        let period = self.period().lcm(&other.period());
        (0..period).all(|i| self.component(i) == other.component(i))
    }
}

impl Eq for FbarMorphism {}

/// Scalar extension `V -> F_{1^n} ⊗ V` on objects (the identity).
pub fn scalar_extend(v: F1Space, _n: usize) -> F1Space {
    v
}

/// Scalar extension on morphisms: `f -> (f, ..., f)`.
pub fn extend_morphism(f: &PartialMap, n: usize) -> Result<F1nMorphism> {
    F1nMorphism::new(vec![f.clone(); n])
}
