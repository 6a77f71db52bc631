//! Permutations of `{0, ..., d-1}` and finite permutation groups.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{capacity, param, Result};

/// Default cap on explicitly enumerated group orders.
pub const DEFAULT_ENUMERATION_BOUND: u64 = 1_000_000;

/// A bijection of `{0, ..., d-1}` stored by its images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm((0..degree).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return param(format!("{images:?} is not a permutation"));
            }
        }
        Ok(Perm(images))
    }

    /// Parses one-line notation with 1-based images, e.g. `"2,3,1"`.
    pub fn parse_one_line(s: &str) -> Result<Self> {
        let images = s
            .split(',')
            .map(|t| match t.trim().parse::<usize>() {
                Ok(v) if v >= 1 => Ok(v - 1),
                _ => param(format!("bad permutation entry {t:?}")),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_images(images)
    }

    pub fn transposition(degree: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..degree).collect();
        images.swap(a, b);
        Perm(images)
    }

    /// `i -> i + 1 mod degree`.
    pub fn rotation(degree: usize) -> Self {
        Perm((0..degree).map(|i| (i + 1) % degree).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    pub fn pow(&self, k: u64) -> Perm {
        (0..k).fold(Perm::identity(self.degree()), |acc, _| self.compose(&acc))
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Non-trivial cycles, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = vec![];
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![];
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.0[i];
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Cycle lengths (including fixed points), sorted descending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let moved: usize = self.cycles().iter().map(Vec::len).sum();
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.extend(std::iter::repeat_n(1, self.degree() - moved));
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    /// Multiplicative order, as the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_type()
            .into_iter()
            .fold(1u64, |acc, l| acc.lcm(&(l as u64)))
    }

    /// Acts on a coordinate vector by moving entry `i` to position `self(i)`.
    pub fn permute_coordinates<T: Clone>(&self, v: &[T]) -> Vec<T> {
        debug_assert_eq!(v.len(), self.degree());
        let mut out = v.to_vec();
        for (i, x) in v.iter().enumerate() {
            out[self.0[i]] = x.clone();
        }
        out
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Isomorphism type of a finite group, as far as it is classified here.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GroupStructure {
    Trivial,
    Cyclic { order: u64 },
    /// Invariant factors `d_1 | d_2 | ... | d_k`, with `k >= 2`.
    Abelian { invariants: Vec<u64> },
    NonAbelian { order: u64 },
}

impl GroupStructure {
    fn from_invariants(invariants: Vec<u64>) -> Self {
        match invariants.as_slice() {
            [] => GroupStructure::Trivial,
            [n] => GroupStructure::Cyclic { order: *n },
            _ => GroupStructure::Abelian { invariants },
        }
    }

    pub fn is_cyclic(&self) -> bool {
        matches!(self, GroupStructure::Trivial | GroupStructure::Cyclic { .. })
    }
}

impl fmt::Display for GroupStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupStructure::Trivial => write!(f, "trivial"),
            GroupStructure::Cyclic { order } => write!(f, "cyclic of order {order}"),
            GroupStructure::Abelian { invariants } => {
                let parts: Vec<String> = invariants.iter().map(|d| format!("Z/{d}")).collect();
                write!(f, "abelian {}", parts.join(" x "))
            }
            GroupStructure::NonAbelian { order } => write!(f, "non-abelian of order {order}"),
        }
    }
}

/// An explicitly enumerated permutation group, elements sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Perm>,
    elements: Vec<Perm>,
}

impl PermGroup {
    /// Closure of `generators` under composition.
    pub fn generate(degree: usize, generators: Vec<Perm>, bound: u64) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return param(format!("generator {g} has wrong degree"));
        }
        let id = Perm::identity(degree);
        let mut seen: HashSet<Perm> = HashSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = g.compose(&x);
                if !seen.contains(&y) {
                    if seen.len() as u64 >= bound {
                        return capacity(format!("group order exceeds enumeration bound {bound}"));
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Perm> = seen.into_iter().collect();
        elements.sort();
        Ok(Self {
            degree,
            generators,
            elements,
        })
    }

    /// Wraps a list of permutations already known to form a group and picks
    /// generator witnesses greedily in canonical order.
    pub fn from_elements(degree: usize, mut elements: Vec<Perm>) -> Result<Self> {
        elements.sort();
        elements.dedup();
        let set: HashSet<&Perm> = elements.iter().collect();
        if !set.contains(&Perm::identity(degree)) {
            return param("element list lacks the identity");
        }
        for a in &elements {
            for b in &elements {
                if !set.contains(&a.compose(b)) {
                    return param("element list is not closed under composition");
                }
            }
        }
        let bound = elements.len() as u64;
        let mut generators: Vec<Perm> = vec![];
        let mut span = Self::generate(degree, vec![], bound)?;
        for x in &elements {
            if !span.contains(x) {
                generators.push(x.clone());
                span = Self::generate(degree, generators.clone(), bound)?;
            }
        }
        Ok(Self {
            degree,
            generators,
            elements,
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Perm] {
        &self.generators
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(i, a)| {
            self.generators[i + 1..]
                .iter()
                .all(|b| a.compose(b) == b.compose(a))
        })
    }

    pub fn exponent(&self) -> u64 {
        self.elements
            .iter()
            .fold(1u64, |acc, g| acc.lcm(&g.order()))
    }

    pub fn structure(&self) -> GroupStructure {
        if !self.is_abelian() {
            return GroupStructure::NonAbelian {
                order: self.order(),
            };
        }
        GroupStructure::from_invariants(abelian_invariants(
            &self.elements.iter().map(Perm::order).collect::<Vec<_>>(),
        ))
    }
}

/// Invariant factors of a finite abelian group from the multiset of its
/// element orders.
///
/// For each prime `p`, `#{g : g^{p^k} = 1} = p^{s_k}` and `s_k - s_{k-1}`
/// counts the cyclic `p`-primary factors of order at least `p^k`.
pub fn abelian_invariants(element_orders: &[u64]) -> Vec<u64> {
    let order = element_orders.len() as u64;
    let mut primary: BTreeMap<u64, Vec<u32>> = BTreeMap::new();
    for p in prime_factors(order) {
        let mut exponents_at_least: Vec<u32> = vec![];
        let mut prev = 0u32;
        let mut pk = 1u64;
        loop {
            pk *= p;
            let count = element_orders.iter().filter(|&&o| pk.is_multiple_of(o)).count() as u64;
            let s = ilog(count, p);
            if s == prev {
                break;
            }
            exponents_at_least.push(s - prev);
            prev = s;
        }
        // exponents_at_least[k-1] = number of factors of order >= p^k
        let mut parts = vec![];
        for (k, &c) in exponents_at_least.iter().enumerate() {
            let next = exponents_at_least.get(k + 1).copied().unwrap_or(0);
            parts.extend(std::iter::repeat_n(k as u32 + 1, (c - next) as usize));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        primary.insert(p, parts);
    }
    let rank = primary.values().map(Vec::len).max().unwrap_or(0);
    let mut invariants: Vec<u64> = (0..rank)
        .map(|i| {
            primary
                .iter()
                .map(|(&p, parts)| parts.get(i).map_or(1, |&e| p.pow(e)))
                .product()
        })
        .collect();
    invariants.reverse();
    invariants
}

fn ilog(mut x: u64, p: u64) -> u32 {
    let mut k = 0;
    while x > 1 {
        debug_assert_eq!(x % p, 0);
        x /= p;
        k += 1;
    }
    k
}

pub fn prime_factors(mut n: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    let mut d = 2;
    while d * d <= n {
        while n.is_multiple_of(d) {
            out.insert(d);
            n /= d;
        }
        d += 1;
    }
    if n > 1 {
        out.insert(n);
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n).into_iter().eq([n])
}

/// All permutations of `{0, ..., d-1}` in lexicographic order.
pub fn all_perms(degree: usize) -> Vec<Perm> {
    lex_perms(degree).collect()
}

/// Lazy lexicographic enumeration of the permutations of `{0, ..., d-1}`.
pub fn lex_perms(degree: usize) -> impl Iterator<Item = Perm> {
    let mut next: Option<Vec<usize>> = Some((0..degree).collect());
    std::iter::from_fn(move || {
        let current = next.take()?;
        let mut a = current.clone();
        // standard next-permutation step
        if let Some(i) = (1..a.len()).rev().find(|&i| a[i - 1] < a[i]) {
            let j = (i..a.len()).rev().find(|&j| a[j] > a[i - 1]).unwrap();
            a.swap(i - 1, j);
            a[i..].reverse();
            next = Some(a);
        }
        Some(Perm(current))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn order_by_iteration(p: &Perm) -> u64 {
        let mut x = p.clone();
        let mut k = 1;
        while !x.is_identity() {
            x = p.compose(&x);
            k += 1;
        }
        k
    }

    #[test]
    fn order_matches_iteration_for_s5() {
        for p in all_perms(5) {
            assert_eq!(p.order(), order_by_iteration(&p));
        }
    }

    #[test]
    fn compose_applies_right_first() {
        let c = Perm::parse_one_line("2,3,1").unwrap(); // (1 2 3)
        let t = Perm::parse_one_line("2,1,3").unwrap(); // (1 2)
        assert_eq!(c.compose(&t).to_string(), "(1 3)");
        assert!(c.compose(&c.inverse()).is_identity());
    }

    #[test]
    fn parse_rejects_non_permutations() {
        assert!(Perm::parse_one_line("1,1").is_err());
        assert!(Perm::parse_one_line("0,1").is_err());
        assert!(Perm::parse_one_line("1,x").is_err());
    }

    #[test]
    fn symmetric_group_generation() {
        let g = PermGroup::generate(
            4,
            vec![Perm::transposition(4, 0, 1), Perm::rotation(4)],
            DEFAULT_ENUMERATION_BOUND,
        )
        .unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(g.structure(), GroupStructure::NonAbelian { order: 24 });
        assert!(PermGroup::generate(4, vec![Perm::rotation(4)], 3).is_err());
    }

    #[test]
    fn klein_four_invariants() {
        let a = Perm::from_images(vec![1, 0, 3, 2]).unwrap();
        let b = Perm::from_images(vec![2, 3, 0, 1]).unwrap();
        let g = PermGroup::generate(4, vec![a, b], 100).unwrap();
        assert_eq!(g.structure(), GroupStructure::Abelian { invariants: vec![2, 2] });
        assert_eq!(g.exponent(), 2);
    }

    #[test]
    fn invariants_from_orders() {
        // Z/2 x Z/6 ~ Z/2 x Z/2 x Z/3
        let orders = [1, 2, 2, 2, 3, 3, 6, 6, 6, 6, 6, 6];
        assert_eq!(abelian_invariants(&orders), vec![2, 6]);
        assert_eq!(abelian_invariants(&[1]), Vec::<u64>::new());
        assert_eq!(abelian_invariants(&[1, 4, 2, 4]), vec![4]);
    }

    #[test]
    fn from_elements_finds_generators() {
        let r = Perm::rotation(5);
        let elems: Vec<Perm> = (0..5).map(|k| r.pow(k)).collect();
        let g = PermGroup::from_elements(5, elems).unwrap();
        assert_eq!(g.generators().len(), 1);
        assert_eq!(g.structure(), GroupStructure::Cyclic { order: 5 });
        assert!(PermGroup::from_elements(5, vec![r.clone()]).is_err());
    }

    #[test]
    fn lex_perms_counts() {
        assert_eq!(lex_perms(0).count(), 1);
        assert_eq!(lex_perms(4).count(), 24);
        let v = all_perms(3);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn primes() {
        assert!(is_prime(2) && is_prime(3) && is_prime(31));
        assert!(!is_prime(1) && !is_prime(9) && !is_prime(0));
    }
}
