//! The two adjunctions between scalar extension `F_1 -> F_{1^n}` and the
//! additive / multiplicative scalar restrictions, checked by enumeration.
//!
//! Left:  `Hom_{F_1^n}(V, F_1^n ⊗ W) = Hom_{F_1}(aRes V, W)`, with
//! `aRes V = Z/n x V` encoded as in [`a_res`](super::a_res).
//!
//! Right: `Hom_{F_1^n}(F_1^n ⊗ W, V) = Hom_{F_1}(W, mRes V)`. A tuple of
//! partial maps `(f_1, ..., f_n)` sends `w` to a tuple whose coordinates may
//! individually be undefined, so the multiplicative restriction is realized
//! on tuples over `V ⊔ {⊥}` other than `(⊥, ..., ⊥)`. The fully defined
//! tuples form the Frobenius-stable subset `V^n`. With `V^n` itself as the
//! target the hom-sets have sizes `(|V|+1)^{n|W|}` and `(|V|^n+1)^{|W|}`,
//! which differ as soon as `n > 1` and `V` is non-empty.

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{capacity, param, Result};
use crate::f1::frob::FrobSet;
use crate::f1::space::{F1Space, F1nMorphism, PartialMap};
use crate::perm::Perm;

/// Largest hom-set enumerated by [`adjunction_check`].
pub const ADJUNCTION_ENUMERATION_CAP: u128 = 1 << 22;

/// `(f_1, ..., f_n) -> g` with `g(i, x) = f_{i+1}(x)`.
pub fn left_transpose(f: &F1nMorphism) -> PartialMap {
    let graph = f
        .components()
        .iter()
        .flat_map(|c| c.graph().iter().copied())
        .collect();
    PartialMap::new(f.codomain().dim, graph).expect("images already lie in the codomain")
}

/// Inverse of [`left_transpose`].
pub fn left_untranspose(g: &PartialMap, v: usize, n: usize) -> Result<F1nMorphism> {
    if g.domain().dim != v * n {
        return param("domain of g must be aRes(V) = Z/n x V");
    }
    let w = g.codomain().dim;
    let components = (0..n)
        .map(|i| PartialMap::new(w, g.graph()[i * v..(i + 1) * v].to_vec()))
        .collect::<Result<Vec<_>>>()?;
    F1nMorphism::new(components)
}

/// Size of the partial-tuple realization of `mRes V`.
pub fn m_res_partial_len(v: usize, n: usize) -> usize {
    (v + 1).pow(n as u32) - 1
}

/// `mRes V` realized on non-trivial partial tuples, with the cyclic-shift
/// Frobenius. Tuple `(t_1, ..., t_n)`, `t_k ∈ {⊥ = 0, 1..=|V|}`, is stored at
/// its base-`(|V|+1)` code minus one.
pub fn m_res_partial(v: F1Space, n: usize) -> Result<FrobSet> {
    if n == 0 {
        return param("n must be positive");
    }
    let base = v.dim + 1;
    let size = m_res_partial_len(v.dim, n);
    let images = (1..=size)
        .map(|code| {
            let mut t = decode(code, n, base);
            t.rotate_left(1);
            encode(&t, base) - 1
        })
        .collect();
    Ok(FrobSet::new(Perm::from_images(images)?))
}

fn decode(mut code: usize, n: usize, base: usize) -> Vec<usize> {
    let mut t = vec![0; n];
    for slot in t.iter_mut().rev() {
        *slot = code % base;
        code /= base;
    }
    t
}

fn encode(t: &[usize], base: usize) -> usize {
    t.iter().fold(0, |acc, &x| acc * base + x)
}

/// `(f_1, ..., f_n) -> g` with `g(w) = (f_1(w), ..., f_n(w))`, undefined
/// when every coordinate is.
pub fn right_transpose(f: &F1nMorphism) -> PartialMap {
    let (w, v, n) = (f.domain().dim, f.codomain().dim, f.n());
    let graph = (0..w)
        .map(|x| {
            let t: Vec<usize> = f
                .components()
                .iter()
                .map(|c| c.get(x).map_or(0, |y| y + 1))
                .collect();
            encode(&t, v + 1).checked_sub(1)
        })
        .collect();
    PartialMap::new(m_res_partial_len(v, n), graph).expect("codes lie in the partial-tuple set")
}

/// Inverse of [`right_transpose`].
pub fn right_untranspose(g: &PartialMap, v: usize, n: usize) -> Result<F1nMorphism> {
    if g.codomain().dim != m_res_partial_len(v, n) {
        return param("codomain of g must be the partial-tuple realization of mRes(V)");
    }
    let tuples: Vec<Vec<usize>> = g
        .graph()
        .iter()
        .map(|y| y.map_or(vec![0; n], |y| decode(y + 1, n, v + 1)))
        .collect();
    let components = (0..n)
        .map(|i| {
            PartialMap::new(
                v,
                tuples.iter().map(|t| t[i].checked_sub(1)).collect(),
            )
        })
        .collect::<Result<Vec<_>>>()?;
    F1nMorphism::new(components)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionCheck {
    pub source_count: u128,
    pub target_count: u128,
    pub injective: bool,
    pub surjective: bool,
    /// `untranspose ∘ transpose = id` on the source.
    pub left_inverse: bool,
    /// `transpose ∘ untranspose = id` on the target.
    pub right_inverse: bool,
}

impl BijectionCheck {
    pub fn is_bijection(&self) -> bool {
        self.injective && self.surjective && self.left_inverse && self.right_inverse
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AdjunctionReport {
    pub v: usize,
    pub w: usize,
    pub n: usize,
    pub left: BijectionCheck,
    pub right: BijectionCheck,
    /// Left transpose commutes with post-composition by every `W -> W'`.
    pub left_natural_in_w: bool,
    /// Right transpose commutes with pre-composition by every `W' -> W`.
    pub right_natural_in_w: bool,
    /// `|Hom_{F_1}(W, V^n)|`, the count with the fully defined tuple set.
    pub literal_m_res_hom_count: u128,
}

impl AdjunctionReport {
    pub fn holds(&self) -> bool {
        self.left.is_bijection()
            && self.right.is_bijection()
            && self.left_natural_in_w
            && self.right_natural_in_w
    }
}

fn check_bijection<S, T>(
    sources: &[S],
    targets: &[T],
    forward: impl Fn(&S) -> T,
    backward: impl Fn(&T) -> Result<S>,
    index: impl Fn(&T) -> u128,
) -> Result<BijectionCheck>
where
    S: PartialEq,
    T: PartialEq,
{
    let mut seen = HashSet::with_capacity(sources.len());
    let mut injective = true;
    let mut left_inverse = true;
    for s in sources {
        let t = forward(s);
        injective &= seen.insert(index(&t));
        left_inverse &= backward(&t)? == *s;
    }
    let mut right_inverse = true;
    for t in targets {
        right_inverse &= forward(&backward(t)?) == *t;
    }
    Ok(BijectionCheck {
        source_count: sources.len() as u128,
        target_count: targets.len() as u128,
        injective,
        surjective: seen.len() == targets.len(),
        left_inverse,
        right_inverse,
    })
}

/// Builds both transposition maps for `|V| = v`, `|W| = w` over `F_{1^n}`
/// and verifies by enumeration that they are mutually inverse bijections,
/// natural in `W` against every map to or from a set of size at most
/// `naturality_max`.
pub fn adjunction_check(v: usize, w: usize, n: usize, naturality_max: usize) -> Result<AdjunctionReport> {
    if n == 0 {
        return param("n must be positive");
    }
    let left_count = (w as u128 + 1).pow((n * v) as u32);
    let right_count = (v as u128 + 1).pow((n * w) as u32);
    if left_count.max(right_count) > ADJUNCTION_ENUMERATION_CAP {
        return capacity(format!(
            "hom-sets of size {} exceed the cap {ADJUNCTION_ENUMERATION_CAP}",
            left_count.max(right_count)
        ));
    }

    let left_src: Vec<F1nMorphism> = F1nMorphism::all(v, w, n).collect();
    let left_tgt: Vec<PartialMap> = PartialMap::all(n * v, w).collect();
    let left = check_bijection(
        &left_src,
        &left_tgt,
        left_transpose,
        |g| left_untranspose(g, v, n),
        PartialMap::index,
    )?;

    let right_src: Vec<F1nMorphism> = F1nMorphism::all(w, v, n).collect();
    let right_tgt: Vec<PartialMap> = PartialMap::all(w, m_res_partial_len(v, n)).collect();
    let right = check_bijection(
        &right_src,
        &right_tgt,
        right_transpose,
        |g| right_untranspose(g, v, n),
        PartialMap::index,
    )?;

    let left_transposed: Vec<PartialMap> = left_src.iter().map(left_transpose).collect();
    let right_transposed: Vec<PartialMap> = right_src.iter().map(right_transpose).collect();
    let mut left_natural_in_w = true;
    let mut right_natural_in_w = true;
    for w2 in 0..=naturality_max {
        for k in PartialMap::all(w, w2) {
            let k_n = F1nMorphism::new(vec![k.clone(); n])?;
            for (f, t) in left_src.iter().zip(&left_transposed) {
                let pushed = left_transpose(&f.then(&k_n)?);
                if pushed != t.then(&k) {
                    left_natural_in_w = false;
                }
            }
        }
        for h in PartialMap::all(w2, w) {
            let h_n = F1nMorphism::new(vec![h.clone(); n])?;
            for (f, t) in right_src.iter().zip(&right_transposed) {
                let pulled = right_transpose(&h_n.then(f)?);
                if pulled != h.then(t) {
                    right_natural_in_w = false;
                }
            }
        }
    }

    Ok(AdjunctionReport {
        v,
        w,
        n,
        left,
        right,
        left_natural_in_w,
        right_natural_in_w,
        literal_m_res_hom_count: ((v as u128).pow(n as u32) + 1).pow(w as u32),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_point_three() {
        let r = adjunction_check(1, 1, 3, 1).unwrap();
        assert_eq!(r.left.source_count, 8);
        assert_eq!(r.left.target_count, 8);
        assert_eq!(r.right.source_count, 8);
        assert!(r.holds());
        assert_eq!(r.literal_m_res_hom_count, 2);
    }

    #[test]
    fn two_two_two() {
        let r = adjunction_check(2, 2, 2, 2).unwrap();
        assert_eq!(r.left.source_count, 81);
        assert_eq!(r.left.target_count, 81);
        assert!(r.holds());
    }

    #[test]
    fn empty_target() {
        let r = adjunction_check(2, 0, 3, 1).unwrap();
        assert_eq!(r.left.source_count, 1);
        assert_eq!(r.left.target_count, 1);
        assert!(r.holds());
    }

    #[test]
    fn partial_m_res_contains_v_n() {
        let s = m_res_partial(F1Space::new(2), 2).unwrap();
        assert_eq!(s.len(), 8);
        // fully defined tuples (codes with no zero digit) are permuted among themselves
        let full: Vec<usize> = (1..=8usize)
            .filter(|&c| decode(c, 2, 3).iter().all(|&x| x > 0))
            .map(|c| c - 1)
            .collect();
        assert_eq!(full.len(), 4);
        for &k in &full {
            assert!(full.contains(&s.frobenius().apply(k)));
        }
    }

    #[test]
    fn capacity_is_enforced() {
        assert!(matches!(
            adjunction_check(4, 4, 4, 0),
            Err(crate::Error::Capacity(_))
        ));
    }
}
