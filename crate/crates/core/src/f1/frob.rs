//! Frobenius sets, scalar restrictions from `F_{1^n}` and the automorphism
//! groups of `F_1^d` and `F_{1^n}^d`.

use num_bigint::BigInt;
use serde::Serialize;

use crate::arith::weyl_limit;
use crate::error::{capacity, param, Result};
use crate::f1::space::{F1Space, F1nMorphism, PartialMap};
use crate::perm::{lex_perms, GroupStructure, Perm, PermGroup};

/// How the elements of a [`FrobSet`] are labelled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FrobCarrier {
    Plain,
    /// `Z/n x V`, `(i, x)` stored at `i * dim + x`.
    Additive { n: usize, dim: usize },
    /// `V^n`, `(x_1, ..., x_n)` stored base `dim`, `x_1` most significant.
    Multiplicative { n: usize, dim: usize },
}

/// A finite set with a distinguished bijection (the Frobenius).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrobSet {
    frobenius: Perm,
    carrier: FrobCarrier,
}

impl FrobSet {
    pub fn new(frobenius: Perm) -> Self {
        Self {
            frobenius,
            carrier: FrobCarrier::Plain,
        }
    }

    pub fn with_identity_frobenius(size: usize) -> Self {
        Self::new(Perm::identity(size))
    }

    pub fn len(&self) -> usize {
        self.frobenius.degree()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn frobenius(&self) -> &Perm {
        &self.frobenius
    }

    pub fn carrier(&self) -> FrobCarrier {
        self.carrier
    }

    pub fn label(&self, k: usize) -> String {
        match self.carrier {
            FrobCarrier::Plain => (k + 1).to_string(),
            FrobCarrier::Additive { dim, .. } => format!("({},{})", k / dim, k % dim + 1),
            FrobCarrier::Multiplicative { n, dim } => {
                let parts: Vec<String> = decode_tuple(k, n, dim)
                    .iter()
                    .map(|x| (x + 1).to_string())
                    .collect();
                format!("({})", parts.join(","))
            }
        }
    }
}

fn decode_tuple(mut k: usize, n: usize, dim: usize) -> Vec<usize> {
    let mut t = vec![0; n];
    for slot in t.iter_mut().rev() {
        *slot = k % dim;
        k /= dim;
    }
    t
}

fn encode_tuple(t: &[usize], dim: usize) -> usize {
    t.iter().fold(0, |acc, &x| acc * dim + x)
}

/// `aRes(V) = Z/n x V` with Frobenius `(i, x) -> (i+1, x)`.
pub fn a_res(v: F1Space, n: usize) -> Result<FrobSet> {
    if n == 0 {
        return param("n must be positive");
    }
    let dim = v.dim;
    let images = (0..n * dim)
        .map(|k| ((k / dim + 1) % n) * dim + k % dim)
        .collect();
    Ok(FrobSet {
        frobenius: Perm::from_images(images)?,
        carrier: FrobCarrier::Additive { n, dim },
    })
}

/// `mRes(V) = V^n` with Frobenius `(x_1, ..., x_n) -> (x_2, ..., x_n, x_1)`.
pub fn m_res(v: F1Space, n: usize) -> Result<FrobSet> {
    if n == 0 {
        return param("n must be positive");
    }
    let dim = v.dim;
    let size = dim
        .checked_pow(n as u32)
        .filter(|&s| s <= 1 << 24)
        .ok_or_else(|| crate::Error::Capacity(format!("|V|^n = {dim}^{n} too large")))?;
    let images = (0..size)
        .map(|k| {
            let mut t = decode_tuple(k, n, dim);
            t.rotate_left(1);
            encode_tuple(&t, dim)
        })
        .collect();
    Ok(FrobSet {
        frobenius: Perm::from_images(images)?,
        carrier: FrobCarrier::Multiplicative { n, dim },
    })
}

/// `GL_d(F_1) = S_d`: generator witnesses, order, and, when the order is
/// within `bound`, every automorphism found by filtering all partial maps
/// of `{1..d}` for total bijections.
#[derive(Debug, Clone)]
pub struct AutGroupF1 {
    pub d: usize,
    pub order: BigInt,
    pub generators: Vec<Perm>,
    pub elements: Option<Vec<PartialMap>>,
}

/// Largest `(d+1)^d` scanned when filtering partial maps for bijections.
const PARTIAL_MAP_SCAN_CAP: u128 = 1 << 24;

pub fn aut_group_f1(d: usize, bound: u64) -> Result<AutGroupF1> {
    if d == 0 {
        return param("d must be positive");
    }
    let order = weyl_limit(d as u32);
    let mut generators = vec![];
    if d >= 2 {
        generators.push(Perm::transposition(d, 0, 1));
    }
    if d >= 3 {
        generators.push(Perm::rotation(d));
    }
    let elements = if order <= BigInt::from(bound) {
        let space = F1Space::new(d);
        Some(if space.hom_count(space) <= PARTIAL_MAP_SCAN_CAP {
            PartialMap::all(d, d).filter(PartialMap::is_bijection).collect()
        } else {
            lex_perms(d).map(|p| PartialMap::from_perm(&p)).collect()
        })
    } else {
        None
    };
    Ok(AutGroupF1 {
        d,
        order,
        generators,
        elements,
    })
}

/// `GL_d(F_{1^n}) = (S_d)^n`.
#[derive(Debug, Clone)]
pub struct GlF1n {
    pub d: usize,
    pub n: usize,
    pub order: BigInt,
    pub elements: Option<Vec<F1nMorphism>>,
}

pub fn gl_f1n(d: usize, n: usize, bound: u64) -> Result<GlF1n> {
    if n == 0 {
        return param("n must be positive");
    }
    let base = aut_group_f1(d, bound)?;
    let order = base.order.pow(n as u32);
    let elements = match (&base.elements, order <= BigInt::from(bound)) {
        (Some(components), true) => {
            let mut tuples: Vec<Vec<PartialMap>> = vec![vec![]];
            for _ in 0..n {
                tuples = tuples
                    .into_iter()
                    .flat_map(|t| {
                        components.iter().map(move |c| {
                            let mut t = t.clone();
                            t.push(c.clone());
                            t
                        })
                    })
                    .collect();
            }
            Some(
                tuples
                    .into_iter()
                    .map(F1nMorphism::new)
                    .collect::<Result<Vec<_>>>()?,
            )
        }
        _ => None,
    };
    Ok(GlF1n {
        d,
        n,
        order,
        elements,
    })
}

/// Frobenius-commuting automorphisms of a [`FrobSet`].
#[derive(Debug, Clone)]
pub struct FrobAutGroup {
    pub group: PermGroup,
    pub structure: GroupStructure,
    /// The group is generated by the Frobenius alone.
    pub generated_by_frobenius: bool,
}

/// Exhaustive search over all `|S|!` bijections of the carrier, keeping
/// those that commute with the Frobenius.
pub fn frob_aut_group(s: &FrobSet, bound: u64) -> Result<FrobAutGroup> {
    let size = s.len();
    let candidates = weyl_limit(size as u32);
    if candidates > BigInt::from(bound) {
        return capacity(format!(
            "{size}! candidate bijections exceed the enumeration bound {bound}"
        ));
    }
    let phi = s.frobenius();
    let elements: Vec<Perm> = lex_perms(size)
        .filter(|g| g.compose(phi) == phi.compose(g))
        .collect();
    let group = PermGroup::from_elements(size, elements)?;
    let structure = group.structure();
    let span = PermGroup::generate(size, vec![phi.clone()], bound)?;
    let generated_by_frobenius = span.elements() == group.elements();
    Ok(FrobAutGroup {
        group,
        structure,
        generated_by_frobenius,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::DEFAULT_ENUMERATION_BOUND as B;

    #[test]
    fn a_res_of_point_is_cyclic_successor() {
        let s = a_res(F1Space::new(1), 4).unwrap();
        assert_eq!(s.len(), 4);
        assert_eq!(s.frobenius(), &Perm::rotation(4));
        assert_eq!(s.label(3), "(3,1)");
    }

    #[test]
    fn m_res_examples() {
        let s = m_res(F1Space::new(1), 4).unwrap();
        assert_eq!(s.len(), 1);
        assert!(s.frobenius().is_identity());

        let s = m_res(F1Space::new(2), 2).unwrap();
        assert_eq!(s.len(), 4);
        // (1,2) <-> (2,1), diagonal fixed
        assert_eq!(s.frobenius().images(), &[0, 2, 1, 3]);
        assert_eq!(s.label(1), "(1,2)");
        assert!(m_res(F1Space::new(2), 0).is_err());
    }

    #[test]
    fn aut_group_examples() {
        let g = aut_group_f1(3, B).unwrap();
        assert_eq!(g.order, BigInt::from(6));
        assert_eq!(g.elements.as_ref().unwrap().len(), 6);
        let g = aut_group_f1(1, B).unwrap();
        assert_eq!(g.elements.unwrap().len(), 1);
        let g = aut_group_f1(5, B).unwrap();
        let elems = g.elements.unwrap();
        assert_eq!(elems.len(), 120);
        assert!(elems.iter().all(|e| e.is_total() && e.is_bijection()));
        let span = PermGroup::generate(5, g.generators, B).unwrap();
        assert_eq!(span.order(), 120);
        // above the bound only the description survives
        assert!(aut_group_f1(12, B).unwrap().elements.is_none());
    }

    #[test]
    fn gl_f1n_examples() {
        let g = gl_f1n(2, 3, B).unwrap();
        assert_eq!(g.order, BigInt::from(8));
        let e = g.elements.unwrap();
        assert_eq!(e.len(), 8);
        assert!(e.iter().all(F1nMorphism::is_automorphism));
        assert_eq!(gl_f1n(1, 5, B).unwrap().elements.unwrap().len(), 1);
    }

    #[test]
    fn frob_aut_examples() {
        let g = frob_aut_group(&a_res(F1Space::new(1), 5).unwrap(), B).unwrap();
        assert_eq!(g.structure, GroupStructure::Cyclic { order: 5 });
        assert!(g.generated_by_frobenius);

        let g = frob_aut_group(&FrobSet::with_identity_frobenius(3), B).unwrap();
        assert_eq!(g.group.order(), 6);
        assert_eq!(g.structure, GroupStructure::NonAbelian { order: 6 });

        let g = frob_aut_group(&a_res(F1Space::new(2), 2).unwrap(), B).unwrap();
        assert_eq!(g.group.order(), 8);
        assert!(!g.generated_by_frobenius);

        assert!(frob_aut_group(&FrobSet::with_identity_frobenius(12), B).is_err());
    }
}
