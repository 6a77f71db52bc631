use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{param, Result};

/// `Sym^{k_0} F_1^2 x ... x Sym^{k_{f-1}} F_1^2` with `(Z/2)^f` acting by
/// swapping `X` and `Y` coordinatewise.
///
/// An element is a tuple `(a_0, ..., a_{f-1})` with `a_i <= k_i`, standing
/// for the monomial `X^{k_i - a_i} Y^{a_i}` in coordinate `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SymRep {
    degrees: Vec<u32>,
}

pub fn sym_rep(degrees: &[u32]) -> Result<SymRep> {
    if degrees.is_empty() {
        return param("need at least one degree (f >= 1)");
    }
    Ok(SymRep {
        degrees: degrees.to_vec(),
    })
}

impl SymRep {
    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn f(&self) -> usize {
        self.degrees.len()
    }

    pub fn len(&self) -> usize {
        self.degrees.iter().map(|&k| k as usize + 1).product()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn elements(&self) -> Vec<Vec<u32>> {
        self.degrees.iter().fold(vec![vec![]], |acc, &k| {
            acc.iter()
                .flat_map(|prefix| {
                    (0..=k).map(move |a| {
                        let mut v = prefix.clone();
                        v.push(a);
                        v
                    })
                })
                .collect()
        })
    }

    /// Action of the basis element `e_i` of `(Z/2)^f`.
    pub fn swap(&self, i: usize, x: &[u32]) -> Vec<u32> {
        let mut y = x.to_vec();
        y[i] = self.degrees[i] - x[i];
        y
    }

    pub fn orbit(&self, x: &[u32]) -> BTreeSet<Vec<u32>> {
        let mut orbit = BTreeSet::from([x.to_vec()]);
        let mut frontier = vec![x.to_vec()];
        while let Some(y) = frontier.pop() {
            for i in 0..self.f() {
                let z = self.swap(i, &y);
                if orbit.insert(z.clone()) {
                    frontier.push(z);
                }
            }
        }
        orbit
    }

    pub fn monomial(&self, x: &[u32]) -> String {
        let parts: Vec<String> = self
            .degrees
            .iter()
            .zip(x)
            .map(|(&k, &a)| match (k - a, a) {
                (0, 0) => "1".to_string(),
                (d, 0) => format!("X^{d}"),
                (0, e) => format!("Y^{e}"),
                (d, e) => format!("X^{d}Y^{e}"),
            })
            .collect();
        parts.join(" ⊗ ")
    }

    /// Transitivity of the `(Z/2)^f`-action.
    pub fn is_irreducible(&self) -> bool {
        let start = vec![0; self.f()];
        self.orbit(&start).len() == self.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let r = sym_rep(&[1, 1]).unwrap();
        assert_eq!(r.len(), 4);
        assert!(r.is_irreducible());
        let r = sym_rep(&[2]).unwrap();
        assert!(!r.is_irreducible());
        assert_eq!(r.orbit(&[1]).len(), 1); // XY is fixed
        assert!(sym_rep(&[1, 0, 1]).unwrap().is_irreducible());
        assert!(sym_rep(&[]).is_err());
    }

    #[test]
    fn monomial_labels() {
        let r = sym_rep(&[2, 0]).unwrap();
        assert_eq!(r.monomial(&[1, 0]), "X^1Y^1 ⊗ 1");
    }
}
