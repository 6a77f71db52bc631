//! Shapes, the presentations `O[[X_i, Y_i, Z_j]] / (X_i Y_i - p)` and the
//! Hilbert series of their special fibres.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{param, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ShapeLetter {
    I,
    II,
}

/// A word in `{I, II}` of length `f`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Shape {
    letters: Vec<ShapeLetter>,
}

impl Shape {
    pub fn new(letters: Vec<ShapeLetter>) -> Result<Self> {
        if letters.is_empty() {
            return param("f must be positive");
        }
        Ok(Self { letters })
    }

    pub fn from_jii(f: usize, jii: &BTreeSet<usize>) -> Result<Self> {
        if let Some(&i) = jii.iter().find(|&&i| i >= f) {
            return Err(Error::IndexOutOfRange { index: i, bound: f });
        }
        Self::new(
            (0..f)
                .map(|i| if jii.contains(&i) { ShapeLetter::II } else { ShapeLetter::I })
                .collect(),
        )
    }

    pub fn f(&self) -> usize {
        self.letters.len()
    }

    pub fn letters(&self) -> &[ShapeLetter] {
        &self.letters
    }

    pub fn jii(&self) -> BTreeSet<usize> {
        self.letters
            .iter()
            .enumerate()
            .filter(|(_, l)| **l == ShapeLetter::II)
            .map(|(i, _)| i)
            .collect()
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self
            .letters
            .iter()
            .map(|l| match l {
                ShapeLetter::I => "I",
                ShapeLetter::II => "II",
            })
            .collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for Shape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let letters = s
            .split(',')
            .map(|t| match t.trim() {
                "I" => Ok(ShapeLetter::I),
                "II" => Ok(ShapeLetter::II),
                other => param(format!("bad shape letter {other:?}")),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(letters)
    }
}

/// Parses `"0,2"` (or the empty string) into a set of indices.
pub fn parse_index_set(s: &str) -> Result<BTreeSet<usize>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<usize>().map_err(|_| Error::Parameter(format!("bad index {t:?}"))))
        .collect()
}

/// Variables `X_i, Y_i` for `i ∈ J_II`, `Z_j` for `j ∉ J_II`, relations
/// `X_i Y_i - p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeformationPresentation {
    pub f: usize,
    pub jii: BTreeSet<usize>,
}

impl DeformationPresentation {
    pub fn new(f: usize, jii: BTreeSet<usize>) -> Result<Self> {
        Shape::from_jii(f, &jii)?;
        Ok(Self { f, jii })
    }

    pub fn from_shape(shape: &Shape) -> Self {
        Self {
            f: shape.f(),
            jii: shape.jii(),
        }
    }

    pub fn paired(&self) -> usize {
        self.jii.len()
    }

    pub fn num_variables(&self) -> usize {
        self.f + self.paired()
    }

    /// Krull dimension of the special fibre.
    pub fn dimension(&self) -> usize {
        self.num_variables() - self.paired()
    }

    pub fn variables(&self) -> Vec<String> {
        (0..self.f)
            .flat_map(|i| {
                if self.jii.contains(&i) {
                    vec![format!("X{i}"), format!("Y{i}")]
                } else {
                    vec![format!("Z{i}")]
                }
            })
            .collect()
    }

    pub fn relations(&self) -> Vec<String> {
        self.jii.iter().map(|i| format!("X{i}*Y{i} - p")).collect()
    }
}

/// `C(n, k)`, zero for `n < 0`.
fn binomial(n: i64, k: usize) -> BigInt {
    if n < 0 || (n as usize) < k {
        return BigInt::zero();
    }
    (0..k).fold(BigInt::one(), |acc, i| acc * (n - i as i64) / (i + 1))
}

/// Degree-`k` parts of `k[X_i, Y_i, Z_j] / (X_i Y_i)` for `k = 0..=up_to`,
/// by inclusion–exclusion over subsets of the relations.
pub fn hilbert_series_special_fibre(d: &DeformationPresentation, up_to: usize) -> Vec<BigInt> {
    let n = d.num_variables();
    let m = d.paired();
    (0..=up_to)
        .map(|k| {
            (0..=m).fold(BigInt::zero(), |acc, s| {
                let term = binomial(m as i64, s)
                    * binomial(k as i64 - 2 * s as i64 + n as i64 - 1, n - 1);
                if s % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                }
            })
        })
        .collect()
}

/// `2^{|J_II|}`.
pub fn hs_multiplicity(d: &DeformationPresentation) -> BigInt {
    BigInt::one() << d.paired()
}

/// The multiplicity read off the Hilbert function: its `(dim - 1)`-th finite
/// difference at a degree where it is already polynomial, checked stable at
/// the next degree.
pub fn multiplicity_from_hilbert(d: &DeformationPresentation) -> Result<BigInt> {
    let dim = d.dimension();
    if dim == 0 {
        return param("special fibre of dimension 0");
    }
    // h is polynomial from degree 2m on
    let start = 2 * d.paired() + 1;
    let series = hilbert_series_special_fibre(d, start + dim + 1);
    let diff_at = |k: usize| -> BigInt {
        (0..dim).fold(BigInt::zero(), |acc, i| {
            let c = binomial((dim - 1) as i64, i) * &series[k + dim - 1 - i];
            if i % 2 == 0 {
                acc + c
            } else {
                acc - c
            }
        })
    };
    let e = diff_at(start);
    if e != diff_at(start + 1) {
        return Err(Error::Domain("Hilbert function not yet polynomial".into()));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(f: usize, jii: &[usize]) -> DeformationPresentation {
        DeformationPresentation::new(f, jii.iter().copied().collect()).unwrap()
    }

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn series_examples() {
        assert_eq!(hilbert_series_special_fibre(&pres(1, &[0]), 4), ints(&[1, 2, 2, 2, 2]));
        assert_eq!(hilbert_series_special_fibre(&pres(1, &[]), 3), ints(&[1, 1, 1, 1]));
        assert_eq!(hilbert_series_special_fibre(&pres(2, &[0]), 4), ints(&[1, 3, 5, 7, 9]));
    }

    #[test]
    fn multiplicity_examples() {
        for (f, jii, e) in [(1, vec![], 1), (1, vec![0], 2), (3, vec![0, 1, 2], 8), (6, vec![1, 3], 4)] {
            let d = pres(f, &jii);
            assert_eq!(hs_multiplicity(&d), BigInt::from(e));
            assert_eq!(multiplicity_from_hilbert(&d).unwrap(), BigInt::from(e));
        }
    }

    #[test]
    fn presentation_bookkeeping() {
        let d = pres(3, &[0, 2]);
        assert_eq!(d.variables(), vec!["X0", "Y0", "Z1", "X2", "Y2"]);
        assert_eq!(d.relations(), vec!["X0*Y0 - p", "X2*Y2 - p"]);
        assert_eq!(d.dimension(), 3);
        assert!(DeformationPresentation::new(2, [2].into_iter().collect()).is_err());
    }

    #[test]
    fn shapes() {
        let s: Shape = "II,I,II".parse().unwrap();
        assert_eq!(s.jii(), [0, 2].into_iter().collect());
        assert_eq!(s.to_string(), "II,I,II");
        assert_eq!(Shape::from_jii(3, &s.jii()).unwrap(), s);
        assert_eq!(parse_index_set("").unwrap(), BTreeSet::new());
        assert_eq!(parse_index_set("2, 0").unwrap(), [0, 2].into_iter().collect());
        assert!("III".parse::<Shape>().is_err());
    }
}
