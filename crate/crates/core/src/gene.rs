//! Genes: `2f`-periodic words over `{A, B, AB, O}` determined backwards
//! from the radix-`p` digits of `h - (q+1)γ'`, `q = p^f`.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::arith::{checked_pow, radix_decompose, RadixDigits, ResidueInt};
use crate::error::{param, Result};

/// `(p, f, h mod p^{2f} - 1, γ' mod p^f - 1)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneInput {
    pub p: u64,
    pub f: u32,
    pub h: ResidueInt,
    pub gamma_prime: ResidueInt,
}

impl GeneInput {
    pub fn new(p: u64, f: u32, h: i128, gamma_prime: i128) -> Result<Self> {
        if p < 2 {
            return param("p must be at least 2");
        }
        if f == 0 {
            return param("f must be positive");
        }
        let q = checked_pow(p, f)?;
        let q2 = checked_pow(p, 2 * f)?;
        Ok(Self {
            p,
            f,
            h: ResidueInt::new(h, q2 - 1)?,
            gamma_prime: ResidueInt::new(gamma_prime, q - 1)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneDigits {
    /// `h - (q+1)γ'` modulo `q^2 - 1`.
    pub residue: ResidueInt,
    pub digits: RadixDigits,
    /// The residue is zero.
    pub degenerate: bool,
}

pub fn digits_from_params(g: &GeneInput) -> Result<GeneDigits> {
    let q = checked_pow(g.p, g.f)? as i128;
    let modulus = g.h.modulus();
    let value = g.h.value() as i128 - (q + 1) * g.gamma_prime.value() as i128;
    let residue = ResidueInt::new(value, modulus)?;
    Ok(GeneDigits {
        digits: radix_decompose(&residue, g.p, g.f)?,
        degenerate: residue.is_zero(),
        residue,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Letter {
    A,
    B,
    AB,
    O,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::B, Letter::AB, Letter::O];
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::A => "A",
            Letter::B => "B",
            Letter::AB => "AB",
            Letter::O => "O",
        })
    }
}

impl FromStr for Letter {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" => Ok(Letter::A),
            "B" => Ok(Letter::B),
            "AB" => Ok(Letter::AB),
            "O" => Ok(Letter::O),
            _ => param(format!("unknown gene letter {s:?}")),
        }
    }
}

/// One period `X_0, ..., X_{2f-1}` of a gene.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Gene {
    letters: Vec<Letter>,
}

impl Gene {
    pub fn new(letters: Vec<Letter>) -> Self {
        Self { letters }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// `X_{i mod 2f}`.
    pub fn at(&self, i: usize) -> Letter {
        self.letters[i % self.letters.len()]
    }

    /// Re-indexing `X'_i = X_{i+k}`.
    pub fn rotate(&self, k: usize) -> Self {
        let mut letters = self.letters.clone();
        let len = letters.len();
        if len > 0 {
            letters.rotate_left(k % len);
        }
        Self { letters }
    }
}

/// Letters written one after another, e.g. `OO`, `BA`, `ABA`.
impl fmt::Display for Gene {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.letters.iter().try_for_each(|l| write!(f, "{l}"))
    }
}

/// `X_i` as a function of `v_i` and `X_{i+1}`.
pub fn rule(v: u64, next: Letter) -> Letter {
    match (v, next) {
        (0, Letter::O) => Letter::AB,
        (0, _) => Letter::A,
        (1, Letter::O) => Letter::O,
        (1, _) => Letter::B,
        _ => Letter::O,
    }
}

/// Checks each of the five rules at every position of the periodic word.
pub fn validate(gene: &Gene, v: &RadixDigits) -> bool {
    let d = v.digits();
    if gene.len() != d.len() {
        return false;
    }
    (0..d.len()).all(|i| {
        let (x, next) = (gene.at(i), gene.at(i + 1));
        let next_is_o = next == Letter::O;
        let violated = (d[i] == 0 && next_is_o && x != Letter::AB)
            || (d[i] == 0 && !next_is_o && x != Letter::A)
            || (d[i] == 1 && next_is_o && x != Letter::O)
            || (d[i] == 1 && !next_is_o && x != Letter::B)
            || (d[i] >= 2 && x != Letter::O);
        !violated
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SolveMethod {
    /// Propagated from a position with `v_i >= 2`.
    Anchored { position: usize },
    /// Every letter tried at position `2f - 1`, kept if cyclically consistent.
    Seeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneSolution {
    /// Sorted and duplicate free.
    pub genes: Vec<Gene>,
    pub method: SolveMethod,
}

impl GeneSolution {
    pub fn is_unique(&self) -> bool {
        self.genes.len() == 1
    }
}

fn propagate_from(d: &[u64], start: usize, seed: Letter) -> Vec<Letter> {
    let len = d.len();
    let mut letters = vec![seed; len];
    for step in 1..len {
        let i = (start + len - step) % len;
        letters[i] = rule(d[i], letters[(i + 1) % len]);
    }
    letters
}

/// Every gene compatible with the digits.
pub fn solve_gene(v: &RadixDigits) -> Result<GeneSolution> {
    let d = v.digits();
    if d.is_empty() || !d.len().is_multiple_of(2) {
        return param("digit vector must have even positive length 2f");
    }
    let len = d.len();
    if let Some(position) = d.iter().position(|&x| x >= 2) {
        let letters = propagate_from(d, position, Letter::O);
        return Ok(GeneSolution {
            genes: vec![Gene::new(letters)],
            method: SolveMethod::Anchored { position },
        });
    }
    let mut genes: Vec<Gene> = Letter::ALL
        .iter()
        .map(|&seed| propagate_from(d, len - 1, seed))
        .filter(|l| rule(d[len - 1], l[0]) == l[len - 1])
        .map(Gene::new)
        .collect();
    genes.sort();
    genes.dedup();
    Ok(GeneSolution {
        genes,
        method: SolveMethod::Seeded,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use Letter::*;

    fn digits(p: u64, d: &[u64]) -> RadixDigits {
        RadixDigits::new(p, d.to_vec()).unwrap()
    }

    #[test]
    fn digits_examples() {
        let g = digits_from_params(&GeneInput::new(3, 1, 5, 0).unwrap()).unwrap();
        assert_eq!(g.digits.digits(), &[1, 2]);
        assert!(!g.degenerate);
        let g = digits_from_params(&GeneInput::new(3, 1, 3, 0).unwrap()).unwrap();
        assert_eq!(g.digits.digits(), &[1, 0]);
        let g = digits_from_params(&GeneInput::new(3, 1, 4, 1).unwrap()).unwrap();
        assert_eq!(g.digits.digits(), &[0, 0]);
        assert!(g.degenerate);
    }

    #[test]
    fn solver_examples() {
        let s = solve_gene(&digits(3, &[1, 2])).unwrap();
        assert_eq!(s.genes, vec![Gene::new(vec![O, O])]);
        assert_eq!(s.genes[0].to_string(), "OO");
        let s = solve_gene(&digits(3, &[1, 0])).unwrap();
        assert_eq!(s.genes, vec![Gene::new(vec![B, A])]);
        let s = solve_gene(&digits(5, &[2, 3, 4, 2])).unwrap();
        assert_eq!(s.genes, vec![Gene::new(vec![O; 4])]);
        let s = solve_gene(&digits(3, &[1, 1])).unwrap();
        assert_eq!(s.genes, vec![Gene::new(vec![B, B]), Gene::new(vec![O, O])]);
        assert!(!s.is_unique());
    }

    #[test]
    fn validator_rejects() {
        let v = digits(3, &[1, 0]);
        assert!(validate(&Gene::new(vec![B, A]), &v));
        assert!(!validate(&Gene::new(vec![A, B]), &v));
        assert!(!validate(&Gene::new(vec![B]), &v));
    }

    #[test]
    fn letters_round_trip() {
        for l in Letter::ALL {
            assert_eq!(l.to_string().parse::<Letter>().unwrap(), l);
        }
        assert!("C".parse::<Letter>().is_err());
    }
}
