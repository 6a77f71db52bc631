//! Small dense integer matrices: Hermite reduction modulo a full-rank
//! lattice, Smith invariants and determinants.

use crate::error::{param, Result};

/// Row-major square or rectangular integer matrix.
pub type IntMatrix = Vec<Vec<i128>>;

fn check_square(m: &IntMatrix) -> Result<usize> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return param("matrix must be square");
    }
    Ok(n)
}

/// The matrix of `c -> (p c_i - c_{i+1})_i` on `Z^f`, i.e. `p I - C` with
/// `C` the cyclic shift.
pub fn p_minus_shift(p: i128, f: usize) -> IntMatrix {
    let mut m = vec![vec![0i128; f]; f];
    for i in 0..f {
        m[i][i] += p;
        m[i][(i + 1) % f] -= 1;
    }
    m
}

/// Determinant by fraction-free Gaussian elimination.
pub fn determinant(m: &IntMatrix) -> Result<i128> {
    let n = check_square(m)?;
    if n == 0 {
        return Ok(1);
    }
    let mut a = m.clone();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    Ok(sign * a[n - 1][n - 1])
}

/// Lower-triangular column Hermite basis of the lattice spanned by the
/// columns of a non-singular square matrix.
///
/// The result `H` satisfies `H[i][k] = 0` for `i < k`, `H[k][k] > 0`, and
/// `0 <= H[k][j] < H[k][k]` for `j < k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteBasis {
    h: IntMatrix,
}

impl HermiteBasis {
    pub fn new(m: &IntMatrix) -> Result<Self> {
        let n = check_square(m)?;
        let mut h = m.clone();
        for r in 0..n {
            // gcd-combine columns r..n in row r into column r
            for c in r + 1..n {
                if h[r][c] == 0 {
                    continue;
                }
                let (g, x, y) = ext_gcd(h[r][r], h[r][c]);
                let (a, b) = (h[r][r] / g, h[r][c] / g);
                for row in h.iter_mut() {
                    let (u, v) = (row[r], row[c]);
                    row[r] = x * u + y * v;
                    row[c] = -b * u + a * v;
                }
            }
            if h[r][r] == 0 {
                return param("lattice basis is singular");
            }
            if h[r][r] < 0 {
                for row in h.iter_mut() {
                    row[r] = -row[r];
                }
            }
            for c in 0..r {
                let q = h[r][c].div_euclid(h[r][r]);
                if q != 0 {
                    for row in h.iter_mut() {
                        row[c] -= q * row[r];
                    }
                }
            }
        }
        Ok(Self { h })
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.h
    }

    pub fn diagonal(&self) -> Vec<i128> {
        (0..self.h.len()).map(|k| self.h[k][k]).collect()
    }

    /// Index of the lattice in `Z^n`.
    pub fn index(&self) -> i128 {
        self.diagonal().iter().product()
    }

    /// Unique representative of `v + L` in the box `prod [0, H_kk)`.
    pub fn reduce(&self, v: &[i128]) -> Vec<i128> {
        let mut v = v.to_vec();
        for k in 0..self.h.len() {
            let q = v[k].div_euclid(self.h[k][k]);
            if q != 0 {
                for (i, x) in v.iter_mut().enumerate() {
                    *x -= q * self.h[i][k];
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[i128]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }
}

/// `(g, x, y)` with `g = gcd(a, b) = a x + b y` and `g > 0` unless both vanish.
pub fn ext_gcd(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut x0, mut x1) = (1i128, 0i128);
    let (mut y0, mut y1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    if r0 < 0 {
        (-r0, -x0, -y0)
    } else {
        (r0, x0, y0)
    }
}

/// Smith invariant factors `d_1 | d_2 | ...` of an integer matrix
/// (zero factors included for rank deficiency).
#[allow(clippy::needless_range_loop)]
pub fn smith_invariants(m: &IntMatrix) -> Vec<i128> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a = m.clone();
    let mut out = vec![];
    for t in 0..rows.min(cols) {
        // pivot: smallest non-zero absolute entry in the remaining block
        let pivot = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j] != 0)
            .min_by_key(|&(i, j)| a[i][j].abs());
        let Some((pi, pj)) = pivot else {
            out.push(0);
            continue;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t].div_euclid(a[t][t]);
                for j in t..cols {
                    a[i][j] -= q * a[t][j];
                }
                if a[i][t] != 0 {
                    clean = false;
                }
            }
            for j in t + 1..cols {
                let q = a[t][j].div_euclid(a[t][t]);
                for row in a.iter_mut().skip(t) {
                    row[j] -= q * row[t];
                }
                if a[t][j] != 0 {
                    clean = false;
                }
            }
            if clean {
                // enforce divisibility of the remaining block
                let bad = (t + 1..rows)
                    .flat_map(|i| (t + 1..cols).map(move |j| (i, j)))
                    .find(|&(i, j)| a[i][j] % a[t][t] != 0);
                match bad {
                    None => break,
                    Some((i, _)) => {
                        for j in t..cols {
                            a[t][j] += a[i][j];
                        }
                    }
                }
                continue;
            }
            // move the smallest entry of row/column t to the pivot
            let (mut bi, mut bj) = (t, t);
            for i in t..rows {
                if a[i][t] != 0 && a[i][t].abs() < a[bi][bj].abs() {
                    (bi, bj) = (i, t);
                }
            }
            for j in t..cols {
                if a[t][j] != 0 && a[t][j].abs() < a[bi][bj].abs() {
                    (bi, bj) = (t, j);
                }
            }
            a.swap(t, bi);
            for row in a.iter_mut() {
                row.swap(t, bj);
            }
        }
        out.push(a[t][t].abs());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn determinant_of_p_minus_shift() {
        for p in [2i128, 3, 5, 7] {
            for f in 1..=5usize {
                let expected = p.pow(f as u32) - 1;
                assert_eq!(determinant(&p_minus_shift(p, f)).unwrap().abs(), expected);
            }
        }
        assert_eq!(determinant(&vec![vec![0, 1], vec![1, 0]]).unwrap(), -1);
        assert_eq!(determinant(&vec![vec![1, 2], vec![2, 4]]).unwrap(), 0);
    }

    #[test]
    fn hermite_reduction_is_canonical() {
        let m = p_minus_shift(3, 2);
        let h = HermiteBasis::new(&m).unwrap();
        assert_eq!(h.index(), 8);
        for a in -10..10 {
            for b in -10..10 {
                let v = [a, b];
                let r = h.reduce(&v);
                assert_eq!(h.reduce(&r), r);
                let diff: Vec<i128> = v.iter().zip(&r).map(|(x, y)| x - y).collect();
                assert!(h.contains(&diff));
                for (k, x) in r.iter().enumerate() {
                    assert!(0 <= *x && *x < h.diagonal()[k]);
                }
            }
        }
        // columns of the original matrix lie in the lattice
        assert!(h.contains(&[3, -1]) && h.contains(&[-1, 3]));
    }

    #[test]
    fn smith_invariants_examples() {
        assert_eq!(smith_invariants(&vec![vec![2, 4], vec![6, 8]]), vec![2, 4]);
        assert_eq!(smith_invariants(&p_minus_shift(3, 2)), vec![1, 8]);
        assert_eq!(smith_invariants(&vec![vec![1, 2], vec![2, 4]]), vec![1, 0]);
    }

    #[test]
    fn ext_gcd_identity() {
        for a in -12..12i128 {
            for b in -12..12i128 {
                let (g, x, y) = ext_gcd(a, b);
                assert_eq!(a * x + b * y, g);
                assert!(g >= 0);
            }
        }
    }
}
