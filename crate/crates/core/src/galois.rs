//! Galois computations over `Q_1`: normed monoid models of `Z_1`, `Q_1` and
//! its root towers, the extensions `K_n = F_{1^n}[ϖ^{1/n}]` with their
//! automorphism `σ_n`, and the classical tame comparison over `Q_p`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{checked_pow, q_int, QPolynomial};
use crate::error::{capacity, param, Result};
use crate::f1::{a_res, frob_aut_group, F1Space, MonoidFactor, StructuredMonoid};
use crate::perm::{is_prime, GroupStructure, Perm, PermGroup, DEFAULT_ENUMERATION_BOUND};

pub type Rational = Ratio<i64>;

/// Default norm base `r` in `||ϖ^v|| = r^v`.
pub fn default_norm_base() -> Rational {
    Rational::new(1, 2)
}

/// A [`StructuredMonoid`] with a multiplicative norm `||x|| = r^{v(x)}`,
/// where `v(x) = sum_i scale_i * x_i` is additive by construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NormedMonoid {
    underlying: StructuredMonoid,
    #[serde(serialize_with = "ser_ratios")]
    scale: Vec<Rational>,
    #[serde(serialize_with = "ser_ratio")]
    norm_base: Rational,
}

fn ser_ratio<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&r.to_string())
}

fn ser_ratios<S: serde::Serializer>(rs: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(rs.iter().map(ToString::to_string))
}

impl NormedMonoid {
    pub fn new(underlying: StructuredMonoid, scale: Vec<Rational>, norm_base: Rational) -> Result<Self> {
        if scale.len() != underlying.factors().len() {
            return param("one exponent scale per monoid factor is required");
        }
        if !(norm_base > Rational::zero() && norm_base < Rational::one()) {
            return param(format!("norm base {norm_base} must lie in (0, 1)"));
        }
        if underlying
            .factors()
            .iter()
            .zip(&scale)
            .any(|(f, s)| matches!(f, MonoidFactor::Cyclic(_)) && !s.is_zero())
        {
            return param("torsion factors must have norm exponent 0");
        }
        Ok(Self {
            underlying,
            scale,
            norm_base,
        })
    }

    /// `Z_1 = ϖ^N`.
    pub fn z1(norm_base: Rational) -> Result<Self> {
        Self::new(StructuredMonoid::f1_polynomial(), vec![Rational::one()], norm_base)
    }

    /// `Q_1 = ϖ^Z`.
    pub fn q1(norm_base: Rational) -> Result<Self> {
        Self::new(StructuredMonoid::f1_laurent(), vec![Rational::one()], norm_base)
    }

    pub fn underlying(&self) -> &StructuredMonoid {
        &self.underlying
    }

    pub fn norm_base(&self) -> Rational {
        self.norm_base
    }

    pub fn scale(&self) -> &[Rational] {
        &self.scale
    }

    /// `v(x)` with `||x|| = r^{v(x)}`.
    pub fn norm_exponent(&self, x: &[i64]) -> Rational {
        self.scale
            .iter()
            .zip(x)
            .map(|(s, &a)| s * a)
            .fold(Rational::zero(), |acc, t| acc + t)
    }

    /// `||x||` when `v(x)` is an integer (otherwise it is irrational in general).
    pub fn norm(&self, x: &[i64]) -> Option<Ratio<BigInt>> {
        let v = self.norm_exponent(x);
        v.is_integer().then(|| {
            let r = Ratio::new(BigInt::from(*self.norm_base.numer()), BigInt::from(*self.norm_base.denom()));
            let k = v.to_integer();
            if k >= 0 {
                num_traits::pow(r, k as usize)
            } else {
                num_traits::pow(r.recip(), k.unsigned_abs() as usize)
            }
        })
    }

    /// Index of the exponent lattice of `sub` inside that of `self`, for
    /// single-factor monoids; `None` when `sub` does not embed.
    pub fn lattice_index_of(&self, sub: &NormedMonoid) -> Option<u64> {
        let ([s], [t]) = (self.scale.as_slice(), sub.scale.as_slice()) else {
            return None;
        };
        if s.is_zero() {
            return None;
        }
        let q = t / s;
        (q.is_integer() && *q.numer() > 0).then(|| *q.numer() as u64)
    }
}

/// `Q_1[ϖ^{1/e}]`: the monoid `ϖ^{(1/e)Z}`, element `k` standing for
/// `ϖ^{k/e}`.
pub fn build_q1_tower(e: u64, norm_base: Rational) -> Result<NormedMonoid> {
    if e == 0 {
        return param("e must be positive");
    }
    NormedMonoid::new(
        StructuredMonoid::f1_laurent(),
        vec![Rational::new(1, e as i64)],
        norm_base,
    )
}

/// An exact sequence `1 -> kernel -> G -> quotient -> 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactSequence {
    pub kernel_order: u64,
    pub kernel: GroupStructure,
    pub quotient_order: u64,
    pub quotient: GroupStructure,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GaloisReport {
    /// `None` for profinite groups.
    pub order: Option<u64>,
    pub structure: Option<GroupStructure>,
    pub tag: String,
    pub generators: Vec<String>,
    pub exact_sequence: Option<ExactSequence>,
    pub notes: Vec<String>,
}

impl GaloisReport {
    fn finite(structure: GroupStructure, order: u64, generators: Vec<String>) -> Self {
        Self {
            order: Some(order),
            tag: structure.to_string(),
            structure: Some(structure),
            generators,
            exact_sequence: None,
            notes: vec![],
        }
    }

    /// Kernel and quotient orders multiply to the group order.
    pub fn is_consistent(&self) -> bool {
        match (&self.exact_sequence, self.order) {
            (Some(s), Some(o)) => s.kernel_order * s.quotient_order == o,
            _ => true,
        }
    }
}

fn cyclic(order: u64) -> GroupStructure {
    if order == 1 {
        GroupStructure::Trivial
    } else {
        GroupStructure::Cyclic { order }
    }
}

/// `K_n = F_{1^n}[η]`, `η^n = ϖ`, after additive restriction to `F_1`:
/// the monoid `Z/n x η^Z`, pairs `(i, j)` standing for `(i, η^j)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KnModel {
    pub n: u64,
}

pub type KnElement = (u64, i64);

impl KnModel {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return param("n must be positive");
        }
        Ok(Self { n })
    }

    pub fn monoid(&self) -> StructuredMonoid {
        StructuredMonoid::new(vec![MonoidFactor::Cyclic(self.n), MonoidFactor::Integer])
            .expect("n > 0")
    }

    fn reduce(&self, i: i64) -> u64 {
        i.rem_euclid(self.n as i64) as u64
    }

    pub fn op(&self, a: KnElement, b: KnElement) -> KnElement {
        ((a.0 + b.0) % self.n, a.1 + b.1)
    }

    /// `k · x` in additive notation.
    pub fn scale(&self, k: i64, x: KnElement) -> KnElement {
        (self.reduce(k * x.0 as i64), k * x.1)
    }

    pub fn frobenius(&self, (i, j): KnElement) -> KnElement {
        ((i + 1) % self.n, j)
    }

    /// `σ_n^a : (i, η^j) -> (i + a j, η^j)`.
    pub fn sigma_pow(&self, a: u64, (i, j): KnElement) -> KnElement {
        (self.reduce(i as i64 + a as i64 * j), j)
    }

    pub fn sigma(&self, x: KnElement) -> KnElement {
        self.sigma_pow(1, x)
    }

    /// Membership in `Z/n x ϖ^Z`, i.e. `n | j`.
    pub fn in_distinguished(&self, (_, j): KnElement) -> bool {
        j.rem_euclid(self.n as i64) == 0
    }

    /// The carrier truncated to `Z/n x [-window, window]`, in encoding order.
    pub fn window(&self, window: i64) -> Vec<KnElement> {
        (-window..=window)
            .flat_map(|j| (0..self.n).map(move |i| (i, j)))
            .collect()
    }

    fn encode(&self, window: i64, (i, j): KnElement) -> usize {
        ((j + window) as u64 * self.n + i) as usize
    }

    /// A map that preserves the `η`-exponent, as a permutation of the window.
    pub fn window_perm(&self, window: i64, map: impl Fn(KnElement) -> KnElement) -> Result<Perm> {
        let images = self
            .window(window)
            .into_iter()
            .map(|x| {
                let y = map(x);
                if y.1.abs() > window {
                    return param("map leaves the exponent window");
                }
                Ok(self.encode(window, y))
            })
            .collect::<Result<Vec<_>>>()?;
        Perm::from_images(images)
    }
}

/// A monoid endomorphism of `Z/n x η^Z`, determined by the images of
/// `(1, 0)` and `(0, 1)`: `(i, j) -> i·(c, d) + j·(a, b)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GeneratorImages {
    pub c: u64,
    pub d: i64,
    pub a: u64,
    pub b: i64,
}

impl GeneratorImages {
    pub fn apply(&self, k: &KnModel, (i, j): KnElement) -> KnElement {
        k.op(k.scale(i as i64, (self.c, self.d)), k.scale(j, (self.a, self.b)))
    }
}

/// Output of [`aut_fixing_submonoid`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixingAutomorphisms {
    pub report: GaloisReport,
    /// Surviving generator images, in enumeration order.
    pub automorphisms: Vec<GeneratorImages>,
    /// Number of generator-image candidates examined.
    pub candidates: u64,
    /// Every survivor is `σ_n^a` for its `a`, checked on the window.
    pub all_powers_of_sigma: bool,
}

/// Automorphisms of `Z/n x η^Z` acting trivially on `Z/n x ϖ^Z`.
///
/// Candidate images `(1,0) -> (c,d)`, `(0,1) -> (a,b)` are enumerated with
/// `d, b` in `[-window, window]` and filtered by: well-definedness
/// (`n·(c,d) = 0`), fixing `(1,0)` and `(0,ϖ) = (0,n)`, and bijectivity.
pub fn aut_fixing_submonoid(k: &KnModel, window: i64) -> Result<FixingAutomorphisms> {
    let n = k.n;
    let window = window.max(2);
    let mut survivors = vec![];
    let mut candidates = 0u64;
    for c in 0..n {
        for d in -window..=window {
            for a in 0..n {
                for b in -window..=window {
                    candidates += 1;
                    let g = GeneratorImages { c, d, a, b };
                    let well_defined = k.scale(n as i64, (c, d)) == (0, 0);
                    let fixes_one = g.apply(k, (1, 0)) == (1 % n, 0);
                    let fixes_varpi = g.apply(k, (0, n as i64)) == (0, n as i64);
                    // bijective on Z/n x Z iff the Z-part is ±j and i -> c i is a unit
                    let bijective = d == 0 && b.abs() == 1 && c.gcd(&n) == 1;
                    if well_defined && fixes_one && fixes_varpi && bijective {
                        survivors.push(g);
                    }
                }
            }
        }
    }

    let mut all_powers_of_sigma = true;
    let mut perms = vec![];
    for g in &survivors {
        let p = k.window_perm(window, |x| g.apply(k, x))?;
        let sigma_a = k.window_perm(window, |x| k.sigma_pow(g.a, x))?;
        all_powers_of_sigma &= p == sigma_a;
        perms.push(p);
    }
    let degree = k.window(window).len();
    let group = PermGroup::from_elements(degree, perms)?;
    let structure = group.structure();
    let mut report = GaloisReport::finite(structure, group.order(), vec!["sigma_n".into()]);
    report.notes.push(format!(
        "{} of {candidates} generator-image candidates survive",
        survivors.len()
    ));
    Ok(FixingAutomorphisms {
        report,
        automorphisms: survivors,
        candidates,
        all_powers_of_sigma,
    })
}

/// `Gal(K_n / Q_1) = <φ, σ_n>`, generated inside the permutations of a
/// finite exponent window.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnGalois {
    pub report: GaloisReport,
    pub frobenius_commutes_with_sigma: bool,
    pub sigma_order: u64,
    pub exponent: u64,
}

pub fn galois_kn_over_q1(k: &KnModel, window: i64) -> Result<KnGalois> {
    let window = window.max(1);
    let phi = k.window_perm(window, |x| k.frobenius(x))?;
    let sigma = k.window_perm(window, |x| k.sigma(x))?;
    let degree = k.window(window).len();
    let commutes = phi.compose(&sigma) == sigma.compose(&phi);
    let group = PermGroup::generate(degree, vec![phi, sigma.clone()], DEFAULT_ENUMERATION_BOUND)?;
    let mut report = GaloisReport::finite(
        group.structure(),
        group.order(),
        vec!["frobenius".into(), "sigma_n".into()],
    );
    let sigma_order = sigma.order();
    report.exact_sequence = Some(ExactSequence {
        kernel_order: sigma_order,
        kernel: cyclic(sigma_order),
        quotient_order: group.order() / sigma_order,
        quotient: cyclic(group.order() / sigma_order),
    });
    Ok(KnGalois {
        exponent: group.exponent(),
        report,
        frobenius_commutes_with_sigma: commutes,
        sigma_order,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum UnramifiedDegree {
    Finite(u64),
    /// `Q_1^ur = F̄_1 ⊗ Q_1`.
    Limit,
}

/// Automorphisms of `aRes(Q_{1^n}) = Z/n x ϖ^Z` commuting with the
/// Frobenius and with multiplication by `ϖ`, and preserving the norm.
///
/// Such a map is determined by the image `(a, c)` of `(0, 0)`, as
/// `(i, j) -> (i + a, j + c)`; the candidates are checked on the window
/// and cross-checked against the Frobenius-commuting bijections of one
/// fibre `Z/n x {ϖ^j}`.
pub fn unramified_galois(degree: UnramifiedDegree, window: i64) -> Result<GaloisReport> {
    let n = match degree {
        UnramifiedDegree::Limit => {
            return Ok(GaloisReport {
                order: None,
                structure: None,
                tag: "profinite completion of Z".into(),
                generators: vec!["frobenius".into()],
                exact_sequence: None,
                notes: vec!["limit of the cyclic groups Z/n".into()],
            })
        }
        UnramifiedDegree::Finite(0) => return param("n must be positive"),
        UnramifiedDegree::Finite(n) => n,
    };
    let window = window.max(1);
    let k = KnModel::new(n)?;
    let frob = |(i, j): KnElement| ((i + 1) % n, j);
    let mul = |(i, j): KnElement| (i, j + 1);
    let mut survivors = vec![];
    for a in 0..n {
        for c in -window..=window {
            let f = |(i, j): KnElement| ((i + a) % n, j + c);
            let inner = k.window(window - 1);
            let commutes_frob = inner.iter().all(|&x| f(frob(x)) == frob(f(x)));
            let commutes_mul = inner.iter().all(|&x| f(mul(x)) == mul(f(x)));
            let isometric = inner.iter().all(|&x| f(x).1 == x.1);
            if commutes_frob && commutes_mul && isometric {
                survivors.push(a);
            }
        }
    }
    let order = survivors.len() as u64;
    let fibre = frob_aut_group(&a_res(F1Space::new(1), n as usize)?, DEFAULT_ENUMERATION_BOUND)?;
    let mut report = GaloisReport::finite(cyclic(order), order, vec!["frobenius".into()]);
    if fibre.group.order() != order || !fibre.generated_by_frobenius {
        report
            .notes
            .push("fibrewise search disagrees with generator-image enumeration".into());
    }
    Ok(report)
}

/// `Gal(K_{p,n} / Q_p) = Z/n ⋉ Z/(p^n - 1)`, realized as its left-regular
/// permutation representation on pairs `(a, x)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TameGalois {
    pub p: u64,
    pub n: u64,
    pub report: GaloisReport,
    /// Conjugation by `(1, 0)` acts on the kernel as `x -> p x`.
    pub action_is_multiplication_by_p: bool,
    /// Order of the subgroup generated by `p - 1` in `Z/(p^n - 1)`.
    pub q_analogue_subgroup_order: u64,
    /// That subgroup is stable under the `Z/n`-action.
    pub q_analogue_subgroup_stable: bool,
}

/// Cap on the order of explicitly built tame Galois groups.
pub const TAME_GALOIS_ORDER_CAP: u64 = 4096;

pub fn classical_tame_galois(p: u64, n: u64) -> Result<TameGalois> {
    if !is_prime(p) {
        return param(format!("{p} is not prime"));
    }
    if n == 0 {
        return param("n must be positive");
    }
    let m = checked_pow(p, u32::try_from(n).map_err(|_| crate::Error::Capacity("n too large".into()))?)? - 1;
    let order = n
        .checked_mul(m)
        .filter(|&o| o <= TAME_GALOIS_ORDER_CAP)
        .ok_or_else(|| crate::Error::Capacity(format!("group order n(p^n-1) above {TAME_GALOIS_ORDER_CAP}")))?;
    let p_mod = p % m.max(1);
    let pow_p = |a: u64| -> u64 {
        (0..a).fold(1 % m.max(1), |acc, _| acc * p_mod % m.max(1))
    };
    let size = order as usize;
    let encode = |a: u64, x: u64| (a * m + x) as usize;
    // (b, y) · (a, x) = (a + b, y + p^b x)
    let left_mul = |b: u64, y: u64| -> Result<Perm> {
        let images = (0..n)
            .flat_map(|a| (0..m).map(move |x| (a, x)))
            .map(|(a, x)| encode((a + b) % n, (y + pow_p(b) * x) % m))
            .collect();
        Perm::from_images(images)
    };
    let frob = left_mul(1 % n, 0)?;
    let unit = left_mul(0, 1 % m)?;
    let group = PermGroup::generate(size, vec![frob.clone(), unit.clone()], DEFAULT_ENUMERATION_BOUND)?;
    let kernel_order = unit.order();
    let quotient_order = group.order() / kernel_order;

    let conj = frob.compose(&unit).compose(&frob.inverse());
    let action_is_multiplication_by_p = conj == unit.pow(p);

    let sub_gen = unit.pow(p - 1);
    let q_analogue_subgroup_order = sub_gen.order();
    let sub = PermGroup::generate(size, vec![sub_gen], DEFAULT_ENUMERATION_BOUND)?;
    let q_analogue_subgroup_stable = sub
        .elements()
        .iter()
        .all(|h| sub.contains(&frob.compose(h).compose(&frob.inverse())));

    let structure = group.structure();
    let mut report = GaloisReport::finite(structure, group.order(), vec!["(1,0)".into(), "(0,1)".into()]);
    report.exact_sequence = Some(ExactSequence {
        kernel_order,
        kernel: cyclic(kernel_order),
        quotient_order,
        quotient: cyclic(quotient_order),
    });
    report.notes.push(format!("a in Z/{n} acts on Z/{m} by x -> {p}^a x"));
    Ok(TameGalois {
        p,
        n,
        report,
        action_is_multiplication_by_p,
        q_analogue_subgroup_order,
        q_analogue_subgroup_stable,
    })
}

/// One row of the `p -> 1` comparison `p^n - 1 = (p - 1)·[n]_p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PTo1Row {
    pub p: u64,
    #[serde(serialize_with = "crate::exact::big")]
    pub p_n_minus_1: BigInt,
    #[serde(serialize_with = "crate::exact::big")]
    pub p_minus_1: BigInt,
    #[serde(serialize_with = "crate::exact::big")]
    pub q_analogue: BigInt,
    pub factorization_exact: bool,
    /// `[n]_p` at `p = 1`.
    #[serde(serialize_with = "crate::exact::big")]
    pub limit: BigInt,
    /// Every action exponent `p^a` becomes `1` at `p = 1`.
    pub action_trivial_in_limit: bool,
}

pub fn p_to_1_table(n: u32, primes: &[u64]) -> Result<Vec<PTo1Row>> {
    if n == 0 {
        return param("n must be positive");
    }
    let bracket = q_int(n as usize);
    let limit = bracket.eval_i64(1);
    let action_trivial_in_limit =
        (0..n as usize).all(|a| QPolynomial::monomial(a).eval_i64(1) == BigInt::one());
    primes
        .iter()
        .map(|&p| {
            if p < 2 {
                return param(format!("p = {p} must be at least 2"));
            }
            if n > 4096 {
                return capacity("n too large");
            }
            let pb = BigInt::from(p);
            let p_n_minus_1 = pb.pow(n) - 1;
            let p_minus_1 = &pb - 1;
            let q_analogue = bracket.eval(&pb);
            Ok(PTo1Row {
                p,
                factorization_exact: &p_minus_1 * &q_analogue == p_n_minus_1,
                p_n_minus_1,
                p_minus_1,
                q_analogue,
                limit: limit.clone(),
                action_trivial_in_limit,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q1_tower() {
        let r = default_norm_base();
        let q1 = build_q1_tower(1, r).unwrap();
        assert_eq!(q1, NormedMonoid::q1(r).unwrap());
        let t3 = build_q1_tower(3, r).unwrap();
        // ||ϖ^{1/3}||^3 = ||ϖ||
        assert_eq!(t3.norm_exponent(&[1]) * 3, t3.norm_exponent(&[3]));
        assert_eq!(t3.norm(&[3]), Some(Ratio::new(BigInt::from(1), BigInt::from(2))));
        assert_eq!(t3.norm(&[1]), None);
        let t2 = build_q1_tower(2, r).unwrap();
        assert_eq!(t2.lattice_index_of(&q1), Some(2));
        assert_eq!(q1.lattice_index_of(&t2), None);
        assert!(build_q1_tower(0, r).is_err());
        assert!(NormedMonoid::q1(Rational::new(3, 2)).is_err());
        assert_eq!(
            NormedMonoid::z1(r).unwrap().norm(&[2]),
            Some(Ratio::new(BigInt::from(1), BigInt::from(4)))
        );
    }

    #[test]
    fn sigma_invariants() {
        for n in 1..=8 {
            let k = KnModel::new(n).unwrap();
            for x in k.window(3) {
                assert_eq!(k.sigma_pow(n, x), x);
                assert_eq!(k.sigma(k.frobenius(x)), k.frobenius(k.sigma(x)));
                if k.in_distinguished(x) {
                    assert_eq!(k.sigma(x), x);
                }
            }
        }
    }

    #[test]
    fn fixing_examples() {
        for (n, order) in [(3u64, 3u64), (1, 1), (6, 6)] {
            let r = aut_fixing_submonoid(&KnModel::new(n).unwrap(), 3).unwrap();
            assert_eq!(r.report.order, Some(order));
            assert!(r.all_powers_of_sigma);
            assert!(r.automorphisms.iter().all(|g| g.b == 1 && g.d == 0 && g.c == 1 % n));
            assert_eq!(r.report.structure, Some(cyclic(order)));
        }
    }

    #[test]
    fn kn_over_q1_examples() {
        let g = galois_kn_over_q1(&KnModel::new(2).unwrap(), 2).unwrap();
        assert_eq!(
            g.report.structure,
            Some(GroupStructure::Abelian { invariants: vec![2, 2] })
        );
        let g = galois_kn_over_q1(&KnModel::new(1).unwrap(), 2).unwrap();
        assert_eq!(g.report.structure, Some(GroupStructure::Trivial));
        let g = galois_kn_over_q1(&KnModel::new(4).unwrap(), 2).unwrap();
        assert_eq!(g.report.order, Some(16));
        assert_eq!(g.exponent, 4);
        assert!(g.frobenius_commutes_with_sigma);
        assert!(g.report.is_consistent());
    }

    #[test]
    fn unramified_examples() {
        let r = unramified_galois(UnramifiedDegree::Finite(5), 2).unwrap();
        assert_eq!(r.structure, Some(GroupStructure::Cyclic { order: 5 }));
        assert!(r.notes.is_empty());
        let r = unramified_galois(UnramifiedDegree::Finite(1), 2).unwrap();
        assert_eq!(r.structure, Some(GroupStructure::Trivial));
        let r = unramified_galois(UnramifiedDegree::Limit, 2).unwrap();
        assert_eq!(r.tag, "profinite completion of Z");
        assert_eq!(r.order, None);
    }

    #[test]
    fn tame_examples() {
        let t = classical_tame_galois(3, 2).unwrap();
        assert_eq!(t.report.order, Some(16));
        let s = t.report.exact_sequence.as_ref().unwrap();
        assert_eq!((s.kernel_order, s.quotient_order), (8, 2));
        assert!(t.action_is_multiplication_by_p);
        assert_eq!(t.q_analogue_subgroup_order, 4);
        assert!(t.q_analogue_subgroup_stable);

        let t = classical_tame_galois(2, 1).unwrap();
        assert_eq!(t.report.order, Some(1));
        assert_eq!(classical_tame_galois(5, 2).unwrap().report.order, Some(48));
        assert!(matches!(classical_tame_galois(4, 2), Err(crate::Error::Parameter(_))));
    }

    #[test]
    fn p_to_1_examples() {
        let rows = p_to_1_table(2, &[3, 5]).unwrap();
        assert_eq!(rows[0].p_n_minus_1, BigInt::from(8));
        assert_eq!(rows[0].q_analogue, BigInt::from(4));
        assert_eq!(rows[1].p_n_minus_1, BigInt::from(24));
        assert_eq!(rows[1].q_analogue, BigInt::from(6));
        assert!(rows.iter().all(|r| r.factorization_exact && r.limit == BigInt::from(2)));
        let rows = p_to_1_table(1, &[7]).unwrap();
        assert_eq!(rows[0].q_analogue, BigInt::from(1));
        let rows = p_to_1_table(3, &[2]).unwrap();
        assert_eq!((rows[0].p_n_minus_1.clone(), rows[0].q_analogue.clone()), (BigInt::from(7), BigInt::from(7)));
        assert_eq!(rows[0].limit, BigInt::from(3));
        assert!(rows[0].action_trivial_in_limit);
    }
}
