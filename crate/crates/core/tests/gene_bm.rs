use std::collections::BTreeSet;

use num_bigint::BigInt;
use oneadic_core::arith::RadixDigits;
use oneadic_core::bm::{bm_identity_check, generic_weight_labels};
use oneadic_core::defring::{
    hilbert_series_special_fibre, hs_multiplicity, multiplicity_from_hilbert, DeformationPresentation,
};
use oneadic_core::ffield::FiniteField;
use oneadic_core::gene::{solve_gene, validate};
use oneadic_core::kisin::{kisin_points, KisinVarietyEq};
use oneadic_core::oracle::{gene_oracle, kisin_count_affine, monomials_avoiding_pairs};
use oneadic_core::perm::DEFAULT_ENUMERATION_BOUND as BOUND;
use proptest::prelude::*;

fn digit_vectors(len: usize) -> impl Iterator<Item = RadixDigits> {
    (0..3usize.pow(len as u32)).map(move |code| {
        let digits = (0..len).map(|i| (code / 3usize.pow(i as u32) % 3) as u64).collect();
        RadixDigits::new(3, digits).unwrap()
    })
}

#[test]
fn solver_matches_oracle_exhaustively() {
    for f in 1..=3usize {
        for v in digit_vectors(2 * f) {
            let solved = solve_gene(&v).unwrap();
            let expected = gene_oracle(&v).unwrap();
            let got: BTreeSet<_> = solved.genes.iter().cloned().collect();
            assert_eq!(got, expected, "{v}");
            assert!(solved.genes.iter().all(|g| validate(g, &v)));
            if v.digits().iter().any(|&d| d >= 2) {
                assert!(solved.genes.len() <= 1);
            }
        }
    }
}

#[test]
fn solver_is_rotation_equivariant() {
    for f in 1..=3usize {
        for v in digit_vectors(2 * f) {
            let base = solve_gene(&v).unwrap();
            for k in 0..2 * f {
                let rotated = solve_gene(&v.rotate(k)).unwrap();
                let mut expect: Vec<_> = base.genes.iter().map(|g| g.rotate(k)).collect();
                expect.sort();
                assert_eq!(rotated.genes, expect);
            }
        }
    }
}

#[test]
fn all_ones_is_ambiguous() {
    for f in 1..=3 {
        let v = RadixDigits::new(5, vec![1; 2 * f]).unwrap();
        assert_eq!(solve_gene(&v).unwrap().genes.len(), 2);
    }
}

#[test]
fn kisin_counts_agree_with_affine_oracle() {
    for q in [3u64, 4, 5, 9] {
        let field = FiniteField::new(q).unwrap();
        for f in 1..=2usize {
            for code in 0..4usize.pow(f as u32) {
                let coeffs = (0..f)
                    .map(|i| {
                        let c = code / 4usize.pow(i as u32) % 4;
                        ((c / 2) as u8, (c % 2) as u8)
                    })
                    .collect();
                let eq = KisinVarietyEq::new(coeffs).unwrap();
                let projective = kisin_points(&eq, &field, BOUND).unwrap();
                assert_eq!(projective.count, kisin_count_affine(&eq, &field).unwrap(), "q={q} {eq}");
            }
        }
        let count = |s: &str| kisin_points(&KisinVarietyEq::parse(s).unwrap(), &field, BOUND).unwrap().count;
        assert_eq!(count("11"), q + 1);
        assert_eq!(count("10"), 2);
        assert_eq!(count("00"), q + 1);
    }
}

fn subsets(f: usize) -> impl Iterator<Item = BTreeSet<usize>> {
    (0u32..1 << f).map(move |mask| (0..f).filter(|i| mask >> i & 1 == 1).collect())
}

#[test]
fn multiplicity_three_ways() {
    for f in 1..=6usize {
        for jii in subsets(f).filter(|s| s.len() <= 5) {
            let d = DeformationPresentation::new(f, jii.clone()).unwrap();
            let m = jii.len();
            assert_eq!(hs_multiplicity(&d), BigInt::from(1u64 << m));
            assert_eq!(multiplicity_from_hilbert(&d).unwrap(), BigInt::from(1u64 << m));
            assert_eq!(generic_weight_labels(&jii).unwrap().len(), 1 << m);
            assert!(bm_identity_check(&d).unwrap().holds);
        }
    }
}

#[test]
fn hilbert_series_matches_monomial_count() {
    for f in 1..=4usize {
        for jii in subsets(f) {
            let d = DeformationPresentation::new(f, jii.clone()).unwrap();
            let series = hilbert_series_special_fibre(&d, 6);
            for (k, h) in series.iter().enumerate() {
                let direct = monomials_avoiding_pairs(d.num_variables(), jii.len(), k).unwrap();
                assert_eq!(*h, BigInt::from(direct), "f={f} jii={jii:?} k={k}");
            }
        }
    }
}

proptest! {
    #[test]
    fn kisin_counters_agree(coeffs in prop::collection::vec((0u8..2, 0u8..2), 1..3), q in prop_oneof![Just(2u64), Just(3), Just(4), Just(5)]) {
        let eq = KisinVarietyEq::new(coeffs).unwrap();
        let field = FiniteField::new(q).unwrap();
        prop_assert_eq!(kisin_points(&eq, &field, BOUND).unwrap().count, kisin_count_affine(&eq, &field).unwrap());
    }

    #[test]
    fn solutions_revalidate(v in prop::collection::vec(0u64..3, 2..7).prop_filter("even length", |v| v.len() % 2 == 0)) {
        let d = RadixDigits::new(3, v).unwrap();
        for g in solve_gene(&d).unwrap().genes {
            prop_assert!(validate(&g, &d));
        }
    }
}
