use oneadic_core::arith::ResidueInt;
use oneadic_core::lattice::{determinant, p_minus_shift, smith_invariants};
use oneadic_core::perm::{Perm, all_perms};
use oneadic_core::weyl::{
    alpha_prime, enumerate_serre_weights, in_x0, in_x1, order_of_product, p_minus_pi, pi_shift,
    serre_normalize, tame_type_exponents, Character, ExtWeylElt, WeylElt,
};
use proptest::prelude::*;

fn restricted(p: i64, f: usize) -> impl Strategy<Value = Character> {
    prop::collection::vec((0..p, -20i64..20), f).prop_map(|v| {
        Character::new(v.into_iter().map(|(a, b)| vec![a + b, b]).collect()).unwrap()
    })
}

proptest! {
    #[test]
    fn normalize_is_constant_on_cosets(
        (p, lambda, mu) in prop_oneof![Just(3u64), Just(5u64)]
            .prop_flat_map(|p| (1usize..=2).prop_map(move |f| (p, f)))
            .prop_flat_map(|(p, f)| (Just(p), restricted(p as i64, f), prop::collection::vec(-9i64..9, f)))
    ) {
        let class = serre_normalize(&lambda, p).unwrap();
        let again = serre_normalize(&class.representative, p).unwrap();
        prop_assert_eq!(&again, &class);
        let x0 = Character::constant(2, &mu).unwrap();
        prop_assert!(in_x0(&x0));
        let moved = lambda.add(&p_minus_pi(&x0, p)).unwrap();
        prop_assert!(in_x1(&moved, p));
        prop_assert_eq!(serre_normalize(&moved, p).unwrap(), class);
    }

    #[test]
    fn pi_shift_preserves_x0_x1(lambda in restricted(5, 3), c in prop::collection::vec(-5i64..5, 3)) {
        let mut x = lambda.clone();
        for _ in 0..3 {
            prop_assert!(in_x1(&x, 5));
            x = pi_shift(&x);
        }
        prop_assert_eq!(x, lambda);
        let k = Character::constant(2, &c).unwrap();
        prop_assert!(in_x0(&pi_shift(&k)));
    }

    #[test]
    fn exponents_stable_under_multiples_of_modulus(a in -6i64..6, b in -6i64..6, j in 0usize..2, i in 0usize..2, k in -2i64..3) {
        let s = WeylElt::new(vec![Perm::transposition(2, 0, 1), Perm::identity(2)]).unwrap();
        let mu = Character::new(vec![vec![a, b], vec![b, a]]).unwrap();
        let se = ExtWeylElt::new(s.clone(), mu.clone()).unwrap();
        let base = tame_type_exponents(&se, 3).unwrap();
        let mut values = mu.values().to_vec();
        values[j][i] += k * base.modulus as i64;
        let shifted = ExtWeylElt::new(s, Character::new(values).unwrap()).unwrap();
        prop_assert_eq!(tame_type_exponents(&shifted, 3).unwrap(), base);
    }
}

#[test]
fn serre_counts_match_lattice_index() {
    for p in [3u64, 5] {
        for f in [1usize, 2] {
            let q = p.pow(f as u32);
            let classes = enumerate_serre_weights(2, f, p, false).unwrap();
            assert_eq!(classes.len() as u64, q * (q - 1));
            let m = p_minus_shift(p as i128, f);
            assert_eq!(determinant(&m).unwrap().unsigned_abs(), (q - 1) as u128);
            let snf: i128 = smith_invariants(&m).iter().product();
            assert_eq!(snf as u64, q - 1);
            // t -> sum t_k p^k is an isomorphism Z^f / (p - π)Z^f -> Z/(q-1)
            let labels: std::collections::BTreeSet<(Vec<i64>, u64)> = classes
                .iter()
                .map(|c| {
                    let diff: Vec<i64> = c.representative.values().iter().map(|v| v[0] - v[1]).collect();
                    let t: i64 = c.constant_part.iter().rev().fold(0, |acc, &x| acc * p as i64 + x);
                    (diff, t.rem_euclid(q as i64 - 1) as u64)
                })
                .collect();
            assert_eq!(labels.len(), classes.len());
        }
    }
}

fn order_by_iteration(p: &Perm) -> u64 {
    let mut x = p.clone();
    let mut k = 1;
    while !x.is_identity() {
        x = x.compose(p);
        k += 1;
    }
    k
}

#[test]
fn product_order_matches_iteration() {
    let perms = all_perms(3);
    for a in &perms {
        for b in &perms {
            let s = WeylElt::new(vec![a.clone(), b.clone()]).unwrap();
            assert_eq!(order_of_product(&s), order_by_iteration(&a.compose(b)));
        }
    }
}

#[test]
fn alpha_prime_starts_with_mu_plus_eta() {
    for s0 in all_perms(3) {
        let s = WeylElt::new(vec![s0, Perm::identity(3)]).unwrap();
        let mu = Character::new(vec![vec![4, -1, 2], vec![0, 0, 7]]).unwrap();
        let a = alpha_prime(&ExtWeylElt::new(s.clone(), mu).unwrap());
        assert_eq!(a[0], vec![6, 0, 2]);
        assert_eq!(a.len() as u64, 2 * order_of_product(&s));
    }
    let _ = ResidueInt::new(0, 1).unwrap();
}
