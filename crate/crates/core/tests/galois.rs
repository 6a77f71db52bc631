use num_bigint::BigInt;
use oneadic_core::arith::q_int;
use oneadic_core::galois::{
    aut_fixing_submonoid, classical_tame_galois, galois_kn_over_q1, p_to_1_table, unramified_galois,
    KnModel, UnramifiedDegree,
};
use oneadic_core::perm::GroupStructure;

#[test]
fn sigma_is_periodic_and_commutes_on_window() {
    for n in 1..=8u64 {
        let k = KnModel::new(n).unwrap();
        let w = 4;
        let sigma = k.window_perm(w, |x| k.sigma(x)).unwrap();
        let phi = k.window_perm(w, |x| k.frobenius(x)).unwrap();
        assert!(sigma.pow(n).is_identity());
        assert_eq!(sigma.compose(&phi), phi.compose(&sigma));
        assert_eq!(sigma.order(), n);
    }
}

#[test]
fn fixing_group_is_generated_by_sigma() {
    for n in 1..=8u64 {
        let r = aut_fixing_submonoid(&KnModel::new(n).unwrap(), n as i64 + 1).unwrap();
        assert_eq!(r.report.order, Some(n));
        assert_eq!(r.automorphisms.len() as u64, n);
        assert!(r.all_powers_of_sigma);
        let a: Vec<u64> = r.automorphisms.iter().map(|g| g.a).collect();
        assert_eq!(a, (0..n).collect::<Vec<_>>());
    }
}

#[test]
fn kn_over_q1_is_square_of_cyclic() {
    for n in 2..=5u64 {
        let g = galois_kn_over_q1(&KnModel::new(n).unwrap(), 2).unwrap();
        assert_eq!(g.report.order, Some(n * n));
        assert_eq!(g.report.structure, Some(GroupStructure::Abelian { invariants: vec![n, n] }));
        assert!(g.report.is_consistent());
    }
}

#[test]
fn unramified_is_cyclic() {
    for n in 1..=6u64 {
        let r = unramified_galois(UnramifiedDegree::Finite(n), 3).unwrap();
        assert_eq!(r.order, Some(n));
        assert!(r.notes.is_empty());
    }
}

#[test]
fn tame_groups_explicit() {
    for p in [2u64, 3, 5] {
        for n in 1..=3u64 {
            let t = classical_tame_galois(p, n).unwrap();
            let m = p.pow(n as u32) - 1;
            assert_eq!(t.report.order, Some(n * m), "p={p} n={n}");
            let s = t.report.exact_sequence.clone().unwrap();
            assert_eq!(s.kernel_order, m);
            assert!(s.kernel.is_cyclic() || m == 1);
            assert_eq!(s.quotient_order, n);
            assert!(t.action_is_multiplication_by_p);
            if p != 2 {
                let bracket = q_int(n as usize).eval_i64(p as i64);
                assert_eq!(BigInt::from(t.q_analogue_subgroup_order), bracket);
                assert!(t.q_analogue_subgroup_stable);
            }
        }
    }
}

#[test]
fn p_to_1_rows() {
    let rows = p_to_1_table(3, &[2, 3, 5, 7]).unwrap();
    for r in rows {
        assert!(r.factorization_exact);
        assert_eq!(r.limit, BigInt::from(3));
        assert!(r.action_trivial_in_limit);
    }
}
