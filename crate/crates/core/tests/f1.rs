use num_bigint::BigInt;
use oneadic_core::f1::{
    a_res, adjunction_check, aut_group_f1, extend_morphism, frob_aut_group, gl_f1n, gl_module,
    m_res, scalar_extend, sym_rep, F1Space, FbarMorphism, MonoidFactor, PartialMap,
    StructuredMonoid,
};
use oneadic_core::perm::{GroupStructure, Perm, DEFAULT_ENUMERATION_BOUND as BOUND};

#[test]
fn partial_map_category_laws() {
    for a in 0..=3 {
        for b in 0..=3 {
            let maps: Vec<PartialMap> = PartialMap::all(a, b).collect();
            assert_eq!(maps.len() as u128, F1Space::new(a).hom_count(F1Space::new(b)));
            for f in &maps {
                assert_eq!(&PartialMap::identity(a).then(f), f);
                assert_eq!(&f.then(&PartialMap::identity(b)), f);
            }
        }
    }
    for a in 0..=3 {
        for b in 0..=3 {
            for c in 0..=2 {
                for d in 0..=2 {
                    for f in PartialMap::all(a, b) {
                        for g in PartialMap::all(b, c) {
                            for h in PartialMap::all(c, d) {
                                assert_eq!(f.then(&g).then(&h), f.then(&g.then(&h)));
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn hom_counts_closed_form() {
    for v in 0..=4usize {
        for w in 0..=4usize {
            let count = PartialMap::all(v, w).count() as u128;
            assert_eq!(count, (w as u128 + 1).pow(v as u32));
        }
    }
}

#[test]
fn sums_products_and_extension() {
    let (v, w) = (F1Space::new(2), F1Space::new(3));
    assert_eq!(v.direct_sum(w).dim, 5);
    assert_eq!(v.tensor(w).dim, 6);
    assert_eq!(F1Space::new(0).tensor(w).dim, 0);
    assert_eq!(scalar_extend(v, 4), v);
    let e = extend_morphism(&PartialMap::identity(2), 3).unwrap();
    assert!(e.components().iter().all(|c| *c == PartialMap::identity(2)));
    let e = extend_morphism(&PartialMap::empty(2, 1), 2).unwrap();
    assert_eq!(e.n(), 2);
}

#[test]
fn fbar_equality_over_lcm() {
    let f = PartialMap::new(2, vec![Some(1), Some(0)]).unwrap();
    let g = PartialMap::identity(2);
    let a = FbarMorphism::new(vec![f.clone(), g.clone()]).unwrap();
    let b = FbarMorphism::new(vec![f.clone(), g.clone(), f.clone(), g.clone()]).unwrap();
    assert_eq!(a, b);
    assert_eq!(b.minimal_period(), 2);
    assert_eq!(FbarMorphism::constant(&f).then(&a).period(), 2);
}

#[test]
fn automorphism_groups() {
    for d in 1..=5usize {
        let g = aut_group_f1(d, BOUND).unwrap();
        assert_eq!(g.order, (1..=d as u64).product::<u64>().into());
    }
    for d in 1..=4usize {
        for n in 1..=3usize {
            let g = gl_f1n(d, n, BOUND).unwrap();
            let els = g.elements.expect("within bound");
            let fact: u64 = (1..=d as u64).product();
            assert_eq!(els.len() as u64, fact.pow(n as u32));
            assert!(els.iter().all(|e| e.is_automorphism()));
        }
    }
}

#[test]
fn laurent_module_groups() {
    for d in 1..=3usize {
        for b in 1..=2i64 {
            let g = gl_module(StructuredMonoid::f1_laurent(), d, b).unwrap();
            let fact: u128 = (1..=d as u128).product();
            let expect = fact * ((2 * b + 1) as u128).pow(d as u32);
            assert_eq!(g.predicted_count(), expect);
            assert_eq!(g.elements().unwrap().len() as u128, expect);
        }
    }
    assert_eq!(gl_module(StructuredMonoid::f1_polynomial(), 1, 3).unwrap().elements().unwrap().len(), 1);
    let cyc = StructuredMonoid::new(vec![MonoidFactor::Cyclic(5)]).unwrap();
    assert_eq!(gl_module(cyc, 2, 1).unwrap().elements().unwrap().len(), 50);
}

#[test]
fn frobenius_galois_group_is_cyclic() {
    for n in 1..=8usize {
        let s = a_res(F1Space::new(1), n).unwrap();
        let g = frob_aut_group(&s, BOUND).unwrap();
        assert_eq!(g.group.order(), n as u64);
        assert!(g.generated_by_frobenius);
        let expect = if n == 1 { GroupStructure::Trivial } else { GroupStructure::Cyclic { order: n as u64 } };
        assert_eq!(g.structure, expect);
        assert!(g.group.contains(&Perm::rotation(n)));
    }
}

#[test]
fn m_res_frobenius_has_order_dividing_n() {
    for dim in 1..=3 {
        for n in 1..=4usize {
            let s = m_res(F1Space::new(dim), n).unwrap();
            assert_eq!(s.len(), dim.pow(n as u32));
            assert_eq!(n as u64 % s.frobenius().order(), 0);
        }
    }
}

#[test]
fn adjunctions_small_cases() {
    for v in 0..=3usize {
        for w in 0..=3usize {
            for n in 1..=3usize {
                let r = adjunction_check(v, w, n, 3).unwrap();
                assert!(r.holds(), "v={v} w={w} n={n}: {r:?}");
                let closed = (w as u128 + 1).pow((n * v) as u32);
                assert_eq!(r.left.source_count, closed);
                assert_eq!(r.left.target_count, closed);
            }
        }
    }
}

#[test]
fn sym_irreducibility_criterion() {
    for f in 1..=3u32 {
        let total = 5u32.pow(f);
        for code in 0..total {
            let degrees: Vec<u32> = (0..f).map(|i| code / 5u32.pow(i) % 5).collect();
            let r = sym_rep(&degrees).unwrap();
            let expect: usize = degrees.iter().map(|&k| k as usize + 1).product();
            assert_eq!(r.len(), expect);
            assert_eq!(r.is_irreducible(), degrees.iter().all(|&k| k <= 1), "{degrees:?}");
        }
    }
}

#[test]
fn weyl_group_order_is_limit() {
    assert_eq!(aut_group_f1(3, BOUND).unwrap().order, BigInt::from(6));
}
