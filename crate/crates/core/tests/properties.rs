mod common;

use kklab::chartab::{dixon_character_table, Cyclotomic};
use kklab::classes::{conjugacy_classes, kkinv_pattern, product_multiset, structure_constants, PatternTag};
use kklab::group::{
    derived_series, element_set, normal_closure, quotient_group, subgroup_closure, GroupTable,
};
use kklab::theorems::{
    analyze_theorem_c, check_theorem_d, coprime_degree_sweep, lemma_properties_sweep,
    section6_self_product_scan, verify_theorem_b_equivalence,
};
use proptest::prelude::*;

fn whole(g: &GroupTable) -> kklab::group::ElementSet {
    let all: Vec<usize> = (0..g.order()).collect();
    subgroup_closure(g, &element_set(g, &all).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn table_axioms(g in common::group()) {
        let n = g.order();
        for i in 0..n {
            prop_assert_eq!(g.mul(0, i), i);
            prop_assert_eq!(g.mul(i, 0), i);
            prop_assert_eq!(g.mul(i, g.inv(i)), 0);
        }
        prop_assert!(g.check_associativity(200, 1000).is_ok());
    }

    #[test]
    fn closure_is_idempotent_monotone_and_lagrange(
        g in common::group(),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 0..4),
    ) {
        let s: Vec<usize> = picks.iter().map(|i| i.index(g.order())).collect();
        let set = element_set(&g, &s).unwrap();
        let c = subgroup_closure(&g, &set).unwrap();
        prop_assert!(set.is_subset_of(&c));
        prop_assert_eq!(g.order() % c.len(), 0);
        let cc = subgroup_closure(&g, &c).unwrap();
        prop_assert_eq!(cc.elements(), c.elements());
        for &x in c.elements() {
            for &y in c.elements() {
                prop_assert!(c.contains(g.mul(x, y)));
            }
        }
    }

    #[test]
    fn quotients(
        g in common::group(),
        picks in prop::collection::vec(any::<prop::sample::Index>(), 0..3),
    ) {
        let s: Vec<usize> = picks.iter().map(|i| i.index(g.order())).collect();
        let n = normal_closure(&g, &element_set(&g, &s).unwrap()).unwrap();
        let q = quotient_group(&g, &n).unwrap();
        prop_assert_eq!(q.order() * n.len(), g.order());
        let dg = derived_series(&g, &whole(&g)).unwrap();
        let dq = derived_series(&q, &whole(&q)).unwrap();
        if let Some(lg) = dg.derived_length {
            prop_assert!(dq.derived_length.is_some_and(|lq| lq <= lg));
        }
        if g.is_abelian() {
            prop_assert!(dq.derived_length.is_some_and(|l| l <= 1));
        }
    }

    #[test]
    fn classes_match_brute_force(g in common::group()) {
        let p = conjugacy_classes(&g);
        let mut brute = common::brute_classes(&g);
        let mut ours: Vec<Vec<usize>> = p.classes().to_vec();
        brute.sort();
        ours.sort();
        prop_assert_eq!(ours, brute);
        prop_assert_eq!(p.sizes().iter().sum::<usize>(), g.order());
    }

    #[test]
    fn structure_constants_match_brute_force(g in common::group()) {
        let p = conjugacy_classes(&g);
        let sc = structure_constants(&g, &p);
        let brute = common::brute_structure_constants(&g, &p);
        let r = p.len();
        for i in 0..r {
            for j in 0..r {
                let m = product_multiset(&g, &p, i, j).unwrap();
                for k in 0..r {
                    prop_assert_eq!(sc.get(i, j, k), brute[(i * r + j) * r + k]);
                    prop_assert_eq!(m.coeff(k), brute[(i * r + j) * r + k]);
                }
            }
        }
    }

    #[test]
    fn class_algebra_identities(g in common::group()) {
        let report = lemma_properties_sweep(&g).unwrap();
        prop_assert!(report.holds(), "{:?}", report.failures);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn character_tables(g in common::group()) {
        let p = conjugacy_classes(&g);
        let t = dixon_character_table(&g, &p).unwrap();
        let r = p.len();
        prop_assert_eq!(t.len(), r);
        prop_assert_eq!(t.degrees().iter().map(|d| d * d).sum::<u64>(), g.order() as u64);
        prop_assert_eq!(g.exponent() % t.conductor(), 0);
        prop_assert!(t.check_orthogonality().is_ok());
        // row orthogonality again, directly in exact arithmetic
        let e = t.conductor();
        for a in 0..r {
            for b in 0..r {
                let mut s = Cyclotomic::zero(e).unwrap();
                for k in 0..r {
                    let term = t.value(a, k) * t.value(b, p.inverse_class(k));
                    let size = Cyclotomic::from_integer(e, p.size(k) as i64).unwrap();
                    s = &s + &(&term * &size);
                }
                let want = if a == b { g.order() as i64 } else { 0 };
                prop_assert_eq!(s, Cyclotomic::from_integer(e, want).unwrap());
            }
        }
        for chi in 0..r {
            let bar = t.conjugate_row(chi);
            prop_assert!(bar.is_some());
            let bar = bar.unwrap();
            for k in 0..r {
                prop_assert_eq!(t.value(bar, k), &t.value(chi, k).conj());
                prop_assert_eq!(g.exponent() % t.value(chi, k).conductor(), 0);
            }
        }
        let brute = common::brute_structure_constants(&g, &p);
        prop_assert_eq!(t.all_structure_constants_via_characters().unwrap(), brute);
        prop_assert!(coprime_degree_sweep(&p, &t).holds());
        prop_assert!(section6_self_product_scan(&t).unwrap().holds());
    }

    #[test]
    fn theorem_b_equivalence(g in common::group()) {
        let sweep = verify_theorem_b_equivalence(&g).unwrap();
        prop_assert!(sweep.holds(), "{:?}", sweep.discrepancies);
    }

    #[test]
    fn theorem_c_and_d_on_every_hit(g in common::group()) {
        let p = conjugacy_classes(&g);
        for k in 1..p.len() {
            match kkinv_pattern(&g, &p, k).unwrap().tag {
                PatternTag::OneD => {
                    let r = analyze_theorem_c(&g, &p, k).unwrap();
                    prop_assert!(r.holds(), "{:?}", r.violations);
                }
                PatternTag::OneKKinv => prop_assert!(check_theorem_d(&g, &p, k).unwrap().holds()),
                _ => {}
            }
        }
    }
}
