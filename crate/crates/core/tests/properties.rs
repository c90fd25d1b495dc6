use charvar::bounds::{c_pasbon_lower, codim_bad_lower, codim_red_lower, codim_report, classify_singular_locus, stable_range};
use charvar::groups::{is_ci, pi1_adjoint};
use charvar::homotopy::{fga_direct_sum, good_locus_homotopy};
use charvar::localmodel::{homology_support, parabolic_weights};
use charvar::rootsys::Family;
use charvar::subalg::{bds_table, levi_table};
use charvar::{Factor, FgAbelianGroup, GroupDescriptor, Isogeny, RootSystem, SimpleType};
use proptest::prelude::*;

fn simple_type() -> impl Strategy<Value = SimpleType> {
    let pool = SimpleType::all_up_to_rank(8);
    (0..pool.len()).prop_map(move |i| pool[i])
}

fn factor() -> impl Strategy<Value = Factor> {
    (simple_type(), any::<bool>()).prop_map(|(t, sc)| if sc { Factor::sc(t) } else { Factor::ad(t) })
}

fn descriptor() -> impl Strategy<Value = GroupDescriptor> {
    (0u32..3, prop::collection::vec(factor(), 0..4)).prop_map(|(t, f)| GroupDescriptor::new(t, f))
}

fn fga() -> impl Strategy<Value = FgAbelianGroup> {
    (0u32..3, prop::collection::vec(0u64..40, 0..5)).prop_map(|(f, t)| FgAbelianGroup::new(f, t))
}

proptest! {
    #[test]
    fn normalization_is_idempotent(g in fga()) {
        prop_assert_eq!(FgAbelianGroup::new(g.free_rank(), g.torsion().iter().copied()), g.clone());
        for w in g.torsion().windows(2) {
            prop_assert_eq!(w[1] % w[0], 0);
        }
    }

    #[test]
    fn direct_sum_is_commutative_and_associative(a in fga(), b in fga(), c in fga()) {
        prop_assert_eq!(fga_direct_sum(&a, &b), fga_direct_sum(&b, &a));
        prop_assert_eq!(
            fga_direct_sum(&fga_direct_sum(&a, &b), &c),
            fga_direct_sum(&a, &fga_direct_sum(&b, &c))
        );
        prop_assert_eq!(fga_direct_sum(&a, &b).order(), a.order().zip(b.order()).map(|(x, y)| x * y));
    }

    #[test]
    fn ci_matches_definition(g in descriptor()) {
        let expect = g
            .factors
            .iter()
            .all(|f| f.ty.family() == Family::A && f.isogeny == Isogeny::SimplyConnected);
        prop_assert_eq!(is_ci(&g).is_ci, expect);
    }

    #[test]
    fn descriptor_text_round_trips(g in descriptor()) {
        let back: GroupDescriptor = g.to_string().parse().unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn bounds_grow_with_r(g in descriptor(), r in 2u32..10) {
        let nonabelian = !g.is_abelian();
        let pairs = [
            (codim_bad_lower(&g, r).unwrap(), codim_bad_lower(&g, r + 1).unwrap()),
            (codim_red_lower(&g, r).unwrap(), codim_red_lower(&g, r + 1).unwrap()),
            (c_pasbon_lower(&g, r).unwrap(), c_pasbon_lower(&g, r + 1).unwrap()),
        ];
        for (lo, hi) in pairs {
            prop_assert!(lo <= hi);
            if nonabelian {
                prop_assert!(lo < hi);
            }
        }
        if nonabelian {
            prop_assert!(c_pasbon_lower(&g, r).unwrap() >= 2);
        }
        let rep = codim_report(&g, r).unwrap();
        prop_assert_eq!(rep.c_pasbon_lower, 2 * rep.bad_lower.min(rep.red_lower));
        prop_assert_eq!(rep.stable_k_max, rep.c_pasbon_lower as i64 - 2);
    }

    #[test]
    fn degree_two_is_pi1_of_adjoint(g in descriptor(), r in 2u32..6) {
        let res = good_locus_homotopy(&g, r, 2).unwrap();
        prop_assert_eq!(res.value, pi1_adjoint(&g));
    }

    #[test]
    fn stable_flag_matches_range(g in descriptor(), r in 2u32..6, k in 1u32..20) {
        let res = good_locus_homotopy(&g, r, k).unwrap();
        let stable = (k as i64) <= stable_range(&g, r).unwrap();
        prop_assert_eq!(res.validity == charvar::Validity::Stable, stable);
    }

    #[test]
    fn singular_report_json_round_trips(g in descriptor(), r in 1u32..5) {
        let rep = classify_singular_locus(&g, r).unwrap();
        let json = serde_json::to_string(&rep).unwrap();
        let back: charvar::SingularLocusReport = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, rep);
    }

    #[test]
    fn homotopy_result_json_round_trips(g in descriptor(), r in 2u32..5, k in 0u32..16) {
        let res = good_locus_homotopy(&g, r, k).unwrap();
        let json = serde_json::to_string(&res).unwrap();
        let back: charvar::HomotopyResult = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back, res);
    }

    #[test]
    fn support_has_even_odd_pairs(m in 0u64..200) {
        let s = homology_support(m);
        prop_assert_eq!(s.dims.len() as u64, 2 * (m + 1));
        let (even, odd): (Vec<u64>, Vec<u64>) = s.dims.iter().partition(|&&d| d % 2 == 0);
        prop_assert_eq!(even.len(), odd.len());
    }
}

#[test]
fn weights_are_symmetric_and_count_all_roots() {
    for t in SimpleType::all_up_to_rank(8) {
        let system = RootSystem::new(t);
        for i in 1..=t.rank() {
            for r in [2, 3, 5] {
                let w = parabolic_weights(t, i, r).unwrap();
                for (&n, &d) in &w.d {
                    assert_eq!(w.d(-n), d, "{t} node {i}");
                    assert!(n.abs() <= system.mark(i).unwrap());
                }
                let nonzero: u64 = w.d.values().sum::<u64>() / (r as u64 - 1);
                let inside = system
                    .positive_roots()
                    .iter()
                    .filter(|b| b.coords()[i - 1] == 0)
                    .count() as u64;
                assert_eq!(nonzero + 2 * inside, 2 * system.positive_roots().len() as u64);
            }
        }
    }
}

#[test]
fn symplectic_periodicity() {
    for n in 1..=6usize {
        let lo = GroupDescriptor::simple(SimpleType::canonical_components(Family::C, n).unwrap()[0]);
        let hi = GroupDescriptor::simple(SimpleType::new(Family::C, n + 4).unwrap());
        for k in 3..=(4 * n as u32 + 1) {
            let a = good_locus_homotopy(&lo, 2, k).unwrap().value;
            let b = good_locus_homotopy(&hi, 2, k + 8).unwrap().value;
            assert!(a.is_known() && b.is_known(), "C{n} k={k}");
            assert_eq!(a, b, "C{n} k={k}");
        }
    }
}

#[test]
fn codims_dominate_twice_the_rank() {
    for t in SimpleType::all_up_to_rank(12) {
        let levi = levi_table(t).iter().map(|r| r.codim).min().unwrap();
        let bds = bds_table(t).iter().map(|r| r.codim).min().unwrap_or(usize::MAX);
        assert!(levi.min(bds) >= 2 * t.rank(), "{t}");
        for rec in levi_table(t) {
            assert!(rec.codim > 0 && rec.codim % 2 == 0);
        }
        for rec in bds_table(t) {
            assert_eq!(rec.codim % 2, 0);
            assert_eq!(rec.index_group.order(), Some(rec.mark as u64));
        }
    }
}
