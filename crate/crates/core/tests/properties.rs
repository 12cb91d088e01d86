use proptest::prelude::*;

use parahoric::chevalley_signs::{build_sign_table_with_gauge, verify_sign_axioms, Gauge};
use parahoric::concave::{concave_closure, describe, is_concave, pseudo_borel_function, ConcaveFunction};
use parahoric::exec::Execution;
use parahoric::level_graphs::{build_graph, edge_label, level2_reduced_3cycle_constant};
use parahoric::parahoric_group::{
    build_group, product_formula_order, subgroup_from_concave, FiniteParahoricGroup, GroupType, Isogeny,
};
use parahoric::root_system::{DynkinType, RootSystem};
use parahoric::steinberg::{interval_dimension_sum, st_dim, st_inner};

fn system_strategy() -> impl Strategy<Value = RootSystem> {
    let all = DynkinType::all_up_to(8);
    (0..all.len()).prop_map(move |i| RootSystem::new(all[i].0, all[i].1).unwrap())
}

fn small_group() -> impl Strategy<Value = FiniteParahoricGroup> {
    (
        prop_oneof![Just(GroupType::A1), Just(GroupType::A2)],
        prop_oneof![Just(Isogeny::SimplyConnected), Just(Isogeny::Adjoint)],
        prop_oneof![Just(3u32), Just(5)],
        2u32..=3,
    )
        .prop_filter("keep the group small", |&(k, _, p, h)| {
            k == GroupType::A1 || (p == 3 && h == 2)
        })
        .prop_map(|(k, iso, p, h)| build_group(k, iso, p, h).unwrap())
}

fn a1_sc() -> FiniteParahoricGroup {
    build_group(GroupType::A1, Isogeny::SimplyConnected, 3, 3).unwrap()
}

/// Special function that is zero on positive roots, raised to a concave one.
fn overgroup_function(rs: &RootSystem, h: u32, raw: &[u32]) -> ConcaveFunction {
    let mut v: Vec<i32> = (0..rs.num_roots())
        .map(|i| if rs.is_positive_index(i) { 0 } else { (raw[i % raw.len()] % (h + 1)) as i32 })
        .collect();
    // Lowering keeps zero on positives and terminates at a subadditive function.
    v = concave_closure(rs, &v);
    ConcaveFunction::special(rs, v, h).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn roots_are_closed_under_negation(rs in system_strategy()) {
        for r in rs.roots() {
            prop_assert!(rs.contains(&-*r));
            prop_assert_eq!(r.is_positive(), r.is_nonnegative());
        }
        prop_assert_eq!(rs.num_roots(), 2 * rs.num_positive());
    }

    #[test]
    fn simply_laced_inner_products(rs in system_strategy(), i in any::<usize>(), j in any::<usize>()) {
        prop_assume!(rs.is_simply_laced());
        let a = rs.root(i % rs.num_roots());
        let b = rs.root(j % rs.num_roots());
        prop_assume!(a != b && a != -b);
        let c = rs.pairing(&a, &b);
        prop_assert!((-1..=1).contains(&c));
        prop_assert_eq!(c == -1, rs.contains(&(a + b)));
    }

    #[test]
    fn negative_root_length_counts_simple_roots(rs in system_strategy()) {
        for r in rs.negative_roots() {
            let steps: i32 = r.coeffs().iter().map(|&c| -(c as i32)).sum();
            prop_assert_eq!(r.length() as i32, steps);
            prop_assert_eq!(r.length() == 1, rs.is_negative_simple(r));
        }
    }

    #[test]
    fn sign_axioms_hold_in_every_gauge(rs in system_strategy(), bits in any::<u64>()) {
        let gauge = Gauge::from_fn(&rs, |i| bits >> (i % 64) & 1 == 1);
        let t = build_sign_table_with_gauge(&rs, &gauge).unwrap();
        prop_assert!(verify_sign_axioms(&t).all_passed());
        for a in rs.roots() {
            for b in rs.roots() {
                let Some(e) = t.eps(a, b) else { continue };
                prop_assert_eq!(t.eps(b, a), Some(-e));
                prop_assert_eq!(t.eps(&-*a, &-*b), Some(-e));
                prop_assert_eq!(t.eps(b, &-(*a + *b)), Some(e));
                if rs.is_simply_laced() {
                    prop_assert_eq!(t.pmul(a, b), Some(1));
                }
            }
        }
    }

    #[test]
    fn level_two_triangle_constant_is_gauge_invariant(n in 4usize..=7, bits in any::<u64>()) {
        let rs = RootSystem::new(DynkinType::D, n).unwrap();
        let gauge = Gauge::from_fn(&rs, |i| bits >> (i % 64) & 1 == 1);
        let t = build_sign_table_with_gauge(&rs, &gauge).unwrap();
        prop_assert_eq!(level2_reduced_3cycle_constant(&t), Ok(2));
    }

    #[test]
    fn concave_closure_is_concave_and_below(raw in prop::collection::vec(0i32..6, 12)) {
        let rs = RootSystem::new(DynkinType::G, 2).unwrap();
        let v = concave_closure(&rs, &raw);
        prop_assert!(is_concave(&v, &rs));
        prop_assert!(v.iter().zip(&raw).all(|(a, b)| a <= b));
        prop_assert_eq!(concave_closure(&rs, &v), v);
    }

    #[test]
    fn solvability_matches_opposite_sums(raw in prop::collection::vec(0u32..4, 6)) {
        let rs = RootSystem::new(DynkinType::A, 2).unwrap();
        let f = overgroup_function(&rs, 3, &raw);
        let solvable = (0..rs.num_roots()).all(|i| f.value(i) + f.value(rs.neg_index(i)) > 0);
        prop_assert_eq!(describe(&rs, &f).solvable, solvable);
        prop_assert!(describe(&rs, &f).contains_pseudo_borel);
    }

    #[test]
    fn edges_have_a_unique_shared_label(rs in system_strategy(), l in 2usize..12) {
        prop_assume!(l <= rs.max_length());
        let g = build_graph(&rs, l).unwrap();
        prop_assert!(g.is_connected());
        for (i, a) in g.vertices.iter().enumerate() {
            for (j, b) in g.vertices.iter().enumerate().skip(i + 1) {
                prop_assert_eq!(g.label(i, j), edge_label(&rs, a, b));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn root_elements_are_additive(g in small_group(), i in any::<usize>(), x in -50i64..50, y in -50i64..50) {
        let i = i % g.root_system().num_roots();
        prop_assert_eq!(g.mul(&g.root_element(i, x), &g.root_element(i, y)), g.root_element(i, x + y));
        prop_assert_eq!(g.root_parameter(i, &g.root_element(i, x)), Some(x.rem_euclid(g.modulus_of_root(i) as i64)));
    }

    #[test]
    fn filtration_subgroups_have_the_expected_order(g in small_group(), i in any::<usize>(), k in 0u32..3) {
        let i = i % g.root_system().num_roots();
        prop_assume!(k < g.depth());
        let u = g.filtration_generator(i, k).unwrap();
        let elements = g.enumerate(&[u]).unwrap();
        prop_assert_eq!(elements.len() as u64, (g.root_prime(i) as u64).pow(g.depth() - k));
    }

    #[test]
    fn coset_location_ignores_right_borel_factors(g in small_group(), a in any::<usize>(), b in any::<usize>()) {
        let cs = g.cosets();
        let x = *cs.rep(a % cs.len());
        let borel = g.borel();
        let y = borel.generators[b % borel.generators.len()];
        prop_assert_eq!(cs.locate(&g, &g.mul(&x, &y)), cs.locate(&g, &x));
        prop_assert_eq!(cs.len() as u128, g.expected_coset_count());
    }

    #[test]
    fn solvable_subgroup_orders_match_the_product_formula(raw in prop::collection::vec(1u32..4, 2)) {
        let g = a1_sc();
        let f = overgroup_function(g.root_system(), g.depth(), &raw);
        prop_assume!(describe(g.root_system(), &f).solvable);
        let p = subgroup_from_concave(&g, &f).unwrap();
        prop_assert_eq!(g.subgroup_order(&p).unwrap(), product_formula_order(&g, &f));
    }

    #[test]
    fn steinberg_inner_products_are_symmetric(raw in prop::collection::vec(0u32..4, 2), raw2 in prop::collection::vec(0u32..4, 2)) {
        let g = a1_sc();
        let f = overgroup_function(g.root_system(), g.depth(), &raw);
        let f2 = overgroup_function(g.root_system(), g.depth(), &raw2);
        let ab = st_inner(&g, &f, &f2, Execution::Sequential).unwrap();
        let ba = st_inner(&g, &f2, &f, Execution::Sequential).unwrap();
        prop_assert_eq!(ab, ba);
        prop_assert!(st_inner(&g, &f, &f, Execution::Sequential).unwrap() >= 0);
        prop_assert!(st_dim(&g, &f).unwrap() >= 0);
    }
}

#[test]
fn interval_dimensions_sum_to_the_coset_count() {
    for (k, iso, p, h) in [
        (GroupType::A1, Isogeny::SimplyConnected, 3, 2),
        (GroupType::A1, Isogeny::Adjoint, 5, 3),
        (GroupType::A2, Isogeny::SimplyConnected, 3, 2),
    ] {
        let g = build_group(k, iso, p, h).unwrap();
        let f = pseudo_borel_function(g.root_system(), h);
        assert_eq!(interval_dimension_sum(&g, &f).unwrap() as u128, g.expected_coset_count());
    }
}
