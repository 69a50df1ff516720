use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use quadrics::ci_hodge::web_middle_pair;
use quadrics::ci_hodge::{euler_char_ci, hodge_diamond_ci, CISpace};
use quadrics::decomp::{
    assemble_total_betti, euler_witness, product_projective_betti, stratified_euler, summands_even, summands_odd,
    variable_middle_dim, verify_web_odd,
};
use quadrics::double_cover::{clemens_hodge, DoubleSolidModel};
use quadrics::quadric_strata::{corank_codim, fiber_betti, strata_table, BundleShape, QuadricFiberClass};

fn arb_space() -> impl Strategy<Value = CISpace> {
    (1usize..=10)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(1u32..=5, 1..=n)))
        .prop_map(|(n, ds)| CISpace::new(n, ds).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn hodge_euler_equals_chern_euler(space in arb_space()) {
        let d = hodge_diamond_ci(&space).unwrap();
        prop_assert_eq!(d.euler(), euler_char_ci(&space).unwrap());
    }

    #[test]
    fn diamonds_are_symmetric(space in arb_space()) {
        let d = hodge_diamond_ci(&space).unwrap();
        prop_assert!(d.is_serre_symmetric());
        prop_assert!(d.is_poincare_symmetric());
        for p in 1..d.dim {
            if 2 * p != d.dim {
                prop_assert!(d.get(p, 0).is_zero(), "h^{{{},0}} of {}", p, space);
            }
        }
    }

    #[test]
    fn degree_one_forms_drop_out(space in arb_space(), pos in 0usize..6) {
        prop_assume!(space.ambient_dim() < 10);
        let mut degrees = space.degrees().to_vec();
        degrees.insert(pos.min(degrees.len()), 1);
        let lifted = CISpace::new(space.ambient_dim() + 1, degrees).unwrap();
        prop_assert_eq!(hodge_diamond_ci(&space).unwrap(), hodge_diamond_ci(&lifted).unwrap());
    }
}

#[test]
fn entries_are_nonnegative_integers() {
    for n in 1..=12 {
        for r in 0..=4.min(n) {
            let d = hodge_diamond_ci(&CISpace::quadrics(n, r).unwrap()).unwrap();
            assert!(d.entries.iter().flatten().all(|x| x >= &BigInt::zero()));
        }
    }
}

#[test]
fn clemens_h03_matches_hrr() {
    for m in 3..=12 {
        let (_, h03) = web_middle_pair(m).unwrap();
        let z = clemens_hodge(&DoubleSolidModel::regular(m).unwrap()).unwrap();
        assert_eq!(h03, BigInt::from(z.h03), "m = {m}");
        assert!(verify_web_odd(m).unwrap().pass);
    }
}

#[test]
fn strata_codims_are_binomials() {
    for i in 1..=10 {
        assert_eq!(
            corank_codim(i),
            quadrics::exactalg::binomial_i64(i as i64 + 1, 2).unwrap()
        );
    }
    let t = strata_table(BundleShape::new(6, 3).unwrap());
    assert!(t.strata.iter().all(|s| s.expected_codim == corank_codim(s.corank)));
}

#[test]
fn stratified_euler_matches_assembly() {
    for m in 3..=10 {
        let shape = BundleShape::new(2 * m, 3).unwrap();
        let total = assemble_total_betti(shape, variable_middle_dim(shape).unwrap()).unwrap();
        assert_eq!(stratified_euler(shape).unwrap(), total.euler(), "m = {m}");
        assert!(euler_witness(m).unwrap().equal, "m = {m}");
    }
}

#[test]
fn total_space_matches_ambient_below_middle() {
    for n in 1..=8 {
        for r in 0..=3 {
            let shape = BundleShape::new(n, r).unwrap();
            let b = assemble_total_betti(shape, variable_middle_dim(shape).unwrap()).unwrap();
            let ambient = product_projective_betti(n + 1, r);
            for k in 0..n + r {
                assert_eq!(b.get(k), ambient.get(k), "n = {n}, r = {r}, k = {k}");
            }
        }
    }
}

#[test]
fn constant_summands_match_fiber_even_cohomology() {
    for n in 1..=11 {
        let shape = BundleShape::new(n, 2).unwrap();
        let list = if n % 2 == 0 {
            summands_even(shape)
        } else {
            summands_odd(shape)
        }
        .unwrap();
        let fiber = fiber_betti(QuadricFiberClass::smooth(n)).unwrap();
        let even_classes: i64 = fiber.values().iter().step_by(2).sum();
        let variable = if n % 2 == 0 { 1 } else { 0 };
        assert_eq!(list.constants().count() as i64, even_classes - variable, "n = {n}");
        assert_eq!(list.constants().count(), n + 1);
    }
}
