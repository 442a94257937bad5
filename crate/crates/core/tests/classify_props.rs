mod common;

use common::strategy::{nonzero_gauss, rng};
use common::*;
use lpdelta::classify::Condition;
use lpdelta::{classify_operator, necessary_filter, unimodular_proportional, Branch, ExactPoly, OperatorSpec};
use proptest::prelude::*;
use rand::Rng;
use std::f64::consts::{FRAC_PI_2, PI};

proptest! {
    #[test]
    fn constant_branch_operators_preserve(mut r in rng()) {
        let op = constant_branch_operator(&mut r, 6);
        let v = classify_operator(&op);
        prop_assert!(v.preserving, "{:?}", v.violations);
        prop_assert_eq!(v.branch, Branch::ConstantUnimodular);
        prop_assert!(necessary_filter(&op).is_empty());
    }

    #[test]
    fn hb_pair_operators_preserve(mut r in rng()) {
        let op = hb_pair_operator(&mut r, 6);
        let v = classify_operator(&op);
        prop_assert!(v.preserving, "{:?}", v.violations);
        prop_assert_ne!(v.branch, Branch::None);
        prop_assert!(necessary_filter(&op).is_empty());
    }

    #[test]
    fn swapped_operator_has_the_same_verdict(mut r in rng(), bad in any::<bool>()) {
        let mut op = if r.gen_bool(0.5) { hb_pair_operator(&mut r, 4) } else { constant_branch_operator(&mut r, 4) };
        if bad {
            op = OperatorSpec::new(op.m1().clone(), op.m2().clone(), -op.h().clone()).unwrap();
        }
        prop_assert_eq!(classify_operator(&op.swapped()).preserving, classify_operator(&op).preserving);
    }

    #[test]
    fn complex_step_is_rejected(mut r in rng()) {
        let base = hb_pair_operator(&mut r, 4);
        let h = &base.h().clone() + &lpdelta::GaussianRational::from_real(rand_nonzero_rat(&mut r, 2, 2));
        let op = OperatorSpec::new(base.m1().clone(), base.m2().clone(), h).unwrap();
        let v = classify_operator(&op);
        prop_assert!(!v.preserving);
        prop_assert!(v.has(Condition::StepNotImaginary));
    }

    #[test]
    fn wrong_side_zeros_are_rejected(mut r in rng()) {
        let op = hb_pair_operator(&mut r, 4);
        let v = classify_operator(&op);
        let flipped = OperatorSpec::new(op.m1().clone(), op.m2().clone(), -op.h().clone()).unwrap();
        let w = classify_operator(&flipped);
        // only real zeros leave both sides acceptable
        if v.branch == Branch::HbPair {
            prop_assert!(!w.preserving);
            prop_assert!(w.has(Condition::ZerosWrongSide));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn verdict_is_scale_invariant(mut r in rng(), c in nonzero_gauss()) {
        let op = match r.gen_range(0..3) {
            0 => constant_branch_operator(&mut r, 5),
            1 => hb_pair_operator(&mut r, 5),
            _ => OperatorSpec::new(rand_poly(&mut r, 3), rand_poly(&mut r, 3), rand_imag_step(&mut r)).unwrap(),
        };
        let (a, b) = (classify_operator(&op), classify_operator(&op.scaled(&c).unwrap()));
        prop_assert_eq!(a.preserving, b.preserving);
        prop_assert_eq!(a.branch, b.branch);
        prop_assert_eq!(necessary_filter(&op), necessary_filter(&op.scaled(&c).unwrap()));
    }
}

#[test]
fn polya_operator_is_hb_pair_or_constant() {
    let op = lpdelta::operator::ExactOperator::default();
    let v = classify_operator(&op);
    assert!(v.preserving);
    assert_eq!(v.recovered_theta, Some(0.0));
}

#[test]
fn unimodular_constant_and_angle() {
    let p = ExactPoly::from_ints(&[1, 2, 3]);
    let u = unimodular_proportional(&p.scale(&g(0, 1)), &p).unwrap();
    assert_eq!(u.constant, g(0, 1));
    assert!((u.theta - FRAC_PI_2).abs() < 1e-15);
    let u = unimodular_proportional(&p.scale(&g(-1, 0)), &p).unwrap();
    assert!((u.theta - PI).abs() < 1e-15);
    assert!(unimodular_proportional(&p.scale(&g(1, 1)), &p).is_none());
}

#[test]
fn filter_flags_named_cases() {
    let one = ExactPoly::one();
    let op = OperatorSpec::new(one.clone(), one.clone(), g(1, 1)).unwrap();
    let v = necessary_filter(&op);
    assert!(v.iter().any(|v| v.condition == Condition::StepSquaredNotReal));
    assert!(necessary_filter(&OperatorSpec::new(one.clone(), one.clone(), g(0, 1)).unwrap()).is_empty());
    // M1 + M2 = 0 normalizes by 2h·lead(M1)
    let diff = OperatorSpec::new(one.clone(), -one.clone(), g(0, 1)).unwrap();
    assert!(necessary_filter(&diff).is_empty());
    let bad = OperatorSpec::new(one.clone(), -one, g(1, 1)).unwrap();
    assert!(necessary_filter(&bad).iter().any(|v| v.condition == Condition::CubicNotReal));
}

#[test]
fn constant_branch_needs_real_zeros() {
    let m = ExactPoly::from_ints(&[1, 0, 1]);
    let op = OperatorSpec::new(m.clone(), m, g(0, 1)).unwrap();
    let v = classify_operator(&op);
    assert!(!v.preserving);
    assert!(v.has(Condition::ConstantBranchNonRealZeros));
}
