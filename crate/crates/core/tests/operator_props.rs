mod common;

use common::strategy::{gauss, nonzero_gauss, poly, real_poly, rng};
use common::*;
use lpdelta::operator::{hb_decomposition_numeric, ExactOperator, OperatorError};
use lpdelta::{hb_decomposition, ExactPoly, GaussianRational, OperatorSpec};
use proptest::prelude::*;

fn operator() -> impl Strategy<Value = ExactOperator> {
    (poly(4), poly(4), nonzero_gauss()).prop_map(|(m1, m2, h)| OperatorSpec::new(m1, m2, h).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn delta_is_linear(op in operator(), p in poly(6), q in poly(6), a in gauss(), b in gauss()) {
        let combo = &p.scale(&a) + &q.scale(&b);
        let expect = &op.apply(&p).scale(&a) + &op.apply(&q).scale(&b);
        prop_assert_eq!(op.apply(&combo), expect);
    }
}

proptest! {
    #[test]
    fn swap_defines_the_same_operator(op in operator(), p in poly(6)) {
        prop_assert_eq!(op.swapped().apply(&p), op.apply(&p));
    }

    #[test]
    fn delta_evaluates_pointwise(op in operator(), p in poly(5), z in gauss()) {
        let h = op.h().clone();
        let expect = &(&op.m1().eval(&z) * &p.eval(&(&z + &h))) + &(&op.m2().eval(&z) * &p.eval(&(&z - &h)));
        prop_assert_eq!(op.apply(&p).eval(&z), expect);
    }

    #[test]
    fn hb_pair_maps_real_to_real(mut r in rng(), p in real_poly(6)) {
        let h = rand_imag_step(&mut r);
        let m2 = rand_poly(&mut r, 3);
        let op = OperatorSpec::new(m2.conj_flip(), m2, h).unwrap();
        prop_assert!(op.apply(&p).is_real());
    }

    #[test]
    fn scaling_scales_the_image(op in operator(), p in poly(5), c in nonzero_gauss()) {
        prop_assert_eq!(op.scaled(&c).unwrap().apply(&p), op.apply(&p).scale(&c));
    }

    #[test]
    fn numeric_decomposition_matches_exact(mut r in rng(), p in real_poly(6)) {
        let m2 = rand_quasi_hb(&mut r, 4, true);
        let op = OperatorSpec::new(m2.conj_flip(), m2, GaussianRational::i()).unwrap();
        let exact = hb_decomposition(&op, &p).unwrap();
        let fop = OperatorSpec::new(op.m1().to_float(), op.m2().to_float(), GaussianRational::i().to_complex64()).unwrap();
        let num = hb_decomposition_numeric(&fop, &p.to_float(), 1e-9).unwrap();
        prop_assert!(num.identity_holds);
        prop_assert!(num.theta.abs() < 1e-12);
        let diff = &num.rf - &ExactPoly::from_real(&exact.rf).to_float();
        let scale = num.rf.coeffs().iter().map(|c| c.norm()).fold(1.0, f64::max);
        prop_assert!(diff.coeffs().iter().all(|c| c.norm() <= 1e-9 * scale));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn hermite_biehler_identity(mut r in rng(), p in real_poly(6), flip in any::<bool>()) {
        let m2 = rand_quasi_hb(&mut r, 5, true);
        let (m1, theta) = if flip { (-m2.conj_flip(), std::f64::consts::PI) } else { (m2.conj_flip(), 0.0) };
        let op = OperatorSpec::new(m1, m2, GaussianRational::i()).unwrap();
        let stored = op.clone().with_theta(theta).unwrap();
        let d = hb_decomposition(&stored, &p).unwrap();
        prop_assert!(d.identity_holds);
        prop_assert_eq!(hb_decomposition(&op, &p).unwrap(), d);
    }
}

#[test]
fn polya_default_operator() {
    let op = ExactOperator::default();
    assert_eq!(op.apply(&ExactPoly::from_ints(&[0, 0, 1])), ExactPoly::from_ints(&[-2, 0, 2]));
}

#[test]
fn decomposition_needs_conjugate_pair_and_real_input() {
    let op = OperatorSpec::new(ExactPoly::from_ints(&[1, 1]), ExactPoly::one(), g(0, 1)).unwrap();
    assert_eq!(hb_decomposition(&op, &ExactPoly::one()), Err(OperatorError::NotConjugatePair));
    let polya = ExactOperator::default();
    let p = ExactPoly::new(vec![g(0, 1), g(1, 0)]);
    assert_eq!(hb_decomposition(&polya, &p), Err(OperatorError::NonRealInput));
    let quarter = polya.with_theta(std::f64::consts::FRAC_PI_2).unwrap();
    assert_eq!(hb_decomposition(&quarter, &ExactPoly::one()), Err(OperatorError::InexactAngle));
}

#[test]
fn constructor_rejects_degenerate_input() {
    let one = ExactPoly::one();
    assert_eq!(OperatorSpec::new(ExactPoly::zero(), one.clone(), g(0, 1)), Err(OperatorError::ZeroCoefficient("M1")));
    assert_eq!(OperatorSpec::new(one.clone(), one.clone(), g(0, 0)), Err(OperatorError::ZeroStep));
    let op = OperatorSpec::new(one.clone(), one, g(0, 1)).unwrap();
    assert!(matches!(op.with_theta(7.0), Err(OperatorError::AngleOutOfRange(_))));
}
