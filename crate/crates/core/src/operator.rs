//! The two-term central difference operator and its Hermite–Biehler split.

use core::f64::consts::{PI, TAU};

use num_complex::Complex64;
use num_traits::One;

use crate::gaussian::GaussianRational;
use crate::poly::{ExactPoly, FloatPoly, Poly, RealPoly};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum OperatorError {
    #[error("coefficient polynomial {0} is identically zero")]
    ZeroCoefficient(&'static str),
    #[error("step h must be nonzero")]
    ZeroStep,
    #[error("angle {0} is outside [0, 2π)")]
    AngleOutOfRange(f64),
    #[error("M1 is not e^(iθ) times the conjugate flip of M2")]
    NotConjugatePair,
    #[error("input polynomial must have real coefficients")]
    NonRealInput,
    #[error("e^(-iθ/2) is not exactly representable for this θ; use the numeric path")]
    InexactAngle,
}

/// `Δ(f)(z) = M₁(z)f(z+h) + M₂(z)f(z−h)`, with an optional angle θ labelling
/// `M₁ = e^{iθ}·conj_flip(M₂)`.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorSpec<T> {
    m1: Poly<T>,
    m2: Poly<T>,
    h: T,
    theta: Option<f64>,
}

pub type ExactOperator = OperatorSpec<GaussianRational>;
pub type FloatOperator = OperatorSpec<Complex64>;

impl<T: Scalar> OperatorSpec<T> {
    pub fn new(m1: Poly<T>, m2: Poly<T>, h: T) -> Result<Self, OperatorError> {
        if m1.is_zero() {
            return Err(OperatorError::ZeroCoefficient("M1"));
        }
        if m2.is_zero() {
            return Err(OperatorError::ZeroCoefficient("M2"));
        }
        if h.is_zero() {
            return Err(OperatorError::ZeroStep);
        }
        Ok(Self { m1, m2, h, theta: None })
    }

    pub fn with_theta(mut self, theta: f64) -> Result<Self, OperatorError> {
        if !(0.0..TAU).contains(&theta) {
            return Err(OperatorError::AngleOutOfRange(theta));
        }
        self.theta = Some(theta);
        Ok(self)
    }

    pub fn m1(&self) -> &Poly<T> {
        &self.m1
    }

    pub fn m2(&self) -> &Poly<T> {
        &self.m2
    }

    pub fn h(&self) -> &T {
        &self.h
    }

    pub fn theta(&self) -> Option<f64> {
        self.theta
    }

    /// The operator with both coefficients multiplied by `c ≠ 0`.
    pub fn scaled(&self, c: &T) -> Result<Self, OperatorError> {
        Self::new(self.m1.scale(c), self.m2.scale(c), self.h.clone())
    }

    /// `(M₂, M₁, −h)`, which defines the same operator.
    pub fn swapped(&self) -> Self {
        Self { m1: self.m2.clone(), m2: self.m1.clone(), h: -self.h.clone(), theta: None }
    }

    /// `M₁·p(z+h) + M₂·p(z−h)`.
    pub fn apply(&self, p: &Poly<T>) -> Poly<T> {
        let plus = &self.m1 * &p.shift(&self.h);
        let minus = &self.m2 * &p.shift(&-self.h.clone());
        &plus + &minus
    }
}

pub fn apply_delta<T: Scalar>(op: &OperatorSpec<T>, p: &Poly<T>) -> Poly<T> {
    op.apply(p)
}

/// Result of splitting `e^{−iθ/2}·Δp` into twice the real part of
/// `F = e^{−iθ/2}·M₂·p(z−h)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HbDecomposition {
    /// `e^{−iθ/2}`.
    pub rotation: GaussianRational,
    pub f: ExactPoly,
    pub rf: RealPoly,
    pub identity_holds: bool,
}

/// Exact decomposition; needs `θ ∈ {0, π}` so that `e^{−iθ/2} ∈ {1, −i}`.
/// Without a stored θ the angle is recovered from `M₁ = c·conj_flip(M₂)`.
pub fn hb_decomposition(op: &ExactOperator, p: &ExactPoly) -> Result<HbDecomposition, OperatorError> {
    if !p.is_real() {
        return Err(OperatorError::NonRealInput);
    }
    let flipped = op.m2.conj_flip();
    let one = GaussianRational::one();
    let c = match op.theta {
        Some(0.0) => one.clone(),
        Some(PI) => -one.clone(),
        Some(_) => {
            return match crate::classify::unimodular_proportional(&op.m1, &flipped) {
                Some(_) => Err(OperatorError::InexactAngle),
                None => Err(OperatorError::NotConjugatePair),
            };
        }
        None => {
            let u = crate::classify::unimodular_proportional(&op.m1, &flipped)
                .ok_or(OperatorError::NotConjugatePair)?;
            if u.constant != one && u.constant != -one.clone() {
                return Err(OperatorError::InexactAngle);
            }
            u.constant
        }
    };
    if op.m1 != flipped.scale(&c) {
        return Err(OperatorError::NotConjugatePair);
    }
    let rotation = if c == one { one } else { -GaussianRational::i() };
    let f = (&op.m2 * &p.shift(&-op.h.clone())).scale(&rotation);
    let (rf, _) = f.re_im_parts();
    let lhs = op.apply(p).scale(&rotation);
    let rhs = ExactPoly::from_real(&rf).scale(&GaussianRational::from(2));
    Ok(HbDecomposition { rotation, f, rf, identity_holds: lhs == rhs })
}

#[derive(Debug, Clone, PartialEq)]
pub struct NumericHbDecomposition {
    pub theta: f64,
    pub f: FloatPoly,
    /// Real part of `f`, stored with zero imaginary parts.
    pub rf: FloatPoly,
    /// Max coefficient deviation of `e^{−iθ/2}Δp − 2·Rf`, relative to the
    /// largest coefficient of `e^{−iθ/2}Δp`.
    pub residual: f64,
    pub identity_holds: bool,
}

fn max_norm(p: &FloatPoly) -> f64 {
    p.coeffs().iter().map(|c| c.norm()).fold(0.0, f64::max)
}

/// Floating-point decomposition for arbitrary θ; every comparison is
/// relative to `tol`.
pub fn hb_decomposition_numeric(
    op: &FloatOperator,
    p: &FloatPoly,
    tol: f64,
) -> Result<NumericHbDecomposition, OperatorError> {
    let pscale = max_norm(p).max(f64::MIN_POSITIVE);
    if p.coeffs().iter().any(|c| c.im.abs() > tol * pscale) {
        return Err(OperatorError::NonRealInput);
    }
    let flipped = op.m2.conj_flip();
    let theta = match op.theta {
        Some(t) => t,
        None => {
            let c = op.m1.lead().copied().unwrap_or_default() / flipped.lead().copied().unwrap_or_default();
            let t = c.arg();
            if t < 0.0 { t + TAU } else { t }
        }
    };
    let unit = Complex64::from_polar(1.0, theta);
    let diff = &op.m1 - &flipped.scale(&unit);
    if max_norm(&diff) > tol * max_norm(&op.m1) {
        return Err(OperatorError::NotConjugatePair);
    }
    let rotation = Complex64::from_polar(1.0, -theta / 2.0);
    let f = (&op.m2 * &p.shift(&-op.h)).scale(&rotation);
    let rf = f.map(|c| Complex64::new(c.re, 0.0));
    let lhs = op.apply(p).scale(&rotation);
    let residual = max_norm(&(&lhs - &rf.scale(&Complex64::new(2.0, 0.0)))) / max_norm(&lhs).max(f64::MIN_POSITIVE);
    Ok(NumericHbDecomposition { theta, f, rf, residual, identity_holds: residual <= tol })
}

impl Default for OperatorSpec<GaussianRational> {
    /// Pólya's operator `f(z+i) + f(z−i)`.
    fn default() -> Self {
        Self::new(ExactPoly::one(), ExactPoly::one(), GaussianRational::i()).expect("valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    fn lin(im: i64) -> ExactPoly {
        // z + i·im
        ExactPoly::new(vec![g(0, im), g(1, 0)])
    }

    #[test]
    fn rejects_degenerate_operators() {
        let one = ExactPoly::one();
        assert_eq!(
            OperatorSpec::new(ExactPoly::zero(), one.clone(), g(0, 1)),
            Err(OperatorError::ZeroCoefficient("M1"))
        );
        assert_eq!(
            OperatorSpec::new(one.clone(), ExactPoly::zero(), g(0, 1)),
            Err(OperatorError::ZeroCoefficient("M2"))
        );
        assert_eq!(OperatorSpec::new(one.clone(), one.clone(), g(0, 0)), Err(OperatorError::ZeroStep));
        let op = OperatorSpec::new(one.clone(), one, g(0, 1)).unwrap();
        assert_eq!(op.with_theta(7.0), Err(OperatorError::AngleOutOfRange(7.0)));
    }

    #[test]
    fn apply_examples() {
        let z = ExactPoly::z();
        let z2 = ExactPoly::monomial(g(1, 0), 2);
        let op = ExactOperator::default();
        assert_eq!(op.apply(&z2), ExactPoly::from_ints(&[-2, 0, 2]));
        let op = OperatorSpec::new(lin(1), lin(-1), g(0, 1)).unwrap();
        assert_eq!(op.apply(&z), ExactPoly::from_ints(&[-2, 0, 2]));
        let op = OperatorSpec::new(ExactPoly::one(), ExactPoly::one(), g(1, 0)).unwrap();
        assert_eq!(op.apply(&z2), ExactPoly::from_ints(&[2, 0, 2]));
    }

    #[test]
    fn hb_examples() {
        let op = OperatorSpec::new(lin(1), lin(-1), g(0, 1)).unwrap().with_theta(0.0).unwrap();
        let d = hb_decomposition(&op, &ExactPoly::z()).unwrap();
        assert_eq!(d.f, lin(-1).pow(2));
        assert_eq!(ExactPoly::from_real(&d.rf), ExactPoly::from_ints(&[-1, 0, 1]));
        assert!(d.identity_holds);

        let op = ExactOperator::default().with_theta(0.0).unwrap();
        let d = hb_decomposition(&op, &ExactPoly::monomial(g(1, 0), 2)).unwrap();
        assert_eq!(d.f, ExactPoly::new(vec![g(-1, 0), g(0, -2), g(1, 0)]));
        assert_eq!(ExactPoly::from_real(&d.rf), ExactPoly::from_ints(&[-1, 0, 1]));
        assert!(d.identity_holds);
    }

    #[test]
    fn hb_theta_pi_and_recovery() {
        // M1 = −conj_flip(M2)
        let m2 = ExactPoly::new(vec![g(1, 2), g(0, 1), g(3, 0)]);
        let m1 = m2.conj_flip().scale(&g(-1, 0));
        let op = OperatorSpec::new(m1, m2, g(0, 2)).unwrap();
        let p = ExactPoly::from_ints(&[-6, 1, 1]);
        let d = hb_decomposition(&op, &p).unwrap();
        assert_eq!(d.rotation, g(0, -1));
        assert!(d.identity_holds);
        let d2 = hb_decomposition(&op.clone().with_theta(PI).unwrap(), &p).unwrap();
        assert_eq!(d, d2);
    }

    #[test]
    fn hb_preconditions() {
        let op = OperatorSpec::new(lin(1), lin(1), g(0, 1)).unwrap();
        assert_eq!(hb_decomposition(&op, &ExactPoly::z()), Err(OperatorError::NotConjugatePair));
        let op = OperatorSpec::new(lin(1), lin(-1), g(0, 1)).unwrap();
        assert_eq!(hb_decomposition(&op, &lin(1)), Err(OperatorError::NonRealInput));
        // c = i is unimodular but e^{−iπ/4} is not a Gaussian rational
        let op = OperatorSpec::new(lin(1).scale(&g(0, 1)), lin(-1), g(0, 1)).unwrap();
        assert_eq!(hb_decomposition(&op, &ExactPoly::z()), Err(OperatorError::InexactAngle));
    }

    #[test]
    fn numeric_hb_for_general_angle() {
        let m2 = ExactPoly::from_roots(&[g(1, 1), g(-2, 3)], g(1, 0)).unwrap().to_float();
        let theta = 1.0;
        let m1 = m2.conj_flip().scale(&Complex64::from_polar(1.0, theta));
        let op = OperatorSpec::new(m1, m2, Complex64::new(0.0, 1.0)).unwrap();
        let p = ExactPoly::from_ints(&[-2, 1, 1]).to_float();
        let d = hb_decomposition_numeric(&op, &p, 1e-12).unwrap();
        assert!(d.identity_holds, "residual {}", d.residual);
        assert!((d.theta - theta).abs() < 1e-12);
    }
}
