//! Finite Hadamard data `C z^n e^{−az²+bz} ∏(…)` for the entire-function
//! case.
//!
//! Zeros off the real axis are kept in two lists so that the conjugate
//! partner of a coefficient (whose zeros are mirrored into the lower
//! half-plane) can be represented with the same type.

use alloc::vec::Vec;

use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::poly::FloatPoly;

/// How the product over nonreal zeros is formed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Convention {
    /// `∏ (1 − z/α) e^{z/α}`.
    WithExpFactors,
    /// `∏ (1 − z/α)`.
    Genus0,
}

impl Convention {
    pub fn as_str(self) -> &'static str {
        match self {
            Convention::WithExpFactors => "with_exp_factors",
            Convention::Genus0 => "genus0",
        }
    }
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EntireError {
    #[error("upper zero #{0} does not have positive imaginary part")]
    UpperZeroNotUpper(usize),
    #[error("lower zero #{0} does not have negative imaginary part")]
    LowerZeroNotLower(usize),
    #[error("real zero #{0} must be finite and nonzero")]
    BadRealZero(usize),
    #[error("leading constant C must be finite and nonzero")]
    BadConstant,
    #[error("exponent parameters must be finite")]
    BadExponent,
    #[error("evaluation overflowed")]
    Overflow,
}

/// `C z^n e^{−az²+bz} ∏_upper ∏_lower ∏_real`, real zeros always carrying
/// the factor `e^{z/x}`.
#[derive(Debug, Clone, PartialEq)]
pub struct EntireFnData {
    pub c: Complex64,
    pub n: u32,
    pub a: f64,
    pub b: Complex64,
    pub upper_zeros: Vec<Complex64>,
    /// Only nonempty for mirrored data produced by [`conj_flip_data`].
    pub lower_zeros: Vec<Complex64>,
    pub real_zeros: Vec<f64>,
    pub convention: Convention,
}

/// Outcome of the half-plane conditions on a coefficient's data.
#[derive(Debug, Clone, PartialEq)]
pub struct HbReport {
    pub accepted: bool,
    /// Effective imaginary part of the linear exponent.
    pub beta: f64,
    pub a_nonnegative: bool,
    /// Data with mirrored (lower) zeros never passes.
    pub has_lower_zeros: bool,
}

fn finite(z: Complex64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

impl EntireFnData {
    /// `C e^{−az²+bz}` with no zeros.
    pub fn exponential(c: Complex64, a: f64, b: Complex64) -> Self {
        Self {
            c,
            n: 0,
            a,
            b,
            upper_zeros: Vec::new(),
            lower_zeros: Vec::new(),
            real_zeros: Vec::new(),
            convention: Convention::WithExpFactors,
        }
    }

    /// Data whose evaluation is the polynomial
    /// `lead · z^n · ∏(z − α) · ∏(z − x)` over the given nonreal and real
    /// zeros.
    pub fn from_polynomial_roots(
        lead: Complex64,
        n: u32,
        nonreal: &[Complex64],
        real: &[f64],
        convention: Convention,
    ) -> Self {
        let mut c = lead;
        let mut b = Complex64::zero();
        for &alpha in nonreal {
            c *= -alpha;
            if convention == Convention::WithExpFactors {
                b -= alpha.inv();
            }
        }
        for &x in real {
            c *= -x;
            b -= 1.0 / x;
        }
        let (upper_zeros, lower_zeros) = nonreal.iter().partition(|z| z.im > 0.0);
        Self { c, n, a: 0.0, b, upper_zeros, lower_zeros, real_zeros: real.to_vec(), convention }
    }

    pub fn validate(&self) -> Result<(), EntireError> {
        if !finite(self.c) || self.c.is_zero() {
            return Err(EntireError::BadConstant);
        }
        if !self.a.is_finite() || !finite(self.b) {
            return Err(EntireError::BadExponent);
        }
        if let Some(k) = self.upper_zeros.iter().position(|z| !finite(*z) || z.im <= 0.0) {
            return Err(EntireError::UpperZeroNotUpper(k));
        }
        if let Some(k) = self.lower_zeros.iter().position(|z| !finite(*z) || z.im >= 0.0) {
            return Err(EntireError::LowerZeroNotLower(k));
        }
        if let Some(k) = self.real_zeros.iter().position(|x| !x.is_finite() || *x == 0.0) {
            return Err(EntireError::BadRealZero(k));
        }
        Ok(())
    }

    fn nonreal_zeros(&self) -> impl Iterator<Item = &Complex64> {
        self.upper_zeros.iter().chain(&self.lower_zeros)
    }

    /// Same function under the genus-0 convention: `b ↦ b + Σ 1/α`.
    pub fn to_genus0(&self) -> Self {
        let mut out = self.clone();
        if self.convention == Convention::WithExpFactors {
            out.b += self.nonreal_zeros().map(|a| a.inv()).sum::<Complex64>();
            out.convention = Convention::Genus0;
        }
        out
    }

    /// Same function with exponential convergence factors: `b ↦ b − Σ 1/α`.
    pub fn to_with_exp_factors(&self) -> Self {
        let mut out = self.clone();
        if self.convention == Convention::Genus0 {
            out.b -= self.nonreal_zeros().map(|a| a.inv()).sum::<Complex64>();
            out.convention = Convention::WithExpFactors;
        }
        out
    }
}

/// Finite instance of the real-entire form `c z^n e^{−az²+bz} ∏(1 − z/x)e^{z/x}`.
pub fn check_lp_membership(d: &EntireFnData) -> Result<bool, EntireError> {
    d.validate()?;
    Ok(d.upper_zeros.is_empty()
        && d.lower_zeros.is_empty()
        && d.c.im == 0.0
        && d.b.im == 0.0
        && d.a >= 0.0)
}

/// `β = Im b − Σ Im α/|α|²` with exponential factors, `β = Im b` for the
/// genus-0 product; accepts iff `a ≥ 0`, `β ≥ 0` and no zero lies below the
/// axis. The sum runs over every nonreal zero so that both conventions give
/// the same β.
pub fn check_hb_conditions(d: &EntireFnData) -> Result<HbReport, EntireError> {
    d.validate()?;
    let beta = match d.convention {
        Convention::Genus0 => d.b.im,
        Convention::WithExpFactors => {
            d.b.im - d.nonreal_zeros().map(|a| a.im / a.norm_sqr()).sum::<f64>()
        }
    };
    let a_nonnegative = d.a >= 0.0;
    let has_lower_zeros = !d.lower_zeros.is_empty();
    Ok(HbReport { accepted: a_nonnegative && beta >= 0.0 && !has_lower_zeros, beta, a_nonnegative, has_lower_zeros })
}

/// `Σ Im α/(|α|² + 1)` over the upper zeros.
pub fn blaschke_sum(d: &EntireFnData) -> f64 {
    d.upper_zeros.iter().map(|a| a.im / (a.norm_sqr() + 1.0)).sum()
}

/// Data of `conj(f(conj z))`.
pub fn conj_flip_data(d: &EntireFnData) -> EntireFnData {
    EntireFnData {
        c: d.c.conj(),
        n: d.n,
        a: d.a,
        b: d.b.conj(),
        upper_zeros: d.lower_zeros.iter().map(|z| z.conj()).collect(),
        lower_zeros: d.upper_zeros.iter().map(|z| z.conj()).collect(),
        real_zeros: d.real_zeros.clone(),
        convention: d.convention,
    }
}

/// Evaluates the prefactor times the first `terms` factors of each zero
/// list.
pub fn eval_partial(d: &EntireFnData, z: Complex64, terms: usize) -> Result<Complex64, EntireError> {
    let mut v = d.c * z.powu(d.n) * (-(z * z) * d.a + d.b * z).exp();
    let exp_factors = d.convention == Convention::WithExpFactors;
    for &alpha in d.upper_zeros.iter().take(terms).chain(d.lower_zeros.iter().take(terms)) {
        let t = z / alpha;
        v *= Complex64::one() - t;
        if exp_factors {
            v *= t.exp();
        }
    }
    for &x in d.real_zeros.iter().take(terms) {
        let t = z / x;
        v *= (Complex64::one() - t) * t.exp();
    }
    if finite(v) {
        Ok(v)
    } else {
        Err(EntireError::Overflow)
    }
}

/// Polynomial with the data's zeros, used for cross-checks against
/// polynomial evaluation.
pub fn zero_polynomial_part(d: &EntireFnData) -> FloatPoly {
    let roots: Vec<Complex64> = d
        .nonreal_zeros()
        .copied()
        .chain(d.real_zeros.iter().map(|&x| Complex64::new(x, 0.0)))
        .chain(core::iter::repeat_n(Complex64::zero(), d.n as usize))
        .collect();
    FloatPoly::from_roots(&roots, Complex64::one()).expect("lead is one")
}
