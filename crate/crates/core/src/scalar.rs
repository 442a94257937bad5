//! Coefficient domains.

use core::fmt::Debug;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::gaussian::GaussianRational;

/// Floating complex scalar used by the numeric oracle paths.
pub type ComplexF = Complex64;

/// A field of polynomial coefficients.
///
/// Division by zero is a logic error for every implementor; polynomial code
/// only divides by leading coefficients, which are nonzero by construction.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// Complex conjugate; the identity on real domains.
    fn conj(&self) -> Self;

    fn from_i64(n: i64) -> Self;
}

/// Domains whose arithmetic is exact, so that remainder sequences,
/// gcds and equality tests are meaningful.
pub trait Exact: Scalar {}

impl Scalar for BigRational {
    fn conj(&self) -> Self {
        self.clone()
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(n.into())
    }
}

impl Exact for BigRational {}

impl Scalar for GaussianRational {
    fn conj(&self) -> Self {
        GaussianRational::conj(self)
    }

    fn from_i64(n: i64) -> Self {
        GaussianRational::from(n)
    }
}

impl Exact for GaussianRational {}

impl Scalar for Complex64 {
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }

    fn from_i64(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }
}
