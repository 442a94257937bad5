//! Explicit witnesses for non-preserving operators and a deterministic
//! search over families of real-rooted test polynomials.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::str::FromStr;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Float;
use num_traits::{Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gaussian::GaussianRational;
use crate::operator::ExactOperator;
use crate::poly::ExactPoly;
use crate::zeros::{aberth_roots, certify_real_rooted, ZeroError, DEFAULT_TOL};

/// Relative tolerance on the closed-form witness identities.
pub const WITNESS_TOL: f64 = 1e-12;
pub const MAX_HERMITE_DEGREE: usize = 12;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum WitnessError {
    #[error("z0 must lie in the open upper half-plane")]
    NotUpperHalfPlane,
    #[error("|w0| must be at least 1")]
    ModulusBelowOne,
    #[error("the Gaussian coefficient a must be positive")]
    NonPositiveGaussian,
    #[error("witness identity failed: relative residual {0}")]
    VerificationFailed(f64),
    #[error("unknown test family {0:?}")]
    UnknownFamily(alloc::string::String),
    #[error("invalid family parameters: {0}")]
    InvalidParams(&'static str),
}

/// Parameters of `f(z) = e^{−az² + bz}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpWitness {
    pub a: f64,
    pub b: f64,
    /// `|f(z0+i)/f(z0−i) − w0| / |w0|`.
    pub residual: f64,
}

fn exp_exponent(a: f64, b: f64, z: Complex64) -> Complex64 {
    -(z * z) * a + z * b
}

/// `a = log R / (4β)` and `b = 2aα + θ/2` for `z0 = α + iβ`, `w0 = R e^{iθ}`,
/// so that `f(z0+i)/f(z0−i) = w0`. The ratio is checked before returning.
pub fn exp_witness_params(z0: Complex64, w0: Complex64) -> Result<ExpWitness, WitnessError> {
    if !(z0.im > 0.0) {
        return Err(WitnessError::NotUpperHalfPlane);
    }
    let (r, theta) = w0.to_polar();
    if !(r >= 1.0) {
        return Err(WitnessError::ModulusBelowOne);
    }
    let (alpha, beta) = (z0.re, z0.im);
    let a = Float::ln(r) / (4.0 * beta);
    let b = 2.0 * a * alpha + theta / 2.0;
    // ratio of exponentials taken as the exponential of the difference
    let i = Complex64::i();
    let log_ratio = exp_exponent(a, b, z0 + i) - exp_exponent(a, b, z0 - i);
    let ratio = log_ratio.exp();
    let residual = (ratio - w0).norm() / r;
    if !(residual <= WITNESS_TOL) {
        return Err(WitnessError::VerificationFailed(residual));
    }
    Ok(ExpWitness { a, b, residual })
}

/// `|g(i)|` for `g(z) = f(z+i) + M(z)f(z−i)` with
/// `f(z) = (z² − 4/(e^{4a} − 1)) e^{bz}` and `M(z) = −e^{−4iaz + 2bi}`.
/// The exact value is zero.
pub fn quadratic_exp_check(a: f64, b: f64) -> Result<f64, WitnessError> {
    if !(a > 0.0) {
        return Err(WitnessError::NonPositiveGaussian);
    }
    let i = Complex64::i();
    let shift = 4.0 / Float::exp_m1(4.0 * a);
    let f = |z: Complex64| (z * z - shift) * (z * b).exp();
    let m = |z: Complex64| -(i * (-4.0 * a) * z + i * (2.0 * b)).exp();
    let z = i;
    let g = f(z + i) + m(z) * f(z - i);
    Ok(g.norm())
}

/// Named test families, in the order the search visits them.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Monomials,
    LinearProducts,
    Hermite,
    RandomRealRooted,
}

impl FamilyKind {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyKind::Monomials => "monomials",
            FamilyKind::LinearProducts => "linear_products",
            FamilyKind::Hermite => "hermite",
            FamilyKind::RandomRealRooted => "random_real_rooted",
        }
    }
}

impl FromStr for FamilyKind {
    type Err = WitnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "monomials" => Ok(FamilyKind::Monomials),
            "linear_products" => Ok(FamilyKind::LinearProducts),
            "hermite" => Ok(FamilyKind::Hermite),
            "random_real_rooted" => Ok(FamilyKind::RandomRealRooted),
            other => Err(WitnessError::UnknownFamily(other.into())),
        }
    }
}

/// A parametrized family of real-rooted polynomials with exact rational
/// zeros (or, for Hermite polynomials, known real zeros).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `1, z, …, z^{count−1}`.
    Monomials { count: usize },
    /// Powers `(z − c)^d` for `d = 1..=max_degree`, with centers `c` running
    /// over the half-integers of `[−4, 4]` ordered by distance from 0.
    LinearProducts { max_degree: usize },
    /// Physicists' Hermite polynomials `H_0..=H_max_degree`.
    Hermite { max_degree: usize },
    /// Endless stream of `∏ (z − r_k)` with rational `r_k ∈ [−10, 10]`.
    RandomRealRooted { max_degree: usize, seed: u64 },
}

impl Family {
    pub fn kind(&self) -> FamilyKind {
        match self {
            Family::Monomials { .. } => FamilyKind::Monomials,
            Family::LinearProducts { .. } => FamilyKind::LinearProducts,
            Family::Hermite { .. } => FamilyKind::Hermite,
            Family::RandomRealRooted { .. } => FamilyKind::RandomRealRooted,
        }
    }

    /// Default parameters for a family name.
    pub fn with_defaults(kind: FamilyKind, seed: u64) -> Self {
        match kind {
            FamilyKind::Monomials => Family::Monomials { count: 24 },
            FamilyKind::LinearProducts => Family::LinearProducts { max_degree: 24 },
            FamilyKind::Hermite => Family::Hermite { max_degree: MAX_HERMITE_DEGREE },
            FamilyKind::RandomRealRooted => Family::RandomRealRooted { max_degree: 8, seed },
        }
    }

    /// monomials → linear_products → hermite → random_real_rooted.
    pub fn default_order(seed: u64) -> Vec<Family> {
        [FamilyKind::Monomials, FamilyKind::LinearProducts, FamilyKind::Hermite, FamilyKind::RandomRealRooted]
            .into_iter()
            .map(|k| Family::with_defaults(k, seed))
            .collect()
    }

    pub fn validate(&self) -> Result<(), WitnessError> {
        match *self {
            Family::Hermite { max_degree } if max_degree > MAX_HERMITE_DEGREE => {
                Err(WitnessError::InvalidParams("hermite degree is limited to 12"))
            }
            Family::RandomRealRooted { max_degree: 0, .. } => {
                Err(WitnessError::InvalidParams("random_real_rooted needs max_degree >= 1"))
            }
            _ => Ok(()),
        }
    }

    /// Deterministic stream of the family's polynomials.
    pub fn generate(&self) -> Result<Box<dyn Iterator<Item = ExactPoly>>, WitnessError> {
        self.validate()?;
        Ok(match *self {
            Family::Monomials { count } => Box::new((0..count).map(|k| ExactPoly::monomial(GaussianRational::from(1), k))),
            Family::LinearProducts { max_degree } => Box::new(linear_products(max_degree)),
            Family::Hermite { max_degree } => Box::new(hermite_polynomials().take(max_degree + 1)),
            Family::RandomRealRooted { max_degree, seed } => Box::new(random_real_rooted(max_degree, seed)),
        })
    }
}

pub fn generate_family(family: &Family) -> Result<Box<dyn Iterator<Item = ExactPoly>>, WitnessError> {
    family.generate()
}

fn half_integer_centers() -> Vec<GaussianRational> {
    let mut out = alloc::vec![GaussianRational::zero()];
    for k in 1..=8 {
        let c = BigRational::new(k.into(), 2.into());
        out.push(GaussianRational::from_real(c.clone()));
        out.push(GaussianRational::from_real(-c));
    }
    out
}

fn linear_products(max_degree: usize) -> impl Iterator<Item = ExactPoly> {
    let centers = half_integer_centers();
    (1..=max_degree).flat_map(move |d| {
        centers
            .clone()
            .into_iter()
            .map(move |c| ExactPoly::linear(c).pow(d as u32))
    })
}

/// `H_{n+1} = 2z·H_n − 2n·H_{n−1}`, starting at `H_0 = 1`.
pub fn hermite_polynomials() -> impl Iterator<Item = ExactPoly> {
    let two_z = ExactPoly::monomial(GaussianRational::from(2), 1);
    let mut state = (ExactPoly::zero(), ExactPoly::one(), 0i64);
    core::iter::from_fn(move || {
        let (prev, cur, n) = &mut state;
        let out = cur.clone();
        let next = &(&two_z * cur) - &prev.scale(&GaussianRational::from(2 * *n));
        *prev = core::mem::replace(cur, next);
        *n += 1;
        Some(out)
    })
}

fn random_real_rooted(max_degree: usize, seed: u64) -> impl Iterator<Item = ExactPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    core::iter::from_fn(move || {
        let degree = rng.gen_range(1..=max_degree);
        let roots: Vec<GaussianRational> = (0..degree)
            .map(|_| {
                let den: i64 = rng.gen_range(1..=4);
                let num: i64 = rng.gen_range(-10 * den..=10 * den);
                GaussianRational::from_real(BigRational::new(num.into(), den.into()))
            })
            .collect();
        Some(ExactPoly::from_roots(&roots, GaussianRational::from(1)).expect("unit lead"))
    })
}

/// A real-rooted input whose image under the operator is not real-rooted.
#[derive(Debug, Clone, PartialEq)]
pub struct CounterexampleReport {
    pub input_poly: ExactPoly,
    pub image: ExactPoly,
    /// A numeric root of `image` off the real axis.
    pub nonreal_root: Complex64,
    pub family: FamilyKind,
    /// Position of `input_poly` within its family.
    pub index: usize,
    /// Polynomials drawn, this one included.
    pub attempts: usize,
    pub skipped_zero: usize,
}

impl CounterexampleReport {
    /// Builds a report after re-certifying both polynomials; `None` if the
    /// pair is not a counterexample.
    pub fn new(
        input_poly: ExactPoly,
        image: ExactPoly,
        family: FamilyKind,
        index: usize,
        attempts: usize,
        skipped_zero: usize,
    ) -> Option<Self> {
        if !certify_real_rooted(&input_poly).is_real_rooted() {
            return None;
        }
        if certify_real_rooted(&image).verdict != crate::zeros::RealRootedness::NotRealRooted {
            return None;
        }
        let nonreal_root = most_nonreal_root(&image)?;
        Some(Self { input_poly, image, nonreal_root, family, index, attempts, skipped_zero })
    }
}

fn most_nonreal_root(p: &ExactPoly) -> Option<Complex64> {
    let roots = match aberth_roots(&p.to_float(), DEFAULT_TOL) {
        Ok(r) => r,
        Err(ZeroError::NonConvergence { roots, .. }) => roots,
        Err(_) => return None,
    };
    roots
        .into_iter()
        .max_by(|a, b| (a.im.abs() / (1.0 + a.norm())).total_cmp(&(b.im.abs() / (1.0 + b.norm()))))
}

/// Full search result, including the bookkeeping of a failed search.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchOutcome {
    pub witness: Option<CounterexampleReport>,
    pub attempts: usize,
    pub skipped_zero: usize,
}

/// Walks the families in order, drawing at most `budget` polynomials.
pub fn search(op: &ExactOperator, families: &[Family], budget: usize) -> Result<SearchOutcome, WitnessError> {
    let mut attempts = 0;
    let mut skipped_zero = 0;
    for family in families {
        for (index, p) in family.generate()?.enumerate() {
            if attempts == budget {
                return Ok(SearchOutcome { witness: None, attempts, skipped_zero });
            }
            attempts += 1;
            let image = op.apply(&p);
            if image.is_zero() {
                skipped_zero += 1;
                continue;
            }
            if let Some(report) =
                CounterexampleReport::new(p, image, family.kind(), index, attempts, skipped_zero)
            {
                return Ok(SearchOutcome { witness: Some(report), attempts, skipped_zero });
            }
        }
    }
    Ok(SearchOutcome { witness: None, attempts, skipped_zero })
}

pub fn find_counterexample(op: &ExactOperator, families: &[Family], budget: usize) -> Option<CounterexampleReport> {
    search(op, families, budget).ok().and_then(|o| o.witness)
}
