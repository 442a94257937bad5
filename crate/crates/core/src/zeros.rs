//! Zero location: Sturm counts, real-rootedness certificates, half-plane
//! counts via Cauchy indices, and the Aberth–Ehrlich numeric oracle.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Float;
use num_traits::{One, Signed, Zero};

use crate::gaussian::GaussianRational;
use crate::poly::{ExactPoly, FloatPoly, Poly, RealPoly};

/// Relative tolerance on Aberth corrections.
pub const DEFAULT_TOL: f64 = 1e-12;
/// Relative half-width of the band around the real axis treated as on-axis
/// by numeric classification.
pub const DEFAULT_BAND: f64 = 1e-8;
pub const ABERTH_MAX_ITERATIONS: usize = 200;
/// Angular offset of the initial Aberth guesses (√2 − 1 radians).
const ABERTH_ANGLE_OFFSET: f64 = 0.414_213_562_373_095_1;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ZeroError {
    #[error("zero location is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("coefficients or iterates are not finite")]
    NonFinite,
    #[error("root iteration did not converge within {iterations} iterations")]
    NonConvergence { iterations: usize, roots: Vec<Complex64> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Exact,
    Numeric,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Numeric => "numeric",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Upper,
    Lower,
}

impl Side {
    pub fn opposite(self) -> Self {
        match self {
            Side::Upper => Side::Lower,
            Side::Lower => Side::Upper,
        }
    }
}

/// Zero counts with multiplicity by location relative to the real axis.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroLocationReport {
    pub upper: usize,
    pub on_axis: usize,
    pub lower: usize,
    pub method: Method,
    pub witnesses: Option<Vec<Complex64>>,
}

impl ZeroLocationReport {
    pub fn total(&self) -> usize {
        self.upper + self.on_axis + self.lower
    }

    pub fn count(&self, side: Side) -> usize {
        match side {
            Side::Upper => self.upper,
            Side::Lower => self.lower,
        }
    }

    /// Same counts, tagging removed.
    pub fn counts(&self) -> (usize, usize, usize) {
        (self.upper, self.on_axis, self.lower)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RealRootedness {
    RealRooted,
    NotRealRooted,
    IdenticallyZero,
}

impl RealRootedness {
    pub fn as_str(self) -> &'static str {
        match self {
            RealRootedness::RealRooted => "real_rooted",
            RealRootedness::NotRealRooted => "not_real_rooted",
            RealRootedness::IdenticallyZero => "identically_zero",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootCountTrace {
    pub degree: Option<usize>,
    /// Whether the normalized polynomial has real coefficients.
    pub coefficients_real: bool,
    /// Real roots counted with multiplicity; `None` when not computed.
    pub real_roots: Option<usize>,
    pub distinct_real_roots: Option<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RealRootedCertificate<T> {
    pub verdict: RealRootedness,
    pub method: Method,
    /// The input divided by its leading coefficient.
    pub normalized: Poly<T>,
    pub trace: RootCountTrace,
}

impl<T> RealRootedCertificate<T> {
    pub fn is_real_rooted(&self) -> bool {
        self.verdict == RealRootedness::RealRooted
    }
}

fn sign(r: &BigRational) -> i8 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}

/// Rescales by a positive constant so the leading coefficient is ±1.
fn normalize_abs(p: RealPoly) -> RealPoly {
    match p.lead() {
        Some(l) => {
            let k = BigRational::one() / l.abs();
            p.scale(&k)
        }
        None => p,
    }
}

/// Generalized Sturm chain `f0, f1, −rem(f0, f1), …`, each member rescaled
/// by a positive constant. Stops before the first zero remainder.
pub fn sturm_chain(f0: &RealPoly, f1: &RealPoly) -> Vec<RealPoly> {
    let mut chain = vec![normalize_abs(f0.clone())];
    if f1.is_zero() {
        return chain;
    }
    chain.push(normalize_abs(f1.clone()));
    loop {
        let n = chain.len();
        let r = chain[n - 2].rem(&chain[n - 1]).expect("chain members are nonzero");
        if r.is_zero() {
            break;
        }
        chain.push(normalize_abs(-r));
    }
    chain
}

/// Sign variations of the chain at +∞ (`positive`) or −∞.
fn variations_at_infinity(chain: &[RealPoly], positive: bool) -> usize {
    let signs = chain.iter().filter_map(|p| {
        let d = p.degree()?;
        let s = sign(p.lead()?);
        Some(if positive || d % 2 == 0 { s } else { -s })
    });
    let mut count = 0;
    let mut prev = 0i8;
    for s in signs {
        if s != 0 {
            if prev != 0 && s != prev {
                count += 1;
            }
            prev = s;
        }
    }
    count
}

/// Cauchy index of `num/den` over the whole real line: jumps from −∞ to +∞
/// minus jumps from +∞ to −∞.
pub fn cauchy_index(num: &RealPoly, den: &RealPoly) -> i64 {
    assert!(!den.is_zero(), "Cauchy index with zero denominator");
    let chain = sturm_chain(den, num);
    variations_at_infinity(&chain, false) as i64 - variations_at_infinity(&chain, true) as i64
}

/// Number of distinct real roots.
pub fn sturm_real_count(p: &RealPoly) -> Result<usize, ZeroError> {
    if p.is_zero() {
        return Err(ZeroError::ZeroPolynomial);
    }
    let sf = p.square_free();
    if sf.degree() == Some(0) {
        return Ok(0);
    }
    let chain = sturm_chain(&sf, &sf.derivative());
    Ok(variations_at_infinity(&chain, false) - variations_at_infinity(&chain, true))
}

/// Real roots counted with multiplicity, from the tower
/// `p, gcd(p, p′), gcd(g, g′), …`: the k-th member has exactly the roots of
/// multiplicity > k as its distinct roots.
pub fn real_root_count_with_multiplicity(p: &RealPoly) -> Result<usize, ZeroError> {
    if p.is_zero() {
        return Err(ZeroError::ZeroPolynomial);
    }
    let mut total = 0;
    let mut g = p.monic();
    while g.degree().is_some_and(|d| d > 0) {
        total += sturm_real_count(&g)?;
        g = g.gcd(&g.derivative());
    }
    Ok(total)
}

/// Exact real-rootedness certificate.
pub fn certify_real_rooted(p: &ExactPoly) -> RealRootedCertificate<GaussianRational> {
    let Some(lead) = p.lead() else {
        return RealRootedCertificate {
            verdict: RealRootedness::IdenticallyZero,
            method: Method::Exact,
            normalized: Poly::zero(),
            trace: RootCountTrace {
                degree: None,
                coefficients_real: true,
                real_roots: None,
                distinct_real_roots: None,
            },
        };
    };
    let normalized = p.scale(&lead.inv().expect("leading coefficient is nonzero"));
    let degree = normalized.degree();
    let Some(real) = normalized.to_real() else {
        return RealRootedCertificate {
            verdict: RealRootedness::NotRealRooted,
            method: Method::Exact,
            normalized,
            trace: RootCountTrace {
                degree,
                coefficients_real: false,
                real_roots: None,
                distinct_real_roots: None,
            },
        };
    };
    let real_roots = real_root_count_with_multiplicity(&real).expect("nonzero");
    let distinct = sturm_real_count(&real).expect("nonzero");
    let verdict = if Some(real_roots) == degree {
        RealRootedness::RealRooted
    } else {
        RealRootedness::NotRealRooted
    };
    RealRootedCertificate {
        verdict,
        method: Method::Exact,
        normalized,
        trace: RootCountTrace {
            degree,
            coefficients_real: true,
            real_roots: Some(real_roots),
            distinct_real_roots: Some(distinct),
        },
    }
}

/// Exact half-plane zero counts.
///
/// With `p = P + iQ`, the common factor `G = gcd(P, Q)` is real and carries
/// every real zero of `p` plus conjugate pairs of nonreal ones. The cofactor
/// `P₁ + iQ₁` has no real zeros, so its upper-minus-lower count equals the
/// winding of its argument along ℝ, read off a Sturm chain of `(P₁, Q₁)`.
pub fn half_plane_count(p: &ExactPoly) -> Result<ZeroLocationReport, ZeroError> {
    let degree = p.degree().ok_or(ZeroError::ZeroPolynomial)?;
    let (re, im) = p.re_im_parts();
    let g = re.gcd(&im);
    let g_deg = g.degree().expect("p is nonzero");
    let on_axis = real_root_count_with_multiplicity(&g)?;
    let pairs = (g_deg - on_axis) / 2;

    let (p1, _) = re.divmod(&g).expect("gcd is nonzero");
    let (q1, _) = im.divmod(&g).expect("gcd is nonzero");
    let rest = degree - g_deg;
    let (mut upper, mut lower) = (pairs, pairs);
    if rest > 0 {
        // Keep the denominator of the largest degree so that the argument
        // at ±∞ stays off the lines where the real part vanishes.
        let (a, b) = if p1.degree() >= q1.degree() { (p1, q1) } else { (q1, -p1) };
        let diff = -cauchy_index(&b, &a);
        let rest = rest as i64;
        debug_assert!((rest + diff) % 2 == 0 && diff.abs() <= rest);
        upper += ((rest + diff) / 2) as usize;
        lower += ((rest - diff) / 2) as usize;
    }
    Ok(ZeroLocationReport { upper, on_axis, lower, method: Method::Exact, witnesses: None })
}

/// True iff no zero lies in the open half-plane opposite `side`; real zeros
/// are admitted. The zero polynomial is never contained.
pub fn quasi_hb_check(p: &ExactPoly, side: Side) -> bool {
    match half_plane_count(p) {
        Ok(r) => r.count(side.opposite()) == 0,
        Err(_) => false,
    }
}

/// Whether a numeric root lies in the band `|Im z| ≤ τ(1 + |z|)`.
pub fn in_real_band(z: Complex64, tau: f64) -> bool {
    z.im.abs() <= tau * (1.0 + z.norm())
}

/// Classifies numeric roots by the sign of their imaginary part.
pub fn classify_roots(roots: &[Complex64], tau: f64) -> ZeroLocationReport {
    let (mut upper, mut on_axis, mut lower) = (0, 0, 0);
    for &z in roots {
        if in_real_band(z, tau) {
            on_axis += 1;
        } else if z.im > 0.0 {
            upper += 1;
        } else {
            lower += 1;
        }
    }
    ZeroLocationReport {
        upper,
        on_axis,
        lower,
        method: Method::Numeric,
        witnesses: Some(roots.to_vec()),
    }
}

pub fn half_plane_count_numeric(p: &FloatPoly, tau: f64) -> Result<ZeroLocationReport, ZeroError> {
    if p.is_zero() {
        return Err(ZeroError::ZeroPolynomial);
    }
    let roots = aberth_roots(p, DEFAULT_TOL)?;
    Ok(classify_roots(&roots, tau))
}

/// Numeric real-rootedness: every root inside the real band.
pub fn certify_real_rooted_numeric(
    p: &FloatPoly,
    tau: f64,
) -> Result<RealRootedCertificate<Complex64>, ZeroError> {
    if !p.is_finite() {
        return Err(ZeroError::NonFinite);
    }
    let Some(lead) = p.lead().copied() else {
        return Ok(RealRootedCertificate {
            verdict: RealRootedness::IdenticallyZero,
            method: Method::Numeric,
            normalized: Poly::zero(),
            trace: RootCountTrace {
                degree: None,
                coefficients_real: true,
                real_roots: None,
                distinct_real_roots: None,
            },
        });
    };
    let normalized = p.scale(&(Complex64::one() / lead));
    let report = half_plane_count_numeric(&normalized, tau)?;
    let scale = normalized.coeffs().iter().map(|c| c.norm()).fold(0.0, f64::max);
    let coefficients_real = normalized
        .coeffs()
        .iter()
        .all(|c| c.im.abs() <= tau * (1.0 + scale));
    let degree = normalized.degree();
    let verdict = if Some(report.on_axis) == degree {
        RealRootedness::RealRooted
    } else {
        RealRootedness::NotRealRooted
    };
    Ok(RealRootedCertificate {
        verdict,
        method: Method::Numeric,
        normalized,
        trace: RootCountTrace {
            degree,
            coefficients_real,
            real_roots: Some(report.on_axis),
            distinct_real_roots: None,
        },
    })
}

fn eval_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64, f64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    let mut abs = 0.0;
    let r = z.norm();
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
        abs = abs * r + c.norm();
    }
    (p, dp, abs)
}

/// Aberth–Ehrlich simultaneous iteration; returns all `deg p` roots with
/// multiplicity, in the order of the initial guesses.
///
/// A root stops moving once its correction is below `tol·(1 + |z|)` or its
/// residual is at the rounding level of the evaluation, whichever first.
pub fn aberth_roots(p: &FloatPoly, tol: f64) -> Result<Vec<Complex64>, ZeroError> {
    if p.is_zero() {
        return Err(ZeroError::ZeroPolynomial);
    }
    if !p.is_finite() {
        return Err(ZeroError::NonFinite);
    }
    // Exact zero roots at the origin come off first.
    let low = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let mut roots = vec![Complex64::zero(); low];
    let p = p.monic();
    let coeffs = &p.coeffs()[low..];
    let n = coeffs.len() - 1;
    match n {
        0 => return Ok(roots),
        1 => {
            roots.push(-coeffs[0]);
            return Ok(roots);
        }
        _ => {}
    }

    // Fujiwara bound on the root moduli.
    let radius = (1..=n)
        .map(|k| {
            let c = coeffs[n - k].norm();
            let c = if k == n { c / 2.0 } else { c };
            Float::powf(c, 1.0 / k as f64)
        })
        .fold(0.0, f64::max)
        * 2.0;
    let radius = if radius > 0.0 && radius.is_finite() { radius } else { 1.0 };
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle = core::f64::consts::TAU * k as f64 / n as f64 + ABERTH_ANGLE_OFFSET;
            Complex64::from_polar(radius, angle)
        })
        .collect();
    let mut done = vec![false; n];
    let eps = f64::EPSILON;

    for iteration in 0..ABERTH_MAX_ITERATIONS {
        for i in 0..n {
            if done[i] {
                continue;
            }
            let (pv, dv, abs) = eval_with_derivative(coeffs, z[i]);
            if pv.norm() <= 4.0 * n as f64 * eps * abs {
                done[i] = true;
                continue;
            }
            let ratio = pv / dv;
            let mut s = Complex64::zero();
            for j in 0..n {
                if j != i {
                    let d = z[i] - z[j];
                    if !d.is_zero() {
                        s += Complex64::one() / d;
                    }
                }
            }
            let w = ratio / (Complex64::one() - ratio * s);
            if !(w.re.is_finite() && w.im.is_finite()) {
                return Err(ZeroError::NonFinite);
            }
            z[i] -= w;
            if w.norm() <= tol * (1.0 + z[i].norm()) {
                done[i] = true;
            }
        }
        if done.iter().all(|&d| d) {
            roots.extend(z);
            return Ok(roots);
        }
        if iteration + 1 == ABERTH_MAX_ITERATIONS {
            break;
        }
    }
    roots.extend(z);
    Err(ZeroError::NonConvergence { iterations: ABERTH_MAX_ITERATIONS, roots })
}
