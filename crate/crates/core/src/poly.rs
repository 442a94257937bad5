//! Dense univariate polynomials, coefficients ascending by power.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::BigRational;

use crate::gaussian::GaussianRational;
use crate::scalar::{Exact, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("leading factor of a root product must be nonzero")]
    ZeroLead,
}

/// `coeffs[k]` is the coefficient of `z^k`. The last coefficient is nonzero;
/// the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

pub type ExactPoly = Poly<GaussianRational>;
pub type RealPoly = Poly<BigRational>;
pub type FloatPoly = Poly<Complex64>;

impl<T: Scalar> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c·z^k`.
    pub fn monomial(c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// The polynomial `z`.
    pub fn z() -> Self {
        Self::monomial(T::one(), 1)
    }

    /// `z - root`.
    pub fn linear(root: T) -> Self {
        Self::new(vec![-root, T::one()])
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` stands for the degree −∞ of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Coefficient of `z^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// Horner evaluation.
    pub fn eval(&self, z: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * z.clone() + c.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * T::from_i64(k as i64))
                .collect(),
        )
    }

    /// `q(z) = p(z + h)` by repeated synthetic division (Taylor shift).
    pub fn shift(&self, h: &T) -> Self {
        let mut b = self.coeffs.clone();
        let n = b.len();
        if n < 2 || h.is_zero() {
            return self.clone();
        }
        for i in 0..n - 1 {
            for j in (i..n - 1).rev() {
                let carry = h.clone() * b[j + 1].clone();
                b[j] = b[j].clone() + carry;
            }
        }
        Self::new(b)
    }

    /// `z ↦ conj(p(conj(z)))`: coefficientwise conjugation.
    pub fn conj_flip(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(Scalar::conj).collect() }
    }

    /// `lead · ∏ (z − r)`.
    pub fn from_roots(roots: &[T], lead: T) -> Result<Self, PolyError> {
        if lead.is_zero() {
            return Err(PolyError::ZeroLead);
        }
        let mut acc = vec![lead];
        for r in roots {
            // multiply acc by (z - r)
            let mut next = vec![T::zero(); acc.len() + 1];
            for (k, a) in acc.iter().enumerate() {
                next[k + 1] = next[k + 1].clone() + a.clone();
                next[k] = next[k].clone() - a.clone() * r.clone();
            }
            acc = next;
        }
        Ok(Self::new(acc))
    }

    /// Divides by the leading coefficient. The zero polynomial is returned as is.
    pub fn monic(&self) -> Self {
        match self.lead() {
            None => Self::zero(),
            Some(l) => {
                let inv = T::one() / l.clone();
                Self::new(self.coeffs.iter().map(|c| c.clone() * inv.clone()).collect())
            }
        }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn map<U: Scalar>(&self, f: impl FnMut(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<T: Exact> Poly<T> {
    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn divmod(&self, d: &Self) -> Result<(Self, Self), PolyError> {
        let dl = d.lead().ok_or(PolyError::DivisionByZero)?.clone();
        let dn = d.coeffs.len() - 1;
        let mut r = self.coeffs.clone();
        if r.len() <= dn {
            return Ok((Self::zero(), self.clone()));
        }
        let mut q = vec![T::zero(); r.len() - dn];
        for k in (0..q.len()).rev() {
            let c = r[k + dn].clone() / dl.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = r[k + j].clone() - c.clone() * dc.clone();
            }
            q[k] = c;
        }
        r.truncate(dn);
        Ok((Self::new(q), Self::new(r)))
    }

    pub fn rem(&self, d: &Self) -> Result<Self, PolyError> {
        self.divmod(d).map(|(_, r)| r)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b).expect("b is nonzero");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// `p / gcd(p, p′)`, monic. The zero polynomial maps to itself.
    pub fn square_free(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(&self.derivative());
        let (q, _) = self.divmod(&g).expect("gcd of a nonzero polynomial is nonzero");
        q.monic()
    }
}

impl Poly<GaussianRational> {
    pub fn from_real(p: &RealPoly) -> Self {
        p.map(|c| GaussianRational::from_real(c.clone()))
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| GaussianRational::from(c)).collect())
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(GaussianRational::is_real)
    }

    /// Coefficientwise split `p = Rp + i·Ip` into real polynomials.
    pub fn re_im_parts(&self) -> (RealPoly, RealPoly) {
        let re = Poly::new(self.coeffs.iter().map(|c| c.re().clone()).collect());
        let im = Poly::new(self.coeffs.iter().map(|c| c.im().clone()).collect());
        (re, im)
    }

    /// The real part as a real polynomial, `None` if some coefficient is not real.
    pub fn to_real(&self) -> Option<RealPoly> {
        self.is_real().then(|| self.re_im_parts().0)
    }

    pub fn to_float(&self) -> FloatPoly {
        self.map(GaussianRational::to_complex64)
    }
}

impl Poly<BigRational> {
    pub fn to_float(&self) -> FloatPoly {
        self.map(|c| Complex64::new(crate::gaussian::ratio_to_f64(c), 0.0))
    }
}

impl Poly<Complex64> {
    pub fn is_finite(&self) -> bool {
        self.coeffs.iter().all(|c| c.re.is_finite() && c.im.is_finite())
    }
}

impl<T: Scalar> Neg for &Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        Poly { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }
}

impl<T: Scalar> Add for &Poly<T> {
    type Output = Poly<T>;
    fn add(self, o: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl<T: Scalar> Sub for &Poly<T> {
    type Output = Poly<T>;
    fn sub(self, o: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl<T: Scalar> Mul for &Poly<T> {
    type Output = Poly<T>;
    fn mul(self, o: &Poly<T>) -> Poly<T> {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

macro_rules! owned_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl<T: Scalar> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, o: Poly<T>) -> Poly<T> { (&self).$m(&o) }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);

impl<T: Scalar> Neg for Poly<T> {
    type Output = Poly<T>;
    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Scalar + fmt::Display> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = alloc::format!("{c}");
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if !rest.contains(['+', '-']) => (true, rest),
                _ => (false, s.as_str()),
            };
            let body = if body.contains(['+', '-']) {
                alloc::format!("({body})")
            } else {
                body.into()
            };
            match (first, neg) {
                (true, true) => f.write_str("-")?,
                (true, false) => {}
                (false, true) => f.write_str(" - ")?,
                (false, false) => f.write_str(" + ")?,
            }
            first = false;
            let unit = c.is_one() || (-c.clone()).is_one();
            match k {
                0 => f.write_str(&body)?,
                _ => {
                    if !unit {
                        f.write_str(&body)?;
                    }
                    if k == 1 {
                        f.write_str("z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<T: fmt::Debug> fmt::Debug for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.coeffs.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_ints(re, im)
    }

    fn p(cs: &[(i64, i64)]) -> ExactPoly {
        Poly::new(cs.iter().map(|&(a, b)| g(a, b)).collect())
    }

    #[test]
    fn zero_polynomial_is_empty() {
        let z = ExactPoly::new(vec![g(0, 0), g(0, 0)]);
        assert!(z.is_zero());
        assert_eq!(z.degree(), None);
        assert_eq!(p(&[(1, 0), (0, 0), (2, 0), (0, 0)]).degree(), Some(2));
    }

    #[test]
    fn shift_examples() {
        assert_eq!(ExactPoly::one().shift(&g(0, 1)), ExactPoly::one());
        // z² at h = i → z² + 2iz − 1
        let z2 = ExactPoly::monomial(g(1, 0), 2);
        assert_eq!(z2.shift(&g(0, 1)), p(&[(-1, 0), (0, 2), (1, 0)]));
        let z3 = ExactPoly::monomial(g(1, 0), 3);
        assert_eq!(z3.shift(&g(1, 0)), ExactPoly::from_ints(&[1, 3, 3, 1]));
    }

    #[test]
    fn conj_flip_examples() {
        assert_eq!(p(&[(0, 1), (1, 0)]).conj_flip(), p(&[(0, -1), (1, 0)]));
        let real = ExactPoly::from_ints(&[3, -1, 4]);
        assert_eq!(real.conj_flip(), real);
        assert_eq!(p(&[(1, 0), (0, -3), (2, 1)]).conj_flip(), p(&[(1, 0), (0, 3), (2, -1)]));
    }

    #[test]
    fn re_im_parts_examples() {
        let (re, im) = p(&[(2, 3), (1, -1)]).re_im_parts();
        assert_eq!(ExactPoly::from_real(&re), ExactPoly::from_ints(&[2, 1]));
        assert_eq!(ExactPoly::from_real(&im), ExactPoly::from_ints(&[3, -1]));
        let (re, im) = ExactPoly::from_ints(&[1, 2]).re_im_parts();
        assert_eq!(ExactPoly::from_real(&re), ExactPoly::from_ints(&[1, 2]));
        assert!(im.is_zero());
        let (re, im) = p(&[(0, 0), (0, 0), (0, 1)]).re_im_parts();
        assert!(re.is_zero());
        assert_eq!(ExactPoly::from_real(&im), ExactPoly::from_ints(&[0, 0, 1]));
    }

    #[test]
    fn from_roots_examples() {
        let r = ExactPoly::from_roots(&[g(1, 0), g(-1, 0)], g(1, 0)).unwrap();
        assert_eq!(r, ExactPoly::from_ints(&[-1, 0, 1]));
        assert_eq!(ExactPoly::from_roots(&[], g(5, 0)).unwrap(), ExactPoly::from_ints(&[5]));
        let r = ExactPoly::from_roots(&[g(0, 1), g(0, -1)], g(2, 0)).unwrap();
        assert_eq!(r, ExactPoly::from_ints(&[2, 0, 2]));
        assert_eq!(ExactPoly::from_roots(&[g(1, 0)], g(0, 0)), Err(PolyError::ZeroLead));
    }

    #[test]
    fn ring_examples() {
        let a = ExactPoly::from_ints(&[-1, 0, 1]);
        let b = ExactPoly::from_ints(&[-1, 1]);
        assert_eq!(a.gcd(&b), b);
        // (z−1)²(z+3) = z³ + z² − 5z + 3
        let c = ExactPoly::from_ints(&[3, -5, 1, 1]);
        assert_eq!(c.square_free(), ExactPoly::from_ints(&[-3, 2, 1]));
        assert_eq!(ExactPoly::from_ints(&[1, 0, 1]).eval(&g(0, 1)), g(0, 0));
        assert_eq!(a.divmod(&ExactPoly::zero()), Err(PolyError::DivisionByZero));
        let (q, r) = ExactPoly::from_ints(&[1, 0, 0, 1]).divmod(&ExactPoly::from_ints(&[1, 1])).unwrap();
        assert_eq!(q, ExactPoly::from_ints(&[1, -1, 1]));
        assert!(r.is_zero());
    }

    #[test]
    fn gcd_of_real_inputs_is_real() {
        let a = ExactPoly::from_ints(&[6, -5, 1]);
        let b = ExactPoly::from_ints(&[-6, 1, 1]);
        let d = a.gcd(&b);
        assert!(d.is_real());
        assert_eq!(d, ExactPoly::from_ints(&[-2, 1]));
    }

    #[test]
    fn display() {
        assert_eq!(ExactPoly::from_ints(&[-2, 0, 2]).to_string(), "2z^2 - 2");
        assert_eq!(p(&[(-1, 0), (0, 2), (1, 0)]).to_string(), "z^2 + 2iz - 1");
        assert_eq!(p(&[(1, 0), (2, 1)]).to_string(), "(2+i)z + 1");
        assert_eq!(ExactPoly::zero().to_string(), "0");
    }
}
