#![allow(dead_code)]

use lpdelta::operator::ExactOperator;
use lpdelta::{ExactPoly, GaussianRational, OperatorSpec};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn g(re: i64, im: i64) -> GaussianRational {
    GaussianRational::from_ints(re, im)
}

pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Rational in `[-bound, bound]` with denominator at most `den`.
pub fn rand_rat(rng: &mut ChaCha8Rng, bound: i64, den: i64) -> BigRational {
    let d = rng.gen_range(1..=den);
    rat(rng.gen_range(-bound * d..=bound * d), d)
}

pub fn rand_nonzero_rat(rng: &mut ChaCha8Rng, bound: i64, den: i64) -> BigRational {
    loop {
        let r = rand_rat(rng, bound, den);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn rand_gauss(rng: &mut ChaCha8Rng, bound: i64, den: i64) -> GaussianRational {
    GaussianRational::new(rand_rat(rng, bound, den), rand_rat(rng, bound, den))
}

pub fn rand_nonzero_gauss(rng: &mut ChaCha8Rng, bound: i64, den: i64) -> GaussianRational {
    loop {
        let z = rand_gauss(rng, bound, den);
        if !z.is_zero() {
            return z;
        }
    }
}

/// Random polynomial of exact degree `deg` with Gaussian-rational
/// coefficients.
pub fn rand_poly(rng: &mut ChaCha8Rng, deg: usize) -> ExactPoly {
    let mut c: Vec<GaussianRational> = (0..deg).map(|_| rand_gauss(rng, 5, 3)).collect();
    c.push(rand_nonzero_gauss(rng, 5, 3));
    ExactPoly::new(c)
}

/// Real-rooted with rational roots and a real lead.
pub fn rand_real_rooted(rng: &mut ChaCha8Rng, max_deg: usize) -> ExactPoly {
    let deg = rng.gen_range(1..=max_deg);
    let roots: Vec<GaussianRational> =
        (0..deg).map(|_| GaussianRational::from_real(rand_rat(rng, 6, 4))).collect();
    let lead = GaussianRational::from_real(rand_nonzero_rat(rng, 3, 2));
    ExactPoly::from_roots(&roots, lead).unwrap()
}

/// Zeros in the closed upper half-plane (`upper = true`) or closed lower one.
pub fn rand_quasi_hb(rng: &mut ChaCha8Rng, max_deg: usize, upper: bool) -> ExactPoly {
    let deg = rng.gen_range(0..=max_deg);
    let roots: Vec<GaussianRational> = (0..deg)
        .map(|_| {
            let re = rand_rat(rng, 4, 3);
            let im = if rng.gen_bool(0.25) { BigRational::zero() } else { rat(rng.gen_range(1..=12), 4) };
            GaussianRational::new(re, if upper { im } else { -im })
        })
        .collect();
    ExactPoly::from_roots(&roots, rand_nonzero_gauss(rng, 3, 2)).unwrap()
}

/// `((a²−b²) + 2abi)/(a²+b²)`, a unimodular Gaussian rational.
pub fn rand_unimodular(rng: &mut ChaCha8Rng) -> GaussianRational {
    loop {
        let a: i64 = rng.gen_range(-6..=6);
        let b: i64 = rng.gen_range(-6..=6);
        let n = a * a + b * b;
        if n != 0 {
            return GaussianRational::new(rat(a * a - b * b, n), rat(2 * a * b, n));
        }
    }
}

/// Purely imaginary nonzero step.
pub fn rand_imag_step(rng: &mut ChaCha8Rng) -> GaussianRational {
    GaussianRational::new(BigRational::zero(), rand_nonzero_rat(rng, 2, 3))
}

/// `M₁ = c·M₂` with `|c| = 1` and `M₂` real-rooted up to a Gaussian lead.
pub fn constant_branch_operator(rng: &mut ChaCha8Rng, max_deg: usize) -> ExactOperator {
    let deg = rng.gen_range(0..=max_deg);
    let roots: Vec<GaussianRational> =
        (0..deg).map(|_| GaussianRational::from_real(rand_rat(rng, 4, 3))).collect();
    let m2 = ExactPoly::from_roots(&roots, rand_nonzero_gauss(rng, 3, 2)).unwrap();
    let m1 = m2.scale(&rand_unimodular(rng));
    OperatorSpec::new(m1, m2, rand_imag_step(rng)).unwrap()
}

/// `M₁ = c·conj_flip(M₂)` with `M₂`'s zeros on the side of `Im h`.
pub fn hb_pair_operator(rng: &mut ChaCha8Rng, max_deg: usize) -> ExactOperator {
    let h = rand_imag_step(rng);
    let upper = h.im() > &BigRational::zero();
    let m2 = rand_quasi_hb(rng, max_deg, upper);
    let m1 = m2.conj_flip().scale(&rand_unimodular(rng));
    OperatorSpec::new(m1, m2, h).unwrap()
}

pub mod strategy {
    use super::*;
    use proptest::prelude::*;

    pub fn gauss() -> impl Strategy<Value = GaussianRational> {
        (-12i64..=12, 1i64..=4, -12i64..=12, 1i64..=4)
            .prop_map(|(a, b, c, d)| GaussianRational::from_fracs(a, b, c, d))
    }

    pub fn nonzero_gauss() -> impl Strategy<Value = GaussianRational> {
        gauss().prop_filter("nonzero", |z| !z.is_zero())
    }

    /// Nonzero polynomial of degree at most `max_deg`.
    pub fn poly(max_deg: usize) -> impl Strategy<Value = ExactPoly> {
        (proptest::collection::vec(gauss(), 0..=max_deg), nonzero_gauss()).prop_map(|(mut c, lead)| {
            c.push(lead);
            ExactPoly::new(c)
        })
    }

    pub fn real_poly(max_deg: usize) -> impl Strategy<Value = ExactPoly> {
        poly(max_deg).prop_map(|p| ExactPoly::from_real(&p.re_im_parts().0)).prop_filter("nonzero", |p| !p.is_zero())
    }

    /// Seed for the `rand`-based generators above.
    pub fn rng() -> impl Strategy<Value = ChaCha8Rng> {
        any::<u64>().prop_map(<ChaCha8Rng as rand::SeedableRng>::seed_from_u64)
    }
}
