//! Deciding whether a polynomial-coefficient operator preserves
//! real-rootedness.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::TAU;
use core::fmt;

use num_traits::Float;
use num_traits::{Signed, Zero};

use crate::gaussian::GaussianRational;
use crate::operator::ExactOperator;
use crate::poly::ExactPoly;
use crate::zeros::{half_plane_count, quasi_hb_check, Side};

/// Which of the two preserving families an operator belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    /// `M₁ = c·M₂`, `|c| = 1`, with `M₂` having only real zeros.
    ConstantUnimodular,
    /// `M₁ = c·conj_flip(M₂)`, `|c| = 1`, with the zeros of `M₂` in the
    /// closed half-plane on the side of `Im h`.
    HbPair,
    None,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::ConstantUnimodular => "constant_unimodular",
            Branch::HbPair => "hb_pair",
            Branch::None => "none",
        }
    }
}

/// Named conditions a non-preserving operator can fail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    /// `Re h ≠ 0`.
    StepNotImaginary,
    /// `M₁ + M₂` not real on ℝ (after normalization).
    SumNotReal,
    /// `h(M₁ − M₂)` not real on ℝ.
    StepDifferenceNotReal,
    /// `h²(M₁ + M₂)` not real on ℝ, i.e. `h² ∉ ℝ`.
    StepSquaredNotReal,
    /// `M₁ + M₂ ≡ 0` and `h·M₁·(6x² + 2h²)` not real on ℝ.
    CubicNotReal,
    /// `M₁` is neither `c·M₂` nor `c·conj_flip(M₂)` with `|c| = 1`.
    NotUnimodularPair,
    /// `M₁ = c·M₂` but `M₂` has nonreal zeros.
    ConstantBranchNonRealZeros,
    /// `M₁ = c·conj_flip(M₂)` but some zero of `M₂` lies on the wrong side.
    ZerosWrongSide,
}

impl Condition {
    pub fn as_str(self) -> &'static str {
        match self {
            Condition::StepNotImaginary => "re_h_nonzero",
            Condition::SumNotReal => "m1_plus_m2_not_real",
            Condition::StepDifferenceNotReal => "h_m1_minus_m2_not_real",
            Condition::StepSquaredNotReal => "h_squared_not_real",
            Condition::CubicNotReal => "cubic_h_m1_not_real",
            Condition::NotUnimodularPair => "not_unimodular_pair",
            Condition::ConstantBranchNonRealZeros => "constant_branch_nonreal_zeros",
            Condition::ZerosWrongSide => "m2_zeros_wrong_side",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub condition: Condition,
    pub evidence: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub preserving: bool,
    pub branch: Branch,
    /// Principal angle of the unimodular constant, in `[0, 2π)`.
    pub recovered_theta: Option<f64>,
    /// The exact unimodular constant behind `recovered_theta`.
    pub unimodular_constant: Option<GaussianRational>,
    pub violations: Vec<Violation>,
}

/// `A = c·B` with `|c| = 1` exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct UnimodularConstant {
    pub constant: GaussianRational,
    pub theta: f64,
}

fn principal_angle(c: &GaussianRational) -> f64 {
    let z = c.to_complex64();
    let t = Float::atan2(z.im, z.re);
    if t < 0.0 { t + TAU } else { t }
}

/// Returns the angle of `c` when `a = c·b` with `|c| = 1`.
pub fn unimodular_proportional(a: &ExactPoly, b: &ExactPoly) -> Option<UnimodularConstant> {
    let (la, lb) = (a.lead()?, b.lead()?);
    if a.degree() != b.degree() || la.norm_sqr() != lb.norm_sqr() {
        return None;
    }
    // a_j·lead(b) = b_j·lead(a) for every j
    let proportional = a
        .coeffs()
        .iter()
        .zip(b.coeffs())
        .all(|(aj, bj)| aj * lb == bj * la);
    if !proportional {
        return None;
    }
    let constant = la / lb;
    let theta = principal_angle(&constant);
    Some(UnimodularConstant { constant, theta })
}

/// Distinct integer sample points `0, 1, −1, 2, −2, …`.
fn sample_points(count: usize) -> impl Iterator<Item = GaussianRational> {
    (0..count as i64).map(|k| {
        let m = (k + 1) / 2;
        GaussianRational::from(if k % 2 == 1 { m } else { -m })
    })
}

/// Finds a real point where `q` is not real. Sampling `deg q + 1` points
/// decides the question exactly.
fn nonreal_on_axis(q: &ExactPoly) -> Option<(GaussianRational, GaussianRational)> {
    let n = q.degree().map_or(1, |d| d + 1);
    sample_points(n).find_map(|x| {
        let v = q.eval(&x);
        (!v.is_real()).then_some((x, v))
    })
}

/// Reality constraints obtained by applying the operator to `1, z, z², z³`.
///
/// The operator is first divided by the leading coefficient of `Δ(1)`, or of
/// `Δ(z)` when `Δ(1) ≡ 0`, since real-rootedness of images does not see a
/// common constant factor.
pub fn necessary_filter(op: &ExactOperator) -> Vec<Violation> {
    let h = op.h().clone();
    let raw_sum = op.m1() + op.m2();
    let lead = match raw_sum.lead() {
        Some(l) => l.clone(),
        None => {
            let two_h = &h * &GaussianRational::from(2);
            &two_h * op.m1().lead().expect("M1 is nonzero")
        }
    };
    let kappa = lead.inv().expect("nonzero lead");
    let m1 = op.m1().scale(&kappa);
    let m2 = op.m2().scale(&kappa);
    let sum = &m1 + &m2;
    let mut out = Vec::new();
    let mut check = |condition: Condition, q: ExactPoly, label: &str| {
        if let Some((x, v)) = nonreal_on_axis(&q) {
            out.push(Violation { condition, evidence: format!("{label} = {v} at x = {x}") });
        }
    };
    check(Condition::SumNotReal, sum.clone(), "M1 + M2");
    check(Condition::StepDifferenceNotReal, (&m1 - &m2).scale(&h), "h(M1 - M2)");
    let h2 = &h * &h;
    if !sum.is_zero() {
        check(Condition::StepSquaredNotReal, sum.scale(&h2), "h^2(M1 + M2)");
    } else {
        let six = GaussianRational::from(6);
        let two_h2 = &GaussianRational::from(2) * &h2;
        let quad = ExactPoly::new(alloc::vec![two_h2, GaussianRational::zero(), six]);
        check(Condition::CubicNotReal, (&m1 * &quad).scale(&h), "h M1 (6x^2 + 2h^2)");
    }
    out
}

/// All zeros of `p` real.
fn zeros_all_real(p: &ExactPoly) -> bool {
    match half_plane_count(p) {
        Ok(r) => Some(r.on_axis) == p.degree(),
        Err(_) => false,
    }
}

fn zero_counts(p: &ExactPoly) -> String {
    match half_plane_count(p) {
        Ok(r) => format!("M2 zeros: upper {}, on_axis {}, lower {}", r.upper, r.on_axis, r.lower),
        Err(e) => format!("{e}"),
    }
}

/// Exact polynomial-case characterization.
pub fn classify_operator(op: &ExactOperator) -> Verdict {
    let h = op.h();
    let mut violations = Vec::new();
    if !h.re().is_zero() {
        violations.push(Violation {
            condition: Condition::StepNotImaginary,
            evidence: format!("Re h = {}", crate::gaussian::format_ratio(h.re())),
        });
    }
    let side = if h.im().is_negative() { Side::Lower } else { Side::Upper };

    let same = unimodular_proportional(op.m1(), op.m2());
    let pair = unimodular_proportional(op.m1(), &op.m2().conj_flip());

    let mut found = None;
    if let Some(u) = &same {
        if zeros_all_real(op.m2()) {
            found = Some((Branch::ConstantUnimodular, u.clone()));
        }
    }
    if found.is_none() {
        if let Some(u) = &pair {
            if quasi_hb_check(op.m2(), side) {
                found = Some((Branch::HbPair, u.clone()));
            }
        }
    }
    if found.is_none() {
        if same.is_some() {
            violations.push(Violation {
                condition: Condition::ConstantBranchNonRealZeros,
                evidence: zero_counts(op.m2()),
            });
        }
        if pair.is_some() {
            let want = match side {
                Side::Upper => "closed upper half-plane",
                Side::Lower => "closed lower half-plane",
            };
            violations.push(Violation {
                condition: Condition::ZerosWrongSide,
                evidence: format!("{}; required in the {want}", zero_counts(op.m2())),
            });
        }
        if same.is_none() && pair.is_none() {
            violations.push(Violation {
                condition: Condition::NotUnimodularPair,
                evidence: String::from("M1 is neither c*M2 nor c*conj_flip(M2) with |c| = 1"),
            });
        }
    }

    match found {
        Some((branch, u)) if violations.is_empty() => Verdict {
            preserving: true,
            branch,
            recovered_theta: Some(u.theta),
            unimodular_constant: Some(u.constant),
            violations,
        },
        other => {
            let u = other.map(|(_, u)| u);
            Verdict {
                preserving: false,
                branch: Branch::None,
                recovered_theta: u.as_ref().map(|u| u.theta),
                unimodular_constant: u.map(|u| u.constant),
                violations,
            }
        }
    }
}

impl Verdict {
    pub fn has(&self, condition: Condition) -> bool {
        self.violations.iter().any(|v| v.condition == condition)
    }
}
