//! Central finite-difference operators `Δ(f)(z) = M₁(z)f(z+h) + M₂(z)f(z−h)`
//! acting on polynomials, with exact certification of real-rootedness and
//! half-plane zero location, a classifier for the operators that preserve
//! real-rootedness, finite Hadamard-data checks for the entire case, and a
//! counterexample search.
//!
//! The crate is `no_std` and needs only `alloc`. Exact paths run over
//! [`GaussianRational`] coefficients; the floating domain is used for the
//! numeric root oracle and sampling checks.
#![no_std]

extern crate alloc;

pub mod classify;
pub mod entire;
pub mod gaussian;
pub mod operator;
pub mod poly;
pub mod scalar;
pub mod witness;
pub mod zeros;

pub use classify::{classify_operator, necessary_filter, unimodular_proportional, Branch, Verdict, Violation};
pub use entire::{Convention, EntireFnData, HbReport};
pub use gaussian::GaussianRational;
pub use operator::{apply_delta, hb_decomposition, OperatorError, OperatorSpec};
pub use poly::{ExactPoly, FloatPoly, Poly, PolyError, RealPoly};
pub use scalar::{ComplexF, Exact, Scalar};
pub use witness::{find_counterexample, CounterexampleReport, Family};
pub use zeros::{
    aberth_roots, certify_real_rooted, half_plane_count, quasi_hb_check, sturm_real_count, Method,
    RealRootedCertificate, RealRootedness, Side, ZeroError, ZeroLocationReport,
};
