//! JSON payloads for polynomials, operators and entire-function data.
//!
//! Exact rationals travel as strings `"p"` or `"p/q"`; floats as JSON
//! numbers. Coefficient lists are ascending.

use std::str::FromStr;

use lpdelta::entire::EntireFnData;
use lpdelta::gaussian::format_ratio;
use lpdelta::operator::{ExactOperator, FloatOperator};
use lpdelta::{Convention, ExactPoly, FloatPoly, GaussianRational, OperatorSpec};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use serde_json::Number;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Domain {
    Exact,
    Float,
}

impl Domain {
    pub fn as_str(self) -> &'static str {
        match self {
            Domain::Exact => "exact",
            Domain::Float => "float",
        }
    }
}

/// A real number as it appears on the wire.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NumberJson {
    Text(String),
    Number(Number),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexJson {
    pub re: NumberJson,
    pub im: NumberJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyJson {
    pub domain: Domain,
    pub coeffs: Vec<ComplexJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorJson {
    pub m1: PolyJson,
    pub m2: PolyJson,
    pub h: ComplexJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
}

/// Plain float pair used where no exact form exists.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FloatJson {
    pub re: f64,
    pub im: f64,
}

impl From<Complex64> for FloatJson {
    fn from(z: Complex64) -> Self {
        Self { re: z.re, im: z.im }
    }
}

impl From<FloatJson> for Complex64 {
    fn from(z: FloatJson) -> Self {
        Complex64::new(z.re, z.im)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ConventionJson {
    WithExpFactors,
    Genus0,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntireJson {
    pub c: FloatJson,
    #[serde(default)]
    pub n: u32,
    #[serde(default)]
    pub a: f64,
    pub b: FloatJson,
    #[serde(default)]
    pub upper_zeros: Vec<FloatJson>,
    #[serde(default)]
    pub lower_zeros: Vec<FloatJson>,
    #[serde(default)]
    pub real_zeros: Vec<f64>,
    pub convention: ConventionJson,
}

/// Parses `p` or `p/q` with `q > 0`.
pub fn parse_rational(s: &str) -> Result<BigRational, CliError> {
    let bad = || CliError::Schema(format!("malformed rational {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let digits = |t: &str, signed: bool| {
        let body = if signed { t.strip_prefix(['-', '+']).unwrap_or(t) } else { t };
        !body.is_empty() && body.bytes().all(|b| b.is_ascii_digit())
    };
    if !digits(num, true) {
        return Err(bad());
    }
    let n = BigInt::from_str(num).map_err(|_| bad())?;
    let d = match den {
        None => BigInt::from(1),
        Some(d) if digits(d, false) => BigInt::from_str(d).map_err(|_| bad())?,
        Some(_) => return Err(bad()),
    };
    if d.is_zero() {
        return Err(CliError::Schema(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(n, d))
}

fn exact_part(v: &NumberJson) -> Result<BigRational, CliError> {
    match v {
        NumberJson::Text(s) => parse_rational(s),
        NumberJson::Number(n) => match n.as_i64() {
            Some(k) => Ok(BigRational::from_integer(k.into())),
            None => Err(CliError::Schema(format!("mixed-domain coefficient list: float {n} in exact data"))),
        },
    }
}

fn float_part(v: &NumberJson) -> Result<f64, CliError> {
    match v {
        NumberJson::Number(n) => n.as_f64().ok_or_else(|| CliError::Schema(format!("number {n} out of range"))),
        NumberJson::Text(s) => Err(CliError::Schema(format!("mixed-domain coefficient list: string {s:?} in float data"))),
    }
}

pub fn parse_exact(c: &ComplexJson) -> Result<GaussianRational, CliError> {
    Ok(GaussianRational::new(exact_part(&c.re)?, exact_part(&c.im)?))
}

pub fn parse_float(c: &ComplexJson) -> Result<Complex64, CliError> {
    Ok(Complex64::new(float_part(&c.re)?, float_part(&c.im)?))
}

pub fn emit_exact(z: &GaussianRational) -> ComplexJson {
    ComplexJson { re: NumberJson::Text(format_ratio(z.re())), im: NumberJson::Text(format_ratio(z.im())) }
}

fn float_number(x: f64) -> Result<NumberJson, CliError> {
    Number::from_f64(x)
        .map(NumberJson::Number)
        .ok_or_else(|| CliError::Schema(format!("non-finite value {x} cannot be written")))
}

pub fn emit_float(z: Complex64) -> Result<ComplexJson, CliError> {
    Ok(ComplexJson { re: float_number(z.re)?, im: float_number(z.im)? })
}

/// A parsed polynomial in either domain.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyPoly {
    Exact(ExactPoly),
    Float(FloatPoly),
}

impl AnyPoly {
    pub fn domain(&self) -> Domain {
        match self {
            AnyPoly::Exact(_) => Domain::Exact,
            AnyPoly::Float(_) => Domain::Float,
        }
    }

    pub fn to_float(&self) -> FloatPoly {
        match self {
            AnyPoly::Exact(p) => p.to_float(),
            AnyPoly::Float(p) => p.clone(),
        }
    }

    /// Reinterprets the data in `domain`; floats become their exact binary
    /// values.
    pub fn into_domain(self, domain: Domain) -> Result<Self, CliError> {
        match (self, domain) {
            (AnyPoly::Exact(p), Domain::Float) => Ok(AnyPoly::Float(p.to_float())),
            (AnyPoly::Float(p), Domain::Exact) => Ok(AnyPoly::Exact(float_to_exact(&p)?)),
            (p, _) => Ok(p),
        }
    }
}

pub fn float_to_exact(p: &FloatPoly) -> Result<ExactPoly, CliError> {
    let coeffs = p
        .coeffs()
        .iter()
        .map(|&c| GaussianRational::from_complex64(c).ok_or_else(|| CliError::Schema(format!("non-finite coefficient {c}"))))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ExactPoly::new(coeffs))
}

pub fn parse_poly(j: &PolyJson) -> Result<AnyPoly, CliError> {
    Ok(match j.domain {
        Domain::Exact => AnyPoly::Exact(ExactPoly::new(j.coeffs.iter().map(parse_exact).collect::<Result<_, _>>()?)),
        Domain::Float => AnyPoly::Float(FloatPoly::new(j.coeffs.iter().map(parse_float).collect::<Result<_, _>>()?)),
    })
}

pub fn emit_exact_poly(p: &ExactPoly) -> PolyJson {
    PolyJson { domain: Domain::Exact, coeffs: p.coeffs().iter().map(emit_exact).collect() }
}

pub fn emit_float_poly(p: &FloatPoly) -> Result<PolyJson, CliError> {
    Ok(PolyJson { domain: Domain::Float, coeffs: p.coeffs().iter().map(|&c| emit_float(c)).collect::<Result<_, _>>()? })
}

pub fn emit_poly(p: &AnyPoly) -> Result<PolyJson, CliError> {
    match p {
        AnyPoly::Exact(p) => Ok(emit_exact_poly(p)),
        AnyPoly::Float(p) => emit_float_poly(p),
    }
}

pub fn poly_from_str(s: &str) -> Result<AnyPoly, CliError> {
    parse_poly(&serde_json::from_str(s)?)
}

pub fn poly_to_string(p: &AnyPoly) -> Result<String, CliError> {
    Ok(serde_json::to_string(&emit_poly(p)?)?)
}

#[derive(Debug, Clone, PartialEq)]
pub enum AnyOperator {
    Exact(ExactOperator),
    Float(FloatOperator),
}

impl AnyOperator {
    pub fn domain(&self) -> Domain {
        match self {
            AnyOperator::Exact(_) => Domain::Exact,
            AnyOperator::Float(_) => Domain::Float,
        }
    }
}

fn with_theta<T: lpdelta::Scalar>(op: OperatorSpec<T>, theta: Option<f64>) -> Result<OperatorSpec<T>, CliError> {
    Ok(match theta {
        Some(t) => op.with_theta(t)?,
        None => op,
    })
}

/// Both coefficients must share a domain, which `h` follows.
pub fn parse_operator(j: &OperatorJson, domain: Option<Domain>) -> Result<AnyOperator, CliError> {
    if j.m1.domain != j.m2.domain {
        return Err(CliError::Schema("m1 and m2 are in different domains".into()));
    }
    let native = j.m1.domain;
    let target = domain.unwrap_or(native);
    let m1 = parse_poly(&j.m1)?.into_domain(target)?;
    let m2 = parse_poly(&j.m2)?.into_domain(target)?;
    Ok(match (m1, m2) {
        (AnyPoly::Exact(m1), AnyPoly::Exact(m2)) => {
            let h = match native {
                Domain::Exact => parse_exact(&j.h)?,
                Domain::Float => GaussianRational::from_complex64(parse_float(&j.h)?)
                    .ok_or_else(|| CliError::Schema("non-finite step".into()))?,
            };
            AnyOperator::Exact(with_theta(OperatorSpec::new(m1, m2, h)?, j.theta)?)
        }
        (AnyPoly::Float(m1), AnyPoly::Float(m2)) => {
            let h = match native {
                Domain::Exact => parse_exact(&j.h)?.to_complex64(),
                Domain::Float => parse_float(&j.h)?,
            };
            AnyOperator::Float(with_theta(OperatorSpec::new(m1, m2, h)?, j.theta)?)
        }
        _ => unreachable!("both coefficients converted to one domain"),
    })
}

pub fn emit_operator(op: &AnyOperator) -> Result<OperatorJson, CliError> {
    Ok(match op {
        AnyOperator::Exact(op) => OperatorJson {
            m1: emit_exact_poly(op.m1()),
            m2: emit_exact_poly(op.m2()),
            h: emit_exact(op.h()),
            theta: op.theta(),
        },
        AnyOperator::Float(op) => OperatorJson {
            m1: emit_float_poly(op.m1())?,
            m2: emit_float_poly(op.m2())?,
            h: emit_float(*op.h())?,
            theta: op.theta(),
        },
    })
}

pub fn parse_entire(j: &EntireJson) -> Result<EntireFnData, CliError> {
    let d = EntireFnData {
        c: j.c.into(),
        n: j.n,
        a: j.a,
        b: j.b.into(),
        upper_zeros: j.upper_zeros.iter().map(|&z| z.into()).collect(),
        lower_zeros: j.lower_zeros.iter().map(|&z| z.into()).collect(),
        real_zeros: j.real_zeros.clone(),
        convention: match j.convention {
            ConventionJson::WithExpFactors => Convention::WithExpFactors,
            ConventionJson::Genus0 => Convention::Genus0,
        },
    };
    d.validate()?;
    Ok(d)
}

pub fn emit_entire(d: &EntireFnData) -> EntireJson {
    EntireJson {
        c: d.c.into(),
        n: d.n,
        a: d.a,
        b: d.b.into(),
        upper_zeros: d.upper_zeros.iter().map(|&z| z.into()).collect(),
        lower_zeros: d.lower_zeros.iter().map(|&z| z.into()).collect(),
        real_zeros: d.real_zeros.clone(),
        convention: match d.convention {
            Convention::WithExpFactors => ConventionJson::WithExpFactors,
            Convention::Genus0 => ConventionJson::Genus0,
        },
    }
}

