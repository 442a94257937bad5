//! Report bodies. Every report is wrapped in [`Report`], which carries the
//! schema id and the job parameters that produced it.

use serde::Serialize;

use crate::schema::{FloatJson, PolyJson};

pub const SCHEMA_ID: &str = "lpdelta.report/v1";

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Params {
    pub domain: Option<&'static str>,
    pub tol: Option<f64>,
    pub seed: u64,
    pub budget: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report<B> {
    pub schema: &'static str,
    pub command: &'static str,
    pub params: Params,
    #[serde(flatten)]
    pub body: B,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ApplyBody {
    pub method: &'static str,
    pub degree: Option<usize>,
    pub image: PolyJson,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertifyEvidence {
    pub normalized: PolyJson,
    pub degree: Option<usize>,
    pub coefficients_real: bool,
    pub real_roots: Option<usize>,
    pub distinct_real_roots: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CertifyBody {
    pub verdict: &'static str,
    pub method: &'static str,
    pub evidence: CertifyEvidence,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZerosBody {
    pub method: &'static str,
    pub degree: Option<usize>,
    pub upper: usize,
    pub on_axis: usize,
    pub lower: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<FloatJson>>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ViolationJson {
    pub condition: &'static str,
    pub evidence: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassifyBody {
    pub verdict: &'static str,
    pub method: &'static str,
    pub preserving: bool,
    pub branch: &'static str,
    pub recovered_theta: Option<f64>,
    pub unimodular_constant: Option<crate::schema::ComplexJson>,
    pub evidence: Vec<ViolationJson>,
    pub necessary_filter: Vec<ViolationJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct WitnessJson {
    pub family: &'static str,
    pub index: usize,
    pub input_poly: PolyJson,
    pub image: PolyJson,
    pub nonreal_root: FloatJson,
    pub image_roots: Vec<FloatJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SearchBody {
    pub verdict: &'static str,
    pub method: &'static str,
    pub families: Vec<&'static str>,
    pub attempts: usize,
    pub skipped_zero: usize,
    pub witness: Option<WitnessJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EntireBody {
    pub verdict: &'static str,
    pub method: &'static str,
    pub convention: &'static str,
    pub beta: f64,
    pub a_nonnegative: bool,
    pub has_lower_zeros: bool,
    pub laguerre_polya: bool,
    pub blaschke_sum: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlotBody {
    pub method: &'static str,
    pub svg: String,
    pub csv: String,
    pub upper: usize,
    pub on_axis: usize,
    pub lower: usize,
}
