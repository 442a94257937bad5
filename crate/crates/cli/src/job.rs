//! Job description and dispatch. [`execute`] only reads its inputs;
//! [`run_command`] also writes the outputs.

use std::fs;
use std::path::{Path, PathBuf};

use lpdelta::entire::{blaschke_sum, check_hb_conditions, check_lp_membership};
use lpdelta::operator::ExactOperator;
use lpdelta::witness::search;
use lpdelta::zeros::{certify_real_rooted_numeric, half_plane_count_numeric, DEFAULT_BAND, DEFAULT_TOL};
use lpdelta::{
    aberth_roots, certify_real_rooted, classify_operator, half_plane_count, necessary_filter, Family,
    RealRootedCertificate, Scalar, Violation, ZeroError,
};
use num_complex::Complex64;
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::plot;
use crate::report::*;
use crate::schema::*;
use crate::CliError;

pub const DEFAULT_BUDGET: usize = 500;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Apply { operator: PathBuf, poly: PathBuf },
    Certify { poly: PathBuf },
    Zeros { poly: PathBuf },
    Classify { operator: PathBuf },
    Search { operator: PathBuf },
    EntireCheck { data: PathBuf },
    Plot { polys: Vec<PathBuf> },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Apply { .. } => "apply",
            Command::Certify { .. } => "certify",
            Command::Zeros { .. } => "zeros",
            Command::Classify { .. } => "classify",
            Command::Search { .. } => "search",
            Command::EntireCheck { .. } => "entire-check",
            Command::Plot { .. } => "plot",
        }
    }
}

/// Everything a run depends on. The only randomness is the seeded test
/// family of `search`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct JobSpec {
    pub command: Command,
    /// Forces the domain instead of taking it from the input files.
    pub domain: Option<Domain>,
    /// Real-axis band `τ` for numeric classification.
    pub tol: Option<f64>,
    pub seed: u64,
    pub budget: usize,
    /// Report path; `plot` also derives its `.svg` and `.csv` paths from it.
    pub out: Option<PathBuf>,
}

impl JobSpec {
    pub fn new(command: Command) -> Self {
        Self { command, domain: None, tol: None, seed: 0, budget: DEFAULT_BUDGET, out: None }
    }

    fn band(&self) -> f64 {
        self.tol.unwrap_or(DEFAULT_BAND)
    }

    fn params(&self, domain: Domain) -> Params {
        Params { domain: Some(domain.as_str()), tol: self.tol, seed: self.seed, budget: self.budget }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub report: String,
    /// Files to write, report included when `out` is set.
    pub files: Vec<(PathBuf, String)>,
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    serde_json::from_str(&text).map_err(|e| CliError::Schema(format!("{}: {e}", path.display())))
}

fn read_poly(path: &Path) -> Result<AnyPoly, CliError> {
    parse_poly(&read_json(path)?)
}

fn read_exact_operator(path: &Path, domain: Option<Domain>, command: &str) -> Result<ExactOperator, CliError> {
    let json: OperatorJson = read_json(path)?;
    if domain == Some(Domain::Float) || (domain.is_none() && json.m1.domain == Domain::Float) {
        return Err(CliError::Schema(format!(
            "{command} runs in the exact domain; pass --exact to use the binary values of float data"
        )));
    }
    match parse_operator(&json, Some(Domain::Exact))? {
        AnyOperator::Exact(op) => Ok(op),
        AnyOperator::Float(_) => unreachable!("converted to exact"),
    }
}

fn render<B: Serialize>(job: &JobSpec, domain: Domain, body: B) -> Result<String, CliError> {
    let report = Report { schema: SCHEMA_ID, command: job.command.name(), params: job.params(domain), body };
    Ok(serde_json::to_string_pretty(&report)? + "\n")
}

fn float_list(roots: &[Complex64]) -> Vec<FloatJson> {
    plot::prepare(roots).into_iter().map(FloatJson::from).collect()
}

fn violations(v: &[Violation]) -> Vec<ViolationJson> {
    v.iter().map(|v| ViolationJson { condition: v.condition.as_str(), evidence: v.evidence.clone() }).collect()
}

fn certify_body<T: Scalar>(
    cert: &RealRootedCertificate<T>,
    normalized: PolyJson,
) -> CertifyBody {
    CertifyBody {
        verdict: cert.verdict.as_str(),
        method: cert.method.as_str(),
        evidence: CertifyEvidence {
            normalized,
            degree: cert.trace.degree,
            coefficients_real: cert.trace.coefficients_real,
            real_roots: cert.trace.real_roots,
            distinct_real_roots: cert.trace.distinct_real_roots,
        },
    }
}

/// Computes the report and any artifacts without touching the filesystem
/// beyond reading inputs.
pub fn execute(job: &JobSpec) -> Result<RunOutput, CliError> {
    let mut files = Vec::new();
    let report = match &job.command {
        Command::Apply { operator, poly } => {
            let json: OperatorJson = read_json(operator)?;
            let p = read_poly(poly)?;
            let domain = job.domain.unwrap_or(if json.m1.domain == Domain::Exact && p.domain() == Domain::Exact {
                Domain::Exact
            } else {
                Domain::Float
            });
            let image = match (parse_operator(&json, Some(domain))?, p.into_domain(domain)?) {
                (AnyOperator::Exact(op), AnyPoly::Exact(p)) => AnyPoly::Exact(op.apply(&p)),
                (AnyOperator::Float(op), AnyPoly::Float(p)) => AnyPoly::Float(op.apply(&p)),
                _ => unreachable!("operator and polynomial share a domain"),
            };
            let method = if domain == Domain::Exact { "exact" } else { "numeric" };
            let degree = match &image {
                AnyPoly::Exact(p) => p.degree(),
                AnyPoly::Float(p) => p.degree(),
            };
            render(job, domain, ApplyBody { method, degree, image: emit_poly(&image)? })?
        }
        Command::Certify { poly } => {
            let p = read_poly(poly)?;
            let domain = job.domain.unwrap_or(p.domain());
            let body = match p.into_domain(domain)? {
                AnyPoly::Exact(p) => {
                    let cert = certify_real_rooted(&p);
                    certify_body(&cert, emit_exact_poly(&cert.normalized))
                }
                AnyPoly::Float(p) => {
                    let cert = certify_real_rooted_numeric(&p, job.band())?;
                    certify_body(&cert, emit_float_poly(&cert.normalized)?)
                }
            };
            render(job, domain, body)?
        }
        Command::Zeros { poly } => {
            let p = read_poly(poly)?;
            let domain = job.domain.unwrap_or(p.domain());
            let (report, degree) = match p.into_domain(domain)? {
                AnyPoly::Exact(p) => (half_plane_count(&p)?, p.degree()),
                AnyPoly::Float(p) => (half_plane_count_numeric(&p, job.band())?, p.degree()),
            };
            let body = ZerosBody {
                method: report.method.as_str(),
                degree,
                upper: report.upper,
                on_axis: report.on_axis,
                lower: report.lower,
                roots: report.witnesses.as_deref().map(float_list),
            };
            render(job, domain, body)?
        }
        Command::Classify { operator } => {
            let op = read_exact_operator(operator, job.domain, "classify")?;
            let v = classify_operator(&op);
            let body = ClassifyBody {
                verdict: if v.preserving { "preserving" } else { "not_preserving" },
                method: "exact",
                preserving: v.preserving,
                branch: v.branch.as_str(),
                recovered_theta: v.recovered_theta,
                unimodular_constant: v.unimodular_constant.as_ref().map(emit_exact),
                evidence: violations(&v.violations),
                necessary_filter: violations(&necessary_filter(&op)),
            };
            render(job, Domain::Exact, body)?
        }
        Command::Search { operator } => {
            let op = read_exact_operator(operator, job.domain, "search")?;
            let families = Family::default_order(job.seed);
            let outcome = search(&op, &families, job.budget)?;
            let witness = match &outcome.witness {
                Some(w) => Some(WitnessJson {
                    family: w.family.as_str(),
                    index: w.index,
                    input_poly: emit_exact_poly(&w.input_poly),
                    image: emit_exact_poly(&w.image),
                    nonreal_root: w.nonreal_root.into(),
                    image_roots: float_list(&match aberth_roots(&w.image.to_float(), DEFAULT_TOL) {
                        Ok(r) => r,
                        Err(ZeroError::NonConvergence { roots, .. }) => roots,
                        Err(e) => return Err(e.into()),
                    }),
                }),
                None => None,
            };
            let body = SearchBody {
                verdict: if witness.is_some() { "witness_found" } else { "no_witness" },
                method: "exact",
                families: families.iter().map(|f| f.kind().as_str()).collect(),
                attempts: outcome.attempts,
                skipped_zero: outcome.skipped_zero,
                witness,
            };
            render(job, Domain::Exact, body)?
        }
        Command::EntireCheck { data } => {
            let d = parse_entire(&read_json(data)?)?;
            let r = check_hb_conditions(&d)?;
            let body = EntireBody {
                verdict: if r.accepted { "accepted" } else { "rejected" },
                method: "numeric",
                convention: d.convention.as_str(),
                beta: r.beta,
                a_nonnegative: r.a_nonnegative,
                has_lower_zeros: r.has_lower_zeros,
                laguerre_polya: check_lp_membership(&d)?,
                blaschke_sum: blaschke_sum(&d),
            };
            render(job, Domain::Float, body)?
        }
        Command::Plot { polys } => {
            if polys.is_empty() {
                return Err(CliError::Schema("plot needs at least one polynomial".into()));
            }
            let mut roots = Vec::new();
            for path in polys {
                let p = read_poly(path)?.to_float();
                if p.is_zero() {
                    return Err(ZeroError::ZeroPolynomial.into());
                }
                roots.extend(aberth_roots(&p, DEFAULT_TOL)?);
            }
            let base = job.out.clone().unwrap_or_else(|| PathBuf::from("roots.json"));
            let (svg_path, csv_path) = (base.with_extension("svg"), base.with_extension("csv"));
            let counts = lpdelta::zeros::classify_roots(&roots, job.band());
            files.push((svg_path.clone(), plot::svg(&roots, job.band())));
            files.push((csv_path.clone(), plot::csv(&roots)));
            let body = PlotBody {
                method: "numeric",
                svg: svg_path.display().to_string(),
                csv: csv_path.display().to_string(),
                upper: counts.upper,
                on_axis: counts.on_axis,
                lower: counts.lower,
            };
            render(job, Domain::Float, body)?
        }
    };
    if let Some(out) = &job.out {
        files.push((out.clone(), report.clone()));
    }
    Ok(RunOutput { report, files })
}

/// Runs the job and writes its files.
pub fn run_command(job: &JobSpec) -> Result<RunOutput, CliError> {
    let out = execute(job)?;
    for (path, text) in &out.files {
        fs::write(path, text).map_err(|source| CliError::Io { path: path.clone(), source })?;
    }
    Ok(out)
}
