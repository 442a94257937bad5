use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use lpdelta_cli::job::DEFAULT_BUDGET;
use lpdelta_cli::schema::Domain;
use lpdelta_cli::{run_command, Command, JobSpec};

/// Central finite-difference operators on polynomials.
#[derive(Debug, Parser)]
#[command(name = "lpdelta", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    #[command(flatten)]
    flags: Flags,
}

#[derive(Debug, Args)]
struct Flags {
    /// Run in exact arithmetic; float inputs are read as their binary values.
    #[arg(long, global = true, conflicts_with = "float")]
    exact: bool,
    /// Run in floating point.
    #[arg(long, global = true)]
    float: bool,
    /// Real-axis band for numeric root classification.
    #[arg(long, global = true, value_name = "TAU")]
    tol: Option<f64>,
    /// Seed of the random real-rooted test family.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Maximum number of test polynomials tried by `search`.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    /// Report path; stdout when absent. `plot` writes its SVG and CSV next to it.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Image of a polynomial under an operator.
    Apply { operator: PathBuf, poly: PathBuf },
    /// Real-rootedness certificate.
    Certify { poly: PathBuf },
    /// Zero counts in the upper half-plane, on the axis and below.
    Zeros { poly: PathBuf },
    /// Whether an operator preserves real-rootedness.
    Classify { operator: PathBuf },
    /// Counterexample search over the test families.
    Search { operator: PathBuf },
    /// Hermite-Biehler and Laguerre-Polya checks on entire-function data.
    EntireCheck { data: PathBuf },
    /// Root scatter (SVG) and root list (CSV).
    Plot {
        #[arg(required = true)]
        polys: Vec<PathBuf>,
    },
}

fn job(cli: Cli) -> JobSpec {
    let command = match cli.command {
        Cmd::Apply { operator, poly } => Command::Apply { operator, poly },
        Cmd::Certify { poly } => Command::Certify { poly },
        Cmd::Zeros { poly } => Command::Zeros { poly },
        Cmd::Classify { operator } => Command::Classify { operator },
        Cmd::Search { operator } => Command::Search { operator },
        Cmd::EntireCheck { data } => Command::EntireCheck { data },
        Cmd::Plot { polys } => Command::Plot { polys },
    };
    let f = cli.flags;
    let domain = match (f.exact, f.float) {
        (true, _) => Some(Domain::Exact),
        (_, true) => Some(Domain::Float),
        _ => None,
    };
    JobSpec { command, domain, tol: f.tol, seed: f.seed, budget: f.budget, out: f.out }
}

fn main() -> ExitCode {
    let job = job(Cli::parse());
    match run_command(&job) {
        Ok(out) => {
            if job.out.is_none() {
                let _ = std::io::stdout().write_all(out.report.as_bytes());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("lpdelta: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
