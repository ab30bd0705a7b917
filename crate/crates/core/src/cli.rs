//! Command-line front end. [`run`] does all the work so tests can drive it
//! without spawning a process.
//!
//! `--source` and `--channel` take a model file path. When no file of that
//! name exists, the built-in names `symmetric`/`s1`, `sparse`/`s2`,
//! `skewed`/`s3` (sources) and `averaging`/`ch` (channel) are accepted.

use std::ffi::OsString;
use std::io::Write;
use std::path::Path;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::asymptotic;
use crate::bounds::{self, OptimizerConfig};
use crate::catalog;
use crate::error::{Error, Result};
use crate::model::{self, ParseOptions};
use crate::probcore::{ChannelModel, JointDistribution};
use crate::spectral;
use crate::verify::{self, SuiteSummary};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INFEASIBLE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "sumrate", version, about = "Sum-rate bounds for correlated sources over a multiple-access channel")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Trivial, achievable and correlation-constrained bounds plus a verdict.
    Report(ReportArgs),
    /// Singular values of the normalized joint matrix of a source.
    Spectrum(SpectrumArgs),
    /// Seeded property suites.
    Verify(VerifyArgs),
    /// Near-decomposable encoder construction for increasing block length.
    Construct(ConstructArgs),
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    #[arg(long)]
    pub source: String,
    #[arg(long)]
    pub channel: String,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, default_value_t = 32)]
    pub restarts: usize,
    /// Simplex grid resolution for the constrained upper bound.
    #[arg(long, default_value_t = 0.0025)]
    pub grid: f64,
    #[arg(long, default_value_t = 1e-9)]
    pub tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Exit with status 2 when the verdict is an infeasibility.
    #[arg(long)]
    pub fail_on_infeasible: bool,
    /// Read channel columns as 11 10 01 00 when the file gives no input order.
    #[arg(long)]
    pub table_order: bool,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long)]
    pub source: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Theorem1,
    Dpi,
    Iid,
    Decomposition,
    Appendix,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    /// Number of seeded cases; for `appendix`, the largest block length.
    #[arg(long, default_value_t = 100)]
    pub seeds: u64,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    /// Single-letter distribution of the first encoder input.
    #[arg(long, value_delimiter = ',', default_values_t = [0.3, 0.7])]
    pub px1: Vec<f64>,
    /// Distribution of the binary randomizing variable.
    #[arg(long, value_delimiter = ',', default_values_t = [0.6, 0.4])]
    pub pu: Vec<f64>,
    /// Single-letter symbols whose n-fold product forms S₁; defaults to the largest atom.
    #[arg(long, value_delimiter = ',')]
    pub s1: Option<Vec<usize>>,
    #[arg(long, default_value_t = 8)]
    pub n_max: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn execute(cmd: &Command, out: &mut dyn Write) -> Result<i32> {
    match cmd {
        Command::Report(a) => report(a, out),
        Command::Spectrum(a) => spectrum(a, out),
        Command::Verify(a) => verify_cmd(a, out),
        Command::Construct(a) => construct(a, out),
    }
}

pub fn load_source(spec: &str, opts: ParseOptions) -> Result<JointDistribution> {
    if !Path::new(spec).exists() {
        let builtin = match spec {
            "symmetric" | "s1" => Some(catalog::symmetric_source()),
            "sparse" | "s2" => Some(catalog::sparse_source()),
            "skewed" | "s3" => Some(catalog::skewed_source()),
            _ => None,
        };
        if let Some(s) = builtin {
            return Ok(s);
        }
    }
    model::parse_model(spec, opts)?
        .source
        .ok_or_else(|| Error::InvalidInput(format!("{spec}: no source in model file")))
}

pub fn load_channel(spec: &str, opts: ParseOptions) -> Result<ChannelModel> {
    if !Path::new(spec).exists() && matches!(spec, "averaging" | "ch") {
        return Ok(catalog::averaging_channel());
    }
    model::parse_model(spec, opts)?
        .channel
        .ok_or_else(|| Error::InvalidInput(format!("{spec}: no channel in model file")))
}

fn report(a: &ReportArgs, out: &mut dyn Write) -> Result<i32> {
    let opts = ParseOptions {
        table_order: a.table_order,
    };
    let src = load_source(&a.source, opts)?;
    let ch = load_channel(&a.channel, opts)?;
    let cfg = OptimizerConfig {
        seed: a.seed,
        restarts: a.restarts,
        grid_resolution: a.grid,
        convergence_tol: a.tol,
        ..OptimizerConfig::default()
    };
    let r = bounds::assess(&src, &ch, &cfg)?;
    match a.format {
        Format::Text => {
            writeln!(out, "H(U,V)={:.3}", r.source_entropy)?;
            writeln!(out, "lambda2(U,V)={:.4}", r.lambda2_uv)?;
            writeln!(out, "trivial={:.3}", r.trivial_bound)?;
            writeln!(out, "achievable={:.3}", r.achievable_rate)?;
            let tag = if r.upper_certified { "grid" } else { "heuristic" };
            writeln!(out, "upper={:.3} ({tag})", r.upper_bound)?;
            writeln!(out, "verdict={}", r.verdict)?;
        }
        Format::Csv => {
            writeln!(out, "source_entropy,lambda2_uv,trivial_bound,achievable_rate,upper_bound,upper_certified,verdict")?;
            writeln!(
                out,
                "{},{},{},{},{},{},{}",
                r.source_entropy, r.lambda2_uv, r.trivial_bound, r.achievable_rate, r.upper_bound, r.upper_certified, r.verdict
            )?;
        }
        Format::Json => write_json(out, &r)?,
    }
    Ok(if a.fail_on_infeasible && r.verdict.is_infeasible() {
        EXIT_INFEASIBLE
    } else {
        EXIT_OK
    })
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| Error::InvalidInput(e.to_string()))?;
    writeln!(out, "{text}")?;
    Ok(())
}

#[derive(Serialize)]
struct SpectrumOut {
    singular_values: Vec<f64>,
    lambda2: f64,
    rank: usize,
    valid_joint: bool,
    worst_deviation: f64,
}

fn spectrum(a: &SpectrumArgs, out: &mut dyn Write) -> Result<i32> {
    let src = load_source(&a.source, ParseOptions::default())?;
    let profile = spectral::profile_of(&src)?;
    let t1 = spectral::verify_theorem1(&src)?;
    let s = SpectrumOut {
        lambda2: spectral::lambda2(&src)?,
        rank: profile.rank(),
        singular_values: profile.singular_values,
        valid_joint: t1.is_valid_joint,
        worst_deviation: t1.worst_deviation(),
    };
    match a.format {
        Format::Text => {
            for (i, v) in s.singular_values.iter().enumerate() {
                writeln!(out, "lambda{}={:.4}", i + 1, v)?;
            }
            writeln!(out, "rank={}", s.rank)?;
            writeln!(out, "valid_joint={} (worst deviation {:.1e})", s.valid_joint, s.worst_deviation)?;
        }
        Format::Csv => {
            writeln!(out, "index,singular_value")?;
            for (i, v) in s.singular_values.iter().enumerate() {
                writeln!(out, "{},{}", i + 1, v)?;
            }
        }
        Format::Json => write_json(out, &s)?,
    }
    Ok(EXIT_OK)
}

fn verify_cmd(a: &VerifyArgs, out: &mut dyn Write) -> Result<i32> {
    let summary: SuiteSummary = match a.suite {
        Suite::Theorem1 => verify::theorem1_suite(a.seeds)?,
        Suite::Dpi => {
            let d = verify::dpi_suite(a.seeds)?;
            writeln!(out, "max product identity error {:.3e}", d.max_identity_error)?;
            writeln!(out, "min outer slack {:.3e}", d.min_outer_slack)?;
            d.summary
        }
        Suite::Iid => verify::iid_suite(a.seeds)?,
        Suite::Decomposition => verify::decomposition_suite(a.seeds)?,
        Suite::Appendix => {
            let n_max = usize::try_from(a.seeds).unwrap_or(usize::MAX).clamp(1, 10);
            verify::appendix_suite(&[0.3, 0.7], &[0.6, 0.4], n_max)?.summary
        }
    };
    writeln!(out, "{summary}")?;
    Ok(if summary.all_passed() { EXIT_OK } else { EXIT_ERROR })
}

#[derive(Serialize)]
struct ConstructRow {
    n: usize,
    gap: f64,
    lower_bound: f64,
    lambda2: f64,
    running_max: f64,
    lambda2_p_prime: f64,
}

fn construct(a: &ConstructArgs, out: &mut dyn Write) -> Result<i32> {
    let s1 = a.s1.clone().unwrap_or_else(|| asymptotic::default_s1(&a.px1));
    let rows: Vec<ConstructRow> = asymptotic::verify_theorem3(&a.px1, &s1, &a.pu, a.n_max)?
        .into_iter()
        .map(|r| ConstructRow {
            n: r.n,
            gap: r.certificate.gap,
            lower_bound: r.lower_bound,
            lambda2: r.lambda2,
            running_max: r.running_max,
            lambda2_p_prime: r.certificate.lambda2_p_prime,
        })
        .collect();
    match a.format {
        Format::Text => {
            writeln!(out, "{:>3} {:>10} {:>8} {:>8} {:>8}", "n", "gap", "lower", "lambda2", "max")?;
            for r in &rows {
                writeln!(
                    out,
                    "{:>3} {:>10.3e} {:>8.4} {:>8.4} {:>8.4}",
                    r.n, r.gap, r.lower_bound, r.lambda2, r.running_max
                )?;
            }
        }
        Format::Csv => {
            writeln!(out, "n,gap,lower_bound,lambda2,running_max,lambda2_p_prime")?;
            for r in &rows {
                writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    r.n, r.gap, r.lower_bound, r.lambda2, r.running_max, r.lambda2_p_prime
                )?;
            }
        }
        Format::Json => write_json(out, &rows)?,
    }
    Ok(EXIT_OK)
}
