//! `fracsob`: norms, verification campaigns and constant sweeps.
//!
//! Exit codes: 0 success, 2 usage error, 3 failed verification.

mod config;
mod output;
mod suites;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use fracsob_core::embedding::{constant_sweep, max_ratio_order};
use fracsob_core::norms::{
    gagliardo_seminorm, holder_seminorm, hs_norm_estimate, l2_norm, linf_norm, spectral_sigma_seminorm,
    HolderExponent, SigmaOrder, SobolevOrder,
};
use fracsob_core::testfunctions::{default_catalog, get};
use serde_json::{json, Map};

use config::{Format, RunConfig, GRID_ENV};
use output::{base_meta, emit, render, NormRecord};
use suites::{Target, VerifyArgs};

/// Invalid arguments; maps to exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl fmt::Display for UsageError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

/// A verification ran but did not pass; maps to exit code 3.
#[derive(Debug)]
struct CheckFailure(String);

impl fmt::Display for CheckFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for CheckFailure {}

#[derive(Parser)]
#[command(name = "fracsob", version, about = "Fractional Sobolev norms and Hölder embedding checks")]
struct Cli {
    /// Grid as "L,N" (N a power of two in [2^10, 2^20]); overrides FRACSOB_GRID.
    #[arg(long, global = true)]
    grid: Option<String>,
    /// Tolerance override "key=value"; repeatable.
    #[arg(long = "tol", global = true)]
    tol: Vec<String>,
    /// Output file, written atomically; stdout if absent.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum NormKind {
    Hs,
    L2,
    Linf,
    Gagliardo,
    SpectralSigma,
    Holder,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one norm of one catalog function.
    Norm {
        function: String,
        #[arg(long, value_enum)]
        kind: NormKind,
        /// Sobolev order (hs).
        #[arg(long)]
        s: Option<f64>,
        /// Fractional order in (0, 1/2) (gagliardo, spectral-sigma).
        #[arg(long)]
        sigma: Option<f64>,
        /// Hölder exponent in (0, 1] (holder).
        #[arg(long)]
        gamma: Option<f64>,
        /// Largest gap in the Hölder quotient (holder); unrestricted if absent.
        #[arg(long)]
        max_gap: Option<f64>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        target: Target,
        /// Comma-separated σ values.
        #[arg(long, value_delimiter = ',')]
        sigma: Option<Vec<f64>>,
        /// Comma-separated Sobolev orders in (1/2, 1).
        #[arg(long, value_delimiter = ',')]
        s: Option<Vec<f64>>,
        /// Number of log-spaced gaps (lemma1, lemma2).
        #[arg(long, default_value_t = 16)]
        gaps: usize,
        /// Number of (ξ1, ξ2) pairs (reconstruction, cauchy-schwarz).
        #[arg(long)]
        pairs: Option<usize>,
        /// Comma-separated catalog ids.
        #[arg(long, value_delimiter = ',')]
        catalog: Option<Vec<String>>,
    },
    /// Hölder-to-Sobolev ratios over catalog × s.
    Sweep {
        #[arg(long = "s-grid", value_delimiter = ',', default_values_t = [0.51, 0.55, 0.6, 0.75, 0.9])]
        s_grid: Vec<f64>,
        /// Comma-separated catalog ids; defaults to every entry in H^s for s > 1/2.
        #[arg(long, value_delimiter = ',')]
        catalog: Option<Vec<String>>,
    },
}

fn catalog_subset(ids: Option<Vec<String>>) -> Result<Option<Vec<String>>, UsageError> {
    match ids {
        None => Ok(None),
        Some(v) => {
            let v: Vec<String> = v.into_iter().map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
            if v.is_empty() {
                Err(UsageError("empty catalog subset".into()))
            } else {
                Ok(Some(v))
            }
        }
    }
}

fn usage(msg: impl Into<String>) -> anyhow::Error {
    UsageError(msg.into()).into()
}

fn exit_code(err: &anyhow::Error) -> u8 {
    if err.downcast_ref::<UsageError>().is_some() {
        return 2;
    }
    if err.downcast_ref::<CheckFailure>().is_some() {
        return 3;
    }
    match err.downcast_ref::<fracsob_core::Error>() {
        Some(fracsob_core::Error::Quadrature(_)) => 3,
        Some(_) => 2,
        None => 3,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("fracsob: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<()> {
    let env = std::env::var(GRID_ENV).ok();
    let cfg = RunConfig::resolve(cli.grid.as_deref(), env.as_deref(), &cli.tol, cli.out, cli.format)?;
    match cli.command {
        Command::Norm { function, kind, s, sigma, gamma, max_gap } => {
            cmd_norm(&cfg, &function, kind, s, sigma, gamma, max_gap)
        }
        Command::Verify { target, sigma, s, gaps, pairs, catalog } => {
            let args = VerifyArgs { sigma, s, gaps, pairs, catalog: catalog_subset(catalog)? };
            cmd_verify(&cfg, target, &args)
        }
        Command::Sweep { s_grid, catalog } => cmd_sweep(&cfg, &s_grid, catalog_subset(catalog)?),
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_norm(
    cfg: &RunConfig,
    function: &str,
    kind: NormKind,
    s: Option<f64>,
    sigma: Option<f64>,
    gamma: Option<f64>,
    max_gap: Option<f64>,
) -> anyhow::Result<()> {
    let wanted: &[&str] = match kind {
        NormKind::Hs => &["s"],
        NormKind::L2 | NormKind::Linf => &[],
        NormKind::Gagliardo | NormKind::SpectralSigma => &["sigma"],
        NormKind::Holder => &["gamma", "max-gap"],
    };
    for (name, given) in [("s", s.is_some()), ("sigma", sigma.is_some()), ("gamma", gamma.is_some()), ("max-gap", max_gap.is_some())] {
        if given && !wanted.contains(&name) {
            return Err(usage(format!("--{name} does not apply to this norm kind")));
        }
    }
    let need = |v: Option<f64>, name: &str| v.ok_or_else(|| usage(format!("this norm kind needs --{name}")));
    let entry = get(function)?;
    let f = entry.sample(&cfg.grid)?;
    let mut extra = Map::new();
    let mut warning = false;
    let (value, order) = match kind {
        NormKind::Hs => {
            let s = need(s, "s")?;
            let est = hs_norm_estimate(&f, SobolevOrder::new(s)?)?;
            warning = est.edge_warning;
            extra.insert("edge_warning".into(), json!(est.edge_warning));
            (est.value, Some(("s", s)))
        }
        NormKind::L2 => (l2_norm(&f), None),
        NormKind::Linf => (linf_norm(&f), None),
        NormKind::Gagliardo => {
            let v = need(sigma, "sigma")?;
            (gagliardo_seminorm(&f, SigmaOrder::new(v)?)?, Some(("sigma", v)))
        }
        NormKind::SpectralSigma => {
            let v = need(sigma, "sigma")?;
            (spectral_sigma_seminorm(&f, SigmaOrder::new(v)?)?, Some(("sigma", v)))
        }
        NormKind::Holder => {
            let g = need(gamma, "gamma")?;
            let gap = max_gap.unwrap_or(f64::INFINITY);
            if let Some(m) = max_gap {
                extra.insert("max_gap".into(), json!(m));
            }
            (holder_seminorm(&f, HolderExponent::new(g)?, gap)?, Some(("gamma", g)))
        }
    };
    if let Some((name, v)) = order {
        extra.insert(name.into(), json!(v));
    }
    let kind_name = kind.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    let record = NormRecord {
        function: function.to_string(),
        kind: kind_name,
        order,
        extra,
        value,
        half_width: cfg.grid.half_width(),
        samples: cfg.grid.len(),
    };
    let meta = base_meta(cfg, "norm");
    emit(cfg, &render(cfg.format, meta, &[record])?)?;
    if warning {
        return Err(CheckFailure("spectrum has not decayed at the band edge; the norm is unreliable".into()).into());
    }
    Ok(())
}

fn cmd_verify(cfg: &RunConfig, target: Target, args: &VerifyArgs) -> anyhow::Result<()> {
    let suite = suites::run(target, args, cfg)?;
    let summary = suite.summary();
    let mut meta = base_meta(cfg, "verify");
    let target_name = target.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    meta.insert("target".into(), json!(target_name));
    meta.insert("summary".into(), json!(summary));
    meta.extend(suite.meta.clone());
    emit(cfg, &render(cfg.format, meta, &suite.records)?)?;
    if cfg.out.is_some() {
        println!("{summary}");
    } else {
        eprintln!("{summary}");
    }
    if suite.passed() < suite.records.len() {
        return Err(CheckFailure(format!("{target_name}: {summary}")).into());
    }
    Ok(())
}

fn cmd_sweep(cfg: &RunConfig, s_grid: &[f64], catalog: Option<Vec<String>>) -> anyhow::Result<()> {
    if s_grid.is_empty() {
        return Err(usage("empty s grid"));
    }
    let orders = s_grid.iter().map(|&s| SobolevOrder::embedding(s)).collect::<fracsob_core::Result<Vec<_>>>()?;
    let ids: Vec<String> = match catalog {
        Some(ids) => ids,
        None => default_catalog().into_iter().filter(|e| e.max_sobolev_order() > 0.5).map(|e| e.id().to_string()).collect(),
    };
    let refs: Vec<&str> = ids.iter().map(String::as_str).collect();
    let reports = constant_sweep(&refs, &orders, &cfg.grid).context("sweep")?;
    let mut meta = base_meta(cfg, "sweep");
    meta.insert("max_ratio_at_s".into(), json!(max_ratio_order(&reports)));
    emit(cfg, &render(cfg.format, meta, &reports)?)
}
