//! Verification targets. Each produces sorted [`VerificationReport`]s.

use clap::ValueEnum;
use fracsob_core::conventions::plancherel_check;
use fracsob_core::embedding::{
    cauchy_schwarz_bound_check, corollary_check, difference_decomposition, max_ratio_order, sobolev_constant,
    sobolev_embedding_ratio, theorem_ratio,
};
use fracsob_core::kernels::{e2_seminorm, lemma1_ratio, lemma2_ratio, KernelParams};
use fracsob_core::norms::{seminorm_identity_check, SigmaOrder, SobolevOrder};
use fracsob_core::testfunctions::{default_catalog, get, CatalogEntry, DerivativeSource};
use fracsob_core::{GridF64, Rule, SampledFunctionF64, VerificationReport};
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::config::RunConfig;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Plancherel,
    Identity,
    Lemma1,
    Lemma2,
    Reconstruction,
    CauchySchwarz,
    Theorem,
    Corollary,
    Sobolev,
}

#[derive(Debug, Clone)]
pub struct VerifyArgs {
    pub sigma: Option<Vec<f64>>,
    pub s: Option<Vec<f64>>,
    pub gaps: usize,
    pub pairs: Option<usize>,
    pub catalog: Option<Vec<String>>,
}

pub struct Suite {
    pub records: Vec<VerificationReport>,
    pub meta: Map<String, Value>,
}

impl Suite {
    pub fn passed(&self) -> usize {
        self.records.iter().filter(|r| r.passed).count()
    }

    /// `PASS k/k` or `FAIL j/k`, `j` counting passed records.
    pub fn summary(&self) -> String {
        let (p, n) = (self.passed(), self.records.len());
        format!("{} {p}/{n}", if p == n { "PASS" } else { "FAIL" })
    }
}

type Result<T> = anyhow::Result<T>;

/// Log-spaced values from `lo` to `hi` inclusive.
pub fn log_space(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![lo],
        _ => (0..n)
            .map(|i| if i + 1 == n { hi } else { lo * (hi / lo).powf(i as f64 / (n - 1) as f64) })
            .collect(),
    }
}

/// Deterministic pairs `(ξ1, gap)` with `ξ1 ∈ [-3, 3)` and `gap ∈ [10⁻³, 1)`,
/// from the plastic-number low-discrepancy sequence.
pub fn pair_sequence(n: usize) -> Vec<(f64, f64)> {
    const A1: f64 = 0.754_877_666_246_692_7;
    const A2: f64 = 0.569_840_290_998_053_2;
    (1..=n)
        .map(|i| {
            let (u, v) = ((i as f64 * A1).fract(), (i as f64 * A2).fract());
            (-3.0 + 6.0 * u, 1e-3 + (1.0 - 1e-3) * v)
        })
        .collect()
}

fn tagged(mut r: VerificationReport, prefix: &str) -> VerificationReport {
    r.case = if r.case.is_empty() { prefix.to_string() } else { format!("{prefix},{}", r.case) };
    r
}

/// Requested entries sorted by id.
fn entries(args: &VerifyArgs) -> Result<Vec<CatalogEntry>> {
    let mut es = match &args.catalog {
        None => default_catalog(),
        Some(ids) => ids.iter().map(|id| get(id)).collect::<fracsob_core::Result<_>>()?,
    };
    es.sort_by(|a, b| a.id().cmp(b.id()));
    es.dedup_by(|a, b| a.id() == b.id());
    Ok(es)
}

/// Drops entries outside every `H^s` with `s > 1/2`, recording why.
fn sobolev_members(all: Vec<CatalogEntry>, meta: &mut Map<String, Value>) -> Vec<CatalogEntry> {
    let mut skipped = Map::new();
    let kept = all
        .into_iter()
        .filter(|e| {
            if e.max_sobolev_order() <= 0.5 {
                skipped.insert(e.id().to_string(), json!("jump discontinuity: not in H^s for s > 1/2"));
                false
            } else {
                true
            }
        })
        .collect();
    if !skipped.is_empty() {
        meta.insert("skipped".into(), Value::Object(skipped));
    }
    kept
}

fn sample_all(es: &[CatalogEntry], grid: &GridF64) -> Result<Vec<(String, SampledFunctionF64)>> {
    es.par_iter()
        .map(|e| Ok((e.id().to_string(), e.sample(grid)?)))
        .collect()
}

fn sigmas(args: &VerifyArgs) -> Result<Vec<SigmaOrder<f64>>> {
    let v = args.sigma.clone().unwrap_or_else(|| vec![0.1, 0.25, 0.4]);
    Ok(v.into_iter().map(SigmaOrder::new).collect::<fracsob_core::Result<_>>()?)
}

fn orders(args: &VerifyArgs, default: &[f64]) -> Result<Vec<SobolevOrder<f64>>> {
    let v = args.s.clone().unwrap_or_else(|| default.to_vec());
    Ok(v.into_iter().map(SobolevOrder::embedding).collect::<fracsob_core::Result<_>>()?)
}

pub fn run(target: Target, args: &VerifyArgs, cfg: &RunConfig) -> Result<Suite> {
    let mut meta = Map::new();
    let mut records = match target {
        Target::Plancherel => plancherel(args, cfg)?,
        Target::Identity => identity(args, cfg)?,
        Target::Lemma1 => lemma(1, args, cfg)?,
        Target::Lemma2 => lemma(2, args, cfg)?,
        Target::Reconstruction => reconstruction(args, cfg, &mut meta)?,
        Target::CauchySchwarz => cauchy_schwarz(args, cfg, &mut meta)?,
        Target::Theorem => theorem(args, cfg, &mut meta)?,
        Target::Corollary => corollary(args, cfg, &mut meta)?,
        Target::Sobolev => sobolev(args, cfg, &mut meta)?,
    };
    // generation order is already (function, order, gap); keep it within a check
    records.sort_by(|a, b| a.check.cmp(&b.check));
    Ok(Suite { records, meta })
}

fn plancherel(args: &VerifyArgs, cfg: &RunConfig) -> Result<Vec<VerificationReport>> {
    let fs = sample_all(&entries(args)?, &cfg.grid)?;
    let tol = cfg.tolerances.get("plancherel");
    let jobs: Vec<(usize, usize)> = (0..fs.len()).flat_map(|i| (i..fs.len()).map(move |j| (i, j))).collect();
    jobs.par_iter()
        .map(|&(i, j)| {
            let (direct, spectral) = plancherel_check(&fs[i].1, &fs[j].1)?;
            let case = format!("f={},g={}", fs[i].0, fs[j].0);
            Ok(VerificationReport::new("plancherel", case, spectral, direct, tol, Rule::Absolute, &cfg.grid))
        })
        .collect()
}

fn identity(args: &VerifyArgs, cfg: &RunConfig) -> Result<Vec<VerificationReport>> {
    let es = entries(args)?;
    let sig = sigmas(args)?;
    let jobs: Vec<(&CatalogEntry, SigmaOrder<f64>)> = es.iter().flat_map(|e| sig.iter().map(move |&s| (e, s))).collect();
    let fs = sample_all(&es, &cfg.grid)?;
    jobs.par_iter()
        .map(|&(e, sigma)| {
            let key = if e.is_smooth() { "identity_smooth" } else { "identity_rough" };
            let f = &fs.iter().find(|(id, _)| id == e.id()).expect("sampled").1;
            let r = seminorm_identity_check(f, sigma, cfg.tolerances.get(key))?;
            Ok(tagged(r, &format!("function={}", e.id())))
        })
        .collect()
}

type RatioFn = fn(&KernelParams<f64>, SigmaOrder<f64>, &GridF64) -> fracsob_core::Result<f64>;

fn lemma(which: u8, args: &VerifyArgs, cfg: &RunConfig) -> Result<Vec<VerificationReport>> {
    let (name, ratio, gaps, starts): (&str, RatioFn, _, &[f64]) = match which {
        1 => ("lemma1", lemma1_ratio, log_space(1e-3, 10.0, args.gaps), &[-5.0, 0.0, 5.0]),
        _ => ("lemma2", lemma2_ratio, log_space(1e-3, 1.0, args.gaps), &[0.0]),
    };
    let fine = cfg.refined_grid();
    let drift = cfg.tolerances.get("drift");
    let mut out = Vec::new();
    for sigma in sigmas(args)? {
        let jobs: Vec<(f64, f64)> = starts.iter().flat_map(|&x| gaps.iter().map(move |&g| (x, g))).collect();
        let recs = jobs
            .par_iter()
            .map(|&(x, g)| {
                let p = KernelParams::new(x, x + g)?;
                let (a, b) = (ratio(&p, sigma, &cfg.grid)?, ratio(&p, sigma, &fine)?);
                let case = format!("sigma={},xi1={x},gap={g}", sigma.value());
                Ok(VerificationReport::new(name, case, a, b, drift, Rule::Ratio, &cfg.grid))
            })
            .collect::<Result<Vec<_>>>()?;
        let top = |v: &[VerificationReport], f: fn(&VerificationReport) -> f64| v.iter().map(f).fold(0.0, f64::max);
        let (env, env_fine) = (top(&recs, |r| r.lhs), top(&recs, |r| r.rhs));
        let case = format!("sigma={}", sigma.value());
        out.extend(recs);
        out.push(VerificationReport::new(&format!("{name}-envelope"), case.clone(), env, env_fine, drift, Rule::Ratio, &cfg.grid));
        if which == 2 {
            out.push(lemma2_slope(sigma, cfg)?.with_detail("sigma", sigma.value()));
        }
    }
    Ok(out)
}

/// Least-squares slope of `ln |E2|_σ` against `ln gap` on `[10⁻³, 10⁻¹]`.
fn lemma2_slope(sigma: SigmaOrder<f64>, cfg: &RunConfig) -> Result<VerificationReport> {
    let pts = log_space(1e-3, 1e-1, 16)
        .into_par_iter()
        .map(|g| Ok((g.ln(), e2_seminorm(&KernelParams::new(0.0, g)?, sigma, &cfg.grid)?.ln())))
        .collect::<Result<Vec<(f64, f64)>>>()?;
    let n = pts.len() as f64;
    let (mx, my) = (pts.iter().map(|p| p.0).sum::<f64>() / n, pts.iter().map(|p| p.1).sum::<f64>() / n);
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    let case = format!("sigma={}", sigma.value());
    let want = 0.5 - sigma.value();
    Ok(VerificationReport::new("lemma2-slope", case, sxy / sxx, want, cfg.tolerances.get("slope"), Rule::Difference, &cfg.grid))
}

fn smooth_entries(args: &VerifyArgs, meta: &mut Map<String, Value>) -> Result<Vec<CatalogEntry>> {
    let mut skipped = Map::new();
    let mut sources = Map::new();
    let mut kept = Vec::new();
    for e in entries(args)? {
        match e.derivative_source().filter(|_| e.is_smooth()) {
            Some(src) => {
                let name = if src == DerivativeSource::Analytic { "analytic" } else { "spectral" };
                sources.insert(e.id().to_string(), json!(name));
                kept.push(e);
            }
            None if e.derivative_source().is_some() => {
                skipped.insert(e.id().to_string(), json!("rough probe: f' is not in L^2 uniformly in the cutoff"));
            }
            None => {
                skipped.insert(e.id().to_string(), json!("no derivative"));
            }
        }
    }
    meta.insert("derivative_source".into(), Value::Object(sources));
    if !skipped.is_empty() {
        meta.insert("skipped".into(), Value::Object(skipped));
    }
    Ok(kept)
}

fn reconstruction(args: &VerifyArgs, cfg: &RunConfig, meta: &mut Map<String, Value>) -> Result<Vec<VerificationReport>> {
    let es = smooth_entries(args, meta)?;
    let pairs = pair_sequence(args.pairs.unwrap_or(50));
    let tol = cfg.tolerances.get("reconstruction");
    let mut out = Vec::new();
    for e in &es {
        let (f, fp) = (e.sample(&cfg.grid)?, e.sample_derivative(&cfg.grid)?);
        let recs = pairs
            .par_iter()
            .map(|&(x, g)| {
                let r = difference_decomposition(&f, &fp, &KernelParams::new(x, x + g)?)?;
                let (a, b) = (r.params.xi1(), r.params.xi2());
                let case = format!("function={},xi1={a},xi2={b}", e.id());
                Ok(VerificationReport::new("reconstruction", case, r.reconstructed_diff, r.direct_diff, tol, Rule::Absolute, &cfg.grid)
                    .with_detail("boundary_diff", r.boundary_diff)
                    .with_detail("i1", r.i1)
                    .with_detail("i2", r.i2))
            })
            .collect::<Result<Vec<_>>>()?;
        out.extend(recs);
    }
    Ok(out)
}

fn cauchy_schwarz(args: &VerifyArgs, cfg: &RunConfig, meta: &mut Map<String, Value>) -> Result<Vec<VerificationReport>> {
    let es = sobolev_members(entries(args)?, meta);
    let fs = sample_all(&es, &cfg.grid)?;
    let pairs = pair_sequence(args.pairs.unwrap_or(10));
    let ss = orders(args, &[0.6, 0.75, 0.9])?;
    let slack = cfg.tolerances.get("cauchy_schwarz_slack");
    let mut jobs = Vec::new();
    for f in &fs {
        for &s in &ss {
            jobs.extend(pairs.iter().map(|&p| (f, s, p)));
        }
    }
    jobs.par_iter()
        .map(|((id, f), s, (x, g))| {
            let r = cauchy_schwarz_bound_check(f, &KernelParams::new(*x, x + g)?, *s, slack)?;
            Ok(tagged(r, &format!("function={id}")))
        })
        .collect()
}

fn theorem(args: &VerifyArgs, cfg: &RunConfig, meta: &mut Map<String, Value>) -> Result<Vec<VerificationReport>> {
    let es = sobolev_members(entries(args)?, meta);
    let ss = orders(args, &[0.55, 0.6, 0.75, 0.9])?;
    let fine = cfg.refined_grid();
    let fs = sample_all(&es, &cfg.grid)?;
    let ff = sample_all(&es, &fine)?;
    let (drift, scale) = (cfg.tolerances.get("drift"), cfg.tolerances.get("scale"));
    let jobs: Vec<(usize, SobolevOrder<f64>)> = (0..fs.len()).flat_map(|i| ss.iter().map(move |&s| (i, s))).collect();
    let pieces = jobs
        .par_iter()
        .map(|&(i, s)| {
            let id = &fs[i].0;
            let a = theorem_ratio(id, &fs[i].1, s)?;
            let b = theorem_ratio(id, &ff[i].1, s)?;
            let c = theorem_ratio(id, &fs[i].1.scale(3.0), s)?;
            let case = format!("function={id},s={}", s.value());
            let refine = VerificationReport::new("theorem", case.clone(), a.ratio, b.ratio, drift, Rule::Ratio, &cfg.grid)
                .with_detail("holder_sup", a.holder_quotient_sup)
                .with_detail("hs_norm", a.hs_norm_value)
                .with_detail("argmax_gap", a.argmax_gap);
            let homog = VerificationReport::new("theorem-scale", case, c.ratio, a.ratio, scale, Rule::Ratio, &cfg.grid);
            Ok((refine, homog, a))
        })
        .collect::<Result<Vec<_>>>()?;
    // informational: where each function's ratio peaks over the s grid
    let sweep: Vec<_> = pieces.iter().map(|p| p.2.clone()).collect();
    let peaks = max_ratio_order(&sweep);
    meta.insert("max_ratio_at_s".into(), json!(peaks));
    Ok(pieces.into_iter().flat_map(|(a, b, _)| [a, b]).collect())
}

fn corollary(args: &VerifyArgs, cfg: &RunConfig, meta: &mut Map<String, Value>) -> Result<Vec<VerificationReport>> {
    let es = sobolev_members(entries(args)?, meta);
    let ss = orders(args, &[0.55, 0.75, 0.9])?;
    let fs = sample_all(&es, &cfg.grid)?;
    let slack = cfg.tolerances.get("corollary_slack");
    let jobs: Vec<_> = fs.iter().flat_map(|f| ss.iter().map(move |&s| (f, s))).collect();
    jobs.par_iter()
        .map(|((id, f), s)| Ok(tagged(corollary_check(f, *s, slack)?, &format!("function={id}"))))
        .collect()
}

fn sobolev(args: &VerifyArgs, cfg: &RunConfig, meta: &mut Map<String, Value>) -> Result<Vec<VerificationReport>> {
    let es = sobolev_members(entries(args)?, meta);
    let ss = orders(args, &[0.55, 0.75])?;
    let fs = sample_all(&es, &cfg.grid)?;
    let slack = cfg.tolerances.get("sobolev_slack");
    let mut out = Vec::new();
    for (id, f) in &fs {
        for &s in &ss {
            let ratio = sobolev_embedding_ratio(f, s)?;
            let bound = sobolev_constant(s)?;
            let case = format!("function={id},s={}", s.value());
            out.push(VerificationReport::new("sobolev", case, ratio, bound, slack, Rule::UpperBound, &cfg.grid));
        }
    }
    Ok(out)
}
