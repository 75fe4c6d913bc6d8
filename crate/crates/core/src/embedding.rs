//! The kernel decomposition of `f(ξ1) - f(ξ2)` and the end-to-end checks
//! of the Sobolev and Hölder embeddings.
//!
//! Pairings are real-space quadratures with the jump-aligned rule; the
//! Plancherel-side evaluations exist as an independent second route.

use std::collections::BTreeMap;

use num_complex::Complex;
use rayon::prelude::*;

use crate::conventions::{
    forward_transform, inner_product, inverse_transform, spectral_integral, Grid, Jump, JumpTerm,
    SampledFunction, SpectralWeight, SpectrumFunction,
};
use crate::error::{Error, Result};
use crate::kernels::{e1_spectrum, e2_spectrum, sample_e1, sample_e2, KernelParams};
use crate::norms::{
    holder_norm, holder_seminorm_detailed, hs_norm, linf_norm, real_tol, HolderExponent, SobolevOrder,
};
use crate::report::{EmbeddingReport, Rule, VerificationReport};
use crate::scalar::{from_usize, lit, to_f64, Real};
use crate::special::gamma;
use crate::testfunctions;

/// `f(ξ1) - f(ξ2)` split as in the kernel representation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecompositionResult<T> {
    /// `∫ E1 f - ∫ E2 f`.
    pub boundary_diff: T,
    pub i1: T,
    pub i2: T,
    /// `boundary_diff + i1 + i2`.
    pub reconstructed_diff: T,
    /// `f(ξ1) - f(ξ2)` read off the samples.
    pub direct_diff: T,
    /// Snapped kernel parameters.
    pub params: KernelParams<T>,
}

impl<T: Real> DecompositionResult<T> {
    pub fn residual(&self) -> T {
        (self.reconstructed_diff - self.direct_diff).abs()
    }
}

fn real_pairing<T: Real>(a: &SampledFunction<T>, b: &SampledFunction<T>) -> Result<T> {
    if a.grid() != b.grid() {
        return Err(Error::GridMismatch);
    }
    if !b.is_real(real_tol()) {
        return Err(Error::ComplexInput);
    }
    Ok(inner_product(a, b)?.re)
}

/// `∫_{-∞}^{ξ1} e^{ξ-ξ1} (f + f') dξ`, with `ξ1` snapped to the lattice.
pub fn reconstruct_value<T: Real>(f: &SampledFunction<T>, f_prime: &SampledFunction<T>, xi1: T) -> Result<T> {
    let grid = f.grid();
    if f_prime.grid() != grid {
        return Err(Error::GridMismatch);
    }
    if !grid.is_interior(xi1) {
        return Err(Error::OutsideInterior(to_f64(xi1)));
    }
    let (i, x) = grid.snap(xi1);
    let one = T::one();
    let kernel = SampledFunction::from_fn(*grid, |t| if t <= x { (t - x).exp() } else { T::zero() })?
        .with_jumps(vec![Jump::real(i, one, T::zero(), one, T::zero())])?;
    Ok(real_pairing(&kernel, f)? + real_pairing(&kernel, f_prime)?)
}

/// `I1 = ∫ E1 f' dξ`.
pub fn compute_i1<T: Real>(f_prime: &SampledFunction<T>, p: &KernelParams<T>) -> Result<T> {
    real_pairing(&sample_e1(p, f_prime.grid())?.function, f_prime)
}

/// `I2 = -∫ E2 f' dξ`.
pub fn compute_i2<T: Real>(f_prime: &SampledFunction<T>, p: &KernelParams<T>) -> Result<T> {
    Ok(-real_pairing(&sample_e2(p, f_prime.grid())?.function, f_prime)?)
}

pub fn difference_decomposition<T: Real>(
    f: &SampledFunction<T>,
    f_prime: &SampledFunction<T>,
    p: &KernelParams<T>,
) -> Result<DecompositionResult<T>> {
    let grid = f.grid();
    if f_prime.grid() != grid {
        return Err(Error::GridMismatch);
    }
    let e1 = sample_e1(p, grid)?;
    let e2 = sample_e2(p, grid)?;
    let (_, j1, j2) = p.snap(grid)?;
    let boundary_diff = real_pairing(&e1.function, f)? - real_pairing(&e2.function, f)?;
    let i1 = real_pairing(&e1.function, f_prime)?;
    let i2 = -real_pairing(&e2.function, f_prime)?;
    Ok(DecompositionResult {
        boundary_diff,
        i1,
        i2,
        reconstructed_diff: boundary_diff + i1 + i2,
        direct_diff: f.value(j1).re - f.value(j2).re,
        params: e1.params,
    })
}

/// Spectrum of `f'` as `ik F(f)`; recorded kinks of `f` become jumps of `f'`.
///
/// Fails with [`Error::Divergent`] if `f` itself jumps (then `f'` has a
/// point mass).
pub fn derivative_spectrum<T: Real>(f: &SampledFunction<T>) -> Result<SpectrumFunction<T>> {
    let spec = forward_transform(f, &f.grid().dual())?;
    let scale = linf_norm(f).max(T::min_positive_value());
    let mut jumps = Vec::with_capacity(spec.jumps().len());
    for j in spec.jumps() {
        if j.value_jump.norm() > real_tol::<T>() * scale {
            return Err(Error::Divergent("f jumps, so f' is not a function".into()));
        }
        let zero = Complex::new(T::zero(), T::zero());
        jumps.push(JumpTerm { position: j.position, value_jump: j.slope_jump, slope_jump: zero });
    }
    let grid = *spec.grid();
    let values = grid.points().zip(spec.values()).map(|(k, &v)| v * Complex::new(T::zero(), k)).collect();
    SpectrumFunction::new(grid, values, jumps)
}

/// `f'` by spectral differentiation: `ik F(f)`, inverted, real part.
pub fn spectral_derivative<T: Real>(f: &SampledFunction<T>) -> Result<SampledFunction<T>> {
    if !f.jumps().is_empty() {
        return Err(Error::NoDerivative("function with recorded jumps or kinks".into()));
    }
    let spec = derivative_spectrum(f)?;
    let d = inverse_transform(&spec, f.grid())?;
    SampledFunction::from_real(*f.grid(), d.real_values())
}

/// `(I1, I2)` as `2π ∫ F(f') conj F(E) dk` with the exact kernel spectra.
pub fn pairings_via_plancherel<T: Real>(f_prime: &SampledFunction<T>, p: &KernelParams<T>) -> Result<(T, T)> {
    let grid = f_prime.grid();
    let (q, _, _) = p.snap(grid)?;
    let freq = grid.dual();
    let fp = forward_transform(f_prime, &freq)?;
    let two_pi = T::PI() + T::PI();
    let one = SpectralWeight::One;
    let i1 = spectral_integral(&fp, &e1_spectrum(&q, &freq)?, one)?.value.re * two_pi;
    let i2 = -spectral_integral(&fp, &e2_spectrum(&q, &freq)?, one)?.value.re * two_pi;
    Ok((i1, i2))
}

fn embedding_order<T: Real>(s: SobolevOrder<T>) -> Result<T> {
    SobolevOrder::embedding(s.value()).map(|o| o.value())
}

/// Checks `|I1| ≤ 2π ‖f'‖_{H^{s-1}} (∫ (1+k²)^{1-s} |F(E1)|² dk)^{1/2}`.
///
/// Both sides are spectral: `f'` enters as `ik F(f)` and `E1` through its
/// exact spectrum. With the `2π`-weighted norm the sharp Cauchy–Schwarz
/// right side is smaller by `√(2π)`; it is recorded as `sharp_rhs`.
pub fn cauchy_schwarz_bound_check<T: Real>(
    f: &SampledFunction<T>,
    p: &KernelParams<T>,
    s: SobolevOrder<T>,
    slack: f64,
) -> Result<VerificationReport> {
    let s = embedding_order(s)?;
    let grid = f.grid();
    let (q, _, _) = p.snap(grid)?;
    let two_pi = T::PI() + T::PI();
    let fp = derivative_spectrum(f)?;
    let e1 = e1_spectrum(&q, &grid.dual())?;
    let lhs = spectral_integral(&fp, &e1, SpectralWeight::One)?.value.norm() * two_pi;
    let fp_norm = (spectral_integral(&fp, &fp, SpectralWeight::Sobolev(s - T::one()))?.value.re * two_pi)
        .max(T::zero())
        .sqrt();
    let kernel = spectral_integral(&e1, &e1, SpectralWeight::Sobolev(T::one() - s))?.value.re.max(T::zero()).sqrt();
    let rhs = two_pi * fp_norm * kernel;
    let case = format!("xi1={},xi2={},s={}", to_f64(q.xi1()), to_f64(q.xi2()), to_f64(s));
    Ok(VerificationReport::new("cauchy-schwarz", case, lhs, rhs, slack, Rule::UpperBound, grid)
        .with_detail("xi1", to_f64(q.xi1()))
        .with_detail("xi2", to_f64(q.xi2()))
        .with_detail("s", to_f64(s))
        .with_detail("sharp_rhs", to_f64(rhs / two_pi.sqrt())))
}

/// `(∫ (1+k²)^{-s} dk / 2π)^{1/2} = (Γ(s-1/2) / (2√π Γ(s)))^{1/2}`, the
/// constant in `‖f‖_{L∞} ≤ C ‖f‖_{H^s}`.
pub fn sobolev_constant<T: Real>(s: SobolevOrder<T>) -> Result<T> {
    let s = s.value();
    if !(s > lit(0.5)) {
        return Err(Error::OutOfRange { name: "s", value: to_f64(s), range: "(1/2, inf)" });
    }
    Ok((gamma(s - lit(0.5)) / (lit::<T>(2.0) * T::PI().sqrt() * gamma(s))).sqrt())
}

/// `‖f‖_{L∞} / ‖f‖_{H^s}`; zero for the zero function.
pub fn sobolev_embedding_ratio<T: Real>(f: &SampledFunction<T>, s: SobolevOrder<T>) -> Result<T> {
    if !(s.value() > lit(0.5)) {
        return Err(Error::OutOfRange { name: "s", value: to_f64(s.value()), range: "(1/2, inf)" });
    }
    let norm = hs_norm(f, s)?;
    if norm == T::zero() {
        return Ok(T::zero());
    }
    Ok(linf_norm(f) / norm)
}

/// `[f]_{s-1/2}` over gaps `≤ 1`, divided by `‖f‖_{H^s}`.
pub fn theorem_ratio<T: Real>(function_id: &str, f: &SampledFunction<T>, s: SobolevOrder<T>) -> Result<EmbeddingReport> {
    let sv = embedding_order(s)?;
    let holder = holder_seminorm_detailed(f, HolderExponent::new(sv - lit(0.5))?, T::one())?;
    let norm = hs_norm(f, s)?;
    let ratio = if norm == T::zero() { T::zero() } else { holder.value / norm };
    let report = EmbeddingReport {
        function_id: function_id.to_string(),
        s: to_f64(sv),
        holder_quotient_sup: to_f64(holder.value),
        hs_norm_value: to_f64(norm),
        ratio: to_f64(ratio),
        argmax_gap: to_f64(holder.argmax_gap),
        gap_grid: holder.gap_grid.iter().map(|&g| to_f64(g)).collect(),
        half_width: to_f64(f.grid().half_width()),
        samples: f.grid().len(),
    };
    if !(report.ratio.is_finite() && report.holder_quotient_sup.is_finite() && report.hs_norm_value.is_finite()) {
        return Err(Error::Divergent(format!("non-finite embedding ratio for {function_id}")));
    }
    Ok(report)
}

/// `max |f(ξ_i) - f(ξ_j)| |ξ_i - ξ_j|^{-γ}` over lattice pairs with gap `> 1`.
pub fn far_gap_sup<T: Real>(f: &SampledFunction<T>, gamma: HolderExponent<T>) -> Result<T> {
    if !f.is_real(real_tol()) {
        return Err(Error::ComplexInput);
    }
    let v = f.real_values();
    let h = f.grid().spacing();
    let first = (T::one() / h).floor().to_usize().unwrap_or(0) + 1;
    let g = gamma.value();
    Ok((first..v.len())
        .into_par_iter()
        .map(|m| {
            let d = v.windows(m + 1).map(|w| (w[m] - w[0]).abs()).fold(T::zero(), T::max);
            d / (from_usize::<T>(m) * h).powf(g)
        })
        .reduce(T::zero, T::max))
}

/// Corollary check: the gap `> 1` part of the Hölder quotient is at most
/// `2 ‖f‖_{L∞}`. The norm ratio `‖f‖_{C^{0,s-1/2}} / ‖f‖_{H^s}` is recorded
/// as `norm_ratio`.
pub fn corollary_check<T: Real>(f: &SampledFunction<T>, s: SobolevOrder<T>, slack: f64) -> Result<VerificationReport> {
    let sv = embedding_order(s)?;
    let gamma = HolderExponent::new(sv - lit(0.5))?;
    let far = far_gap_sup(f, gamma)?;
    let linf = linf_norm(f);
    let norm = hs_norm(f, s)?;
    let holder = holder_norm(f, gamma)?;
    let ratio = if norm == T::zero() { T::zero() } else { holder / norm };
    let case = format!("s={}", to_f64(sv));
    Ok(VerificationReport::new("corollary", case, far, linf + linf, slack, Rule::UpperBound, f.grid())
        .with_detail("s", to_f64(sv))
        .with_detail("holder_norm", to_f64(holder))
        .with_detail("hs_norm", to_f64(norm))
        .with_detail("norm_ratio", to_f64(ratio)))
}

/// One [`EmbeddingReport`] per `(function, s)`, sorted by id then `s`.
pub fn constant_sweep<T: Real>(
    catalog: &[&str],
    s_grid: &[SobolevOrder<T>],
    grid: &Grid<T>,
) -> Result<Vec<EmbeddingReport>> {
    for &s in s_grid {
        embedding_order(s)?;
    }
    let entries = catalog.iter().map(|id| testfunctions::get(id)).collect::<Result<Vec<_>>>()?;
    let samples = entries
        .par_iter()
        .map(|e| e.sample(grid).map(|f| (e.id(), f)))
        .collect::<Result<Vec<_>>>()?;
    let jobs: Vec<_> = samples.iter().flat_map(|(id, f)| s_grid.iter().map(move |&s| (*id, f, s))).collect();
    let mut out = jobs
        .into_par_iter()
        .map(|(id, f, s)| theorem_ratio(id, f, s))
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| a.function_id.cmp(&b.function_id).then(a.s.total_cmp(&b.s)));
    Ok(out)
}

/// For each function, the `s` at which its sweep ratio is largest.
pub fn max_ratio_order(reports: &[EmbeddingReport]) -> BTreeMap<String, f64> {
    let mut best: BTreeMap<String, (f64, f64)> = BTreeMap::new();
    for r in reports {
        let e = best.entry(r.function_id.clone()).or_insert((r.s, r.ratio));
        if r.ratio > e.1 {
            *e = (r.s, r.ratio);
        }
    }
    best.into_iter().map(|(k, (s, _))| (k, s)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::tanh_sinh;
    use crate::testfunctions::get;

    fn grid() -> Grid<f64> {
        Grid::default_physical()
    }

    fn pair(id: &str) -> (SampledFunction<f64>, SampledFunction<f64>) {
        let e = get(id).unwrap();
        (e.sample(&grid()).unwrap(), e.sample_derivative(&grid()).unwrap())
    }

    fn params(a: f64, b: f64) -> KernelParams<f64> {
        KernelParams::new(a, b).unwrap()
    }

    #[test]
    fn reconstruction_of_point_values() {
        let (f, fp) = pair("gaussian");
        assert!((reconstruct_value(&f, &fp, 0.0).unwrap() - 1.0).abs() < 1e-6);
        assert!(reconstruct_value(&f, &fp, -30.0).unwrap().abs() < 1e-6);
        assert!(matches!(reconstruct_value(&f, &fp, 45.0), Err(Error::OutsideInterior(_))));
        let (b, bp) = pair("bump");
        for x in [-0.9, -0.4, 0.0, 0.3, 0.77] {
            let (j, _) = grid().snap(x);
            assert!((reconstruct_value(&b, &bp, x).unwrap() - b.value(j).re).abs() < 1e-6, "{x}");
        }
    }

    #[test]
    fn pairings_match_plancherel_side() {
        let (_, fp) = pair("gaussian");
        let p = params(0.0, 0.5);
        let (a1, a2) = pairings_via_plancherel(&fp, &p).unwrap();
        assert!((compute_i1(&fp, &p).unwrap() - a1).abs() < 1e-6);
        assert!((compute_i2(&fp, &p).unwrap() - a2).abs() < 1e-6);
        let d = params(0.3, 0.3);
        assert_eq!(compute_i1(&fp, &d).unwrap(), 0.0);
        assert_eq!(compute_i2(&fp, &d).unwrap(), 0.0);
    }

    #[test]
    fn decomposition_telescopes() {
        for (id, a, b) in [("gaussian", 0.0, 0.5), ("modulated-gaussian", -1.0, -0.2)] {
            let (f, fp) = pair(id);
            let r = difference_decomposition(&f, &fp, &params(a, b)).unwrap();
            assert!(r.residual() < 1e-6, "{id}: {r:?}");
            assert!(r.direct_diff.abs() <= r.boundary_diff.abs() + r.i1.abs() + r.i2.abs() + 1e-15);
        }
        let (f, fp) = pair("gaussian");
        let r = difference_decomposition(&f, &fp, &params(0.2, 0.2)).unwrap();
        assert_eq!((r.boundary_diff, r.i1, r.i2, r.direct_diff), (0.0, 0.0, 0.0, 0.0));
    }

    #[test]
    fn cauchy_schwarz_chain_holds() {
        let s = |v| SobolevOrder::new(v).unwrap();
        let (f, _) = pair("gaussian");
        let r = cauchy_schwarz_bound_check(&f, &params(0.0, 0.5), s(0.75), 1e-9).unwrap();
        assert!(r.passed && r.lhs > 0.0, "{r:?}");
        assert!(r.lhs <= r.details["sharp_rhs"] * (1.0 + 1e-12));
        let z = SampledFunction::zeros(grid());
        let r = cauchy_schwarz_bound_check(&z, &params(0.0, 0.5), s(0.75), 1e-9).unwrap();
        assert!(r.passed && r.lhs == 0.0 && r.rhs == 0.0);
        let (b, _) = pair("bump");
        assert!(cauchy_schwarz_bound_check(&b, &params(1.0, 1.8), s(0.6), 1e-9).unwrap().passed);
        let e = get("e1:xi1=0,xi2=1").unwrap().sample(&grid()).unwrap();
        assert!(matches!(cauchy_schwarz_bound_check(&e, &params(0.0, 0.5), s(0.6), 1e-9), Err(Error::Divergent(_))));
    }

    fn sobolev_constant_oracle(s: f64) -> f64 {
        // k = tan θ: ∫ (1+k²)^{-s} dk = ∫_{-π/2}^{π/2} cos^{2s-2} θ dθ
        let h = std::f64::consts::FRAC_PI_2;
        let v = tanh_sinh(|_, a: f64, b: f64| a.min(b).sin().powf(2.0 * s - 2.0), -h, h, 1e-13).unwrap();
        (v / (2.0 * std::f64::consts::PI)).sqrt()
    }

    #[test]
    fn sobolev_ratio_below_constant() {
        for s in [0.55, 0.75, 1.5] {
            let c = sobolev_constant(SobolevOrder::new(s).unwrap()).unwrap();
            assert!((c - sobolev_constant_oracle(s)).abs() < 1e-9 * c, "{s}");
        }
        let s = SobolevOrder::new(0.75).unwrap();
        let (f, _) = pair("gaussian");
        let r = sobolev_embedding_ratio(&f, s).unwrap();
        assert!(r > 0.0 && r <= sobolev_constant(s).unwrap());
        assert_eq!(sobolev_embedding_ratio(&SampledFunction::zeros(grid()), s).unwrap(), 0.0);
        assert!(sobolev_embedding_ratio(&f, SobolevOrder::new(0.5).unwrap()).is_err());
    }

    #[test]
    fn theorem_ratio_is_homogeneous() {
        let s = SobolevOrder::new(0.75).unwrap();
        let (f, _) = pair("modulated-gaussian");
        let a = theorem_ratio("m", &f, s).unwrap();
        let b = theorem_ratio("m", &f.scale(3.0), s).unwrap();
        let c = theorem_ratio("m", &f.scale(-0.01), s).unwrap();
        assert!((a.ratio - b.ratio).abs() <= 1e-12 * a.ratio);
        assert!((a.ratio - c.ratio).abs() <= 1e-12 * a.ratio);
        assert!(a.argmax_gap > 0.0 && a.argmax_gap <= 1.0);
        assert!(theorem_ratio("m", &f, SobolevOrder::new(0.3).unwrap()).is_err());
        assert_eq!(theorem_ratio("z", &SampledFunction::zeros(grid()), s).unwrap().ratio, 0.0);
    }

    #[test]
    fn corollary_far_gaps_bounded() {
        let s = SobolevOrder::new(0.75).unwrap();
        for id in ["gaussian", "hat"] {
            let f = get(id).unwrap().sample(&grid()).unwrap();
            let r = corollary_check(&f, s, 1e-9).unwrap();
            assert!(r.passed && r.details["norm_ratio"].is_finite(), "{r:?}");
        }
        let r = corollary_check(&SampledFunction::zeros(grid()), s, 1e-9).unwrap();
        assert!(r.passed && r.details["norm_ratio"] == 0.0);
    }

    #[test]
    fn far_gap_sup_matches_brute_force() {
        let g = Grid::new(3.0, 512).unwrap();
        let f = SampledFunction::from_fn(g, |x: f64| (2.0 * x).sin() * (-x * x).exp()).unwrap();
        let v = f.real_values();
        let gamma = HolderExponent::new(0.3).unwrap();
        let mut want = 0.0_f64;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                let d = g.point(j) - g.point(i);
                if d > 1.0 + 1e-12 {
                    want = want.max((v[j] - v[i]).abs() / d.powf(0.3));
                }
            }
        }
        assert!((far_gap_sup(&f, gamma).unwrap() - want).abs() < 1e-14);
    }

    #[test]
    fn sweep_singleton_matches_theorem_ratio() {
        let s = SobolevOrder::new(0.6).unwrap();
        let out = constant_sweep(&["gaussian"], &[s], &grid()).unwrap();
        let (f, _) = pair("gaussian");
        assert_eq!(out, vec![theorem_ratio("gaussian", &f, s).unwrap()]);
        assert!(constant_sweep(&["nosuch"], &[s], &grid()).is_err());
    }

    #[test]
    fn spectral_derivative_of_gaussian() {
        let (f, fp) = pair("gaussian");
        let d = spectral_derivative(&f).unwrap();
        let err = d.values().iter().zip(fp.values()).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        assert!(err < 1e-10, "{err}");
        let hat = get("hat").unwrap().sample(&grid()).unwrap();
        assert!(spectral_derivative(&hat).is_err());
    }
}
