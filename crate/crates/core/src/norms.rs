//! Norms and seminorms of sampled functions.
//!
//! Spectral quantities go through [`forward_transform`] on the dual grid and
//! [`spectral_integral`]; the Gagliardo seminorm is computed in physical
//! space only, so the two sides of the seminorm identity share no
//! intermediate values.

use rayon::prelude::*;

use crate::conventions::{
    forward_transform, inner_product, spectral_integral, SampledFunction, SpectralWeight,
};
use crate::error::{check_range, Error, Result};
use crate::quad::{gauss_kronrod, power_trig_tail, tanh_sinh};
use crate::report::{Rule, VerificationReport};
use crate::scalar::{from_usize, lit, quad_tol, to_f64, Real};

/// Sobolev order `s`; any finite real.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct SobolevOrder<T>(T);

impl<T: Real> SobolevOrder<T> {
    pub fn new(s: T) -> Result<Self> {
        check_range("s", to_f64(s), s.is_finite(), "(-inf, inf)")?;
        Ok(SobolevOrder(s))
    }

    /// Order admissible for the embedding statements, `1/2 < s < 1`.
    pub fn embedding(s: T) -> Result<Self> {
        check_range("s", to_f64(s), s > lit(0.5) && s < T::one(), "(1/2, 1)")?;
        Ok(SobolevOrder(s))
    }

    pub fn value(self) -> T {
        self.0
    }
}

/// Seminorm order `σ ∈ (0, 1/2)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct SigmaOrder<T>(T);

impl<T: Real> SigmaOrder<T> {
    pub fn new(sigma: T) -> Result<Self> {
        check_range("sigma", to_f64(sigma), sigma > T::zero() && sigma < lit(0.5), "(0, 1/2)")?;
        Ok(SigmaOrder(sigma))
    }

    pub fn value(self) -> T {
        self.0
    }
}

/// Hölder exponent `γ ∈ (0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct HolderExponent<T>(T);

impl<T: Real> HolderExponent<T> {
    pub fn new(gamma: T) -> Result<Self> {
        check_range("gamma", to_f64(gamma), gamma > T::zero() && gamma <= T::one(), "(0, 1]")?;
        Ok(HolderExponent(gamma))
    }

    pub fn value(self) -> T {
        self.0
    }
}

pub(crate) fn real_tol<T: Real>() -> T {
    (T::epsilon() * lit(100.0)).max(lit(1e-9))
}

pub fn l2_norm<T: Real>(f: &SampledFunction<T>) -> T {
    match inner_product(f, f) {
        Ok(v) => v.re.max(T::zero()).sqrt(),
        Err(_) => T::nan(),
    }
}

/// Largest sample modulus.
pub fn linf_norm<T: Real>(f: &SampledFunction<T>) -> T {
    f.values().iter().map(|v| v.norm()).fold(T::zero(), T::max)
}

/// Weighted spectral integral with its truncation diagnostics.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormEstimate<T> {
    pub value: T,
    /// Analytic contribution beyond the band edge.
    pub tail: T,
    /// Integrand at the band edge relative to its peak.
    pub edge_ratio: T,
    /// Set when the spectrum has no jump model and has not decayed to
    /// `1e-12` of its peak at the band edge.
    pub edge_warning: bool,
}

fn weighted_estimate<T: Real>(
    f: &SampledFunction<T>,
    weight: SpectralWeight<T>,
    scale: T,
) -> Result<NormEstimate<T>> {
    let spec = forward_transform(f, &f.grid().dual())?;
    let integral = spectral_integral(&spec, &spec, weight)?;
    let edge_warning = spec.jumps().is_empty() && integral.edge_ratio > lit(1e-12);
    Ok(NormEstimate {
        value: (integral.value.re * scale).max(T::zero()).sqrt(),
        tail: integral.tail.re * scale,
        edge_ratio: integral.edge_ratio,
        edge_warning,
    })
}

/// `‖f‖_{H^s} = (2π ∫ (1+k²)^s |F f|² dk)^{1/2}` with diagnostics.
///
/// Fails with [`Error::Divergent`] when recorded jumps put `f` outside
/// `H^s` (value jumps need `s < 1/2`, derivative jumps `s < 3/2`).
pub fn hs_norm_estimate<T: Real>(f: &SampledFunction<T>, s: SobolevOrder<T>) -> Result<NormEstimate<T>> {
    weighted_estimate(f, SpectralWeight::Sobolev(s.value()), T::PI() + T::PI())
}

pub fn hs_norm<T: Real>(f: &SampledFunction<T>, s: SobolevOrder<T>) -> Result<T> {
    hs_norm_estimate(f, s).map(|e| e.value)
}

/// `(∫ |k|^{2σ} |F f|² dk)^{1/2}`.
pub fn spectral_sigma_seminorm<T: Real>(f: &SampledFunction<T>, sigma: SigmaOrder<T>) -> Result<T> {
    let two = lit::<T>(2.0);
    weighted_estimate(f, SpectralWeight::AbsPower(two * sigma.value()), T::one()).map(|e| e.value)
}

/// `C(σ)` together with the pieces of its split quadrature.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GagliardoConstant<T> {
    /// `C(σ) = (∫_ℝ (1 - cos ξ) |ξ|^{-1-2σ} dξ)^{-1}`
    pub value: T,
    /// `∫_ℝ (1 - cos ξ)|ξ|^{-1-2σ} dξ`
    pub integral: T,
    /// Contribution of `|ξ| > A`, evaluated semi-analytically.
    pub tail: T,
    /// A priori bound `A^{-2σ}/σ` on that contribution.
    pub tail_bound: T,
    pub cutoff: T,
}

/// Split quadrature: tanh–sinh on `(0, 1]`, Gauss–Kronrod over `(1, A]` in
/// period-sized panels, and the exact power/cosine tail beyond `A = 10⁴`.
pub fn gagliardo_constant_detailed<T: Real>(sigma: SigmaOrder<T>) -> Result<GagliardoConstant<T>> {
    let s = sigma.value();
    let two = lit::<T>(2.0);
    let p = -T::one() - two * s;
    let tol = quad_tol::<T>();
    // 1 - cos ξ = 2 sin²(ξ/2), no cancellation near 0
    let near = tanh_sinh(
        |x: T, _, _| {
            let h = (x * lit(0.5)).sin();
            two * h * h * x.powf(p)
        },
        T::zero(),
        T::one(),
        tol,
    )?;
    let cutoff = lit::<T>(1e4);
    let panel = two * T::PI();
    let mut mid = T::zero();
    let mut lo = T::one();
    while lo < cutoff {
        let hi = (lo + panel).min(cutoff);
        let scale = lo.powf(p);
        mid = mid + gauss_kronrod(|x: T| (T::one() - x.cos()) * x.powf(p), lo, hi, tol * scale)?;
        lo = hi;
    }
    let (cos_tail, _) = power_trig_tail(p, cutoff)?;
    let tail = cutoff.powf(-two * s) / (two * s) - cos_tail;
    let integral = two * (near + mid + tail);
    Ok(GagliardoConstant {
        value: integral.recip(),
        integral,
        tail: two * tail,
        tail_bound: cutoff.powf(-two * s) / s,
        cutoff,
    })
}

pub fn gagliardo_constant<T: Real>(sigma: SigmaOrder<T>) -> Result<T> {
    gagliardo_constant_detailed(sigma).map(|c| c.value)
}

/// `D(mh) = ∫ (f(ξ + mh) - f(ξ))² dξ` for `m = 0..=N`, by the jump-aware
/// trapezoid rule with `f = 0` off the grid.
fn difference_energy<T: Real>(f: &SampledFunction<T>) -> Vec<T> {
    let n = f.grid().len();
    let h = f.grid().spacing();
    let left: Vec<T> = f.left_limits().iter().map(|v| v.re).collect();
    let jumps: Vec<usize> = f.jumps().iter().map(|j| j.index).collect();
    // prefix sums of f² for the partial overlaps at both ends
    let mut prefix = vec![T::zero(); n + 1];
    for j in 0..n {
        prefix[j + 1] = prefix[j] + left[j] * left[j];
    }
    let one_sided = |i: isize| -> (T, T, T, T) {
        if i < 0 || i >= n as isize {
            let z = T::zero();
            return (z, z, z, z);
        }
        let (l, r, dl, dr) = f.one_sided(i as usize);
        (l.re, r.re, dl.re, dr.re)
    };
    let twelfth = h * h / lit(12.0);
    let half = lit::<T>(0.5);
    let mut out: Vec<T> = (1..n)
        .into_par_iter()
        .map(|m| {
            let mut acc = T::zero();
            for j in 0..n - m {
                let d = left[j + m] - left[j];
                acc = acc + d * d;
            }
            acc = acc + prefix[m] + (prefix[n] - prefix[n - m]);
            // swap left-limit terms for one-sided means at the nodes where
            // the shifted difference jumps, plus the kink correction
            let mut nodes: Vec<isize> = jumps
                .iter()
                .flat_map(|&c| [c as isize, c as isize - m as isize])
                .collect();
            nodes.sort_unstable();
            nodes.dedup();
            let mut fix = T::zero();
            let mut kink = T::zero();
            for &j in &nodes {
                let (al, ar, dal, dar) = one_sided(j + m as isize);
                let (bl, br, dbl, dbr) = one_sided(j);
                let gl = al - bl;
                let gr = ar - br;
                fix = fix + half * (gl * gl + gr * gr) - gl * gl;
                kink = kink + lit::<T>(2.0) * (gr * (dar - dbr) - gl * (dal - dbl));
            }
            (acc + fix) * h + kink * twelfth
        })
        .collect();
    out.insert(0, T::zero());
    out
}

/// Energy `S = ∫ f²`, so that `D(z) = 2S` once `z` exceeds the grid width.
fn energy<T: Real>(f: &SampledFunction<T>) -> T {
    let sq = l2_norm(f);
    sq * sq
}

/// `∫_{z0}^{z1} z^{-1-2σ} dz` and `∫_{z0}^{z1} z^{-2σ} dz` for
/// `z0 = m h`, `z1 = (m+1) h`, without cancellation.
fn panel_weights<T: Real>(m: usize, h: T, two_s: T) -> (T, T) {
    let z0 = from_usize::<T>(m) * h;
    let r = (T::one() / from_usize(m)).ln_1p();
    let w0 = -z0.powf(-two_s) * (-two_s * r).exp_m1() / two_s;
    let w1 = z0.powf(T::one() - two_s) * ((T::one() - two_s) * r).exp_m1() / (T::one() - two_s);
    (w0, w1)
}

/// `(C(σ)/4π) ∬ (f(ξ) - f(η))² |ξ - η|^{-1-2σ} dξ dη`, square-rooted.
///
/// The double integral is reduced to `2 ∫_0^∞ z^{-1-2σ} D(z) dz` with
/// `D(z) = ∫ (f(ξ+z) - f(ξ))² dξ` sampled at lattice lags. Between lags `D`
/// is linear and the weight is integrated exactly; on `[0, h]`, `D` is
/// modelled as `az + bz²`, which captures both the `O(z)` behaviour at
/// jumps and the `O(z²)` behaviour of smooth functions. Beyond the grid
/// width `D = 2‖f‖²` and the tail is closed analytically.
pub fn gagliardo_seminorm<T: Real>(f: &SampledFunction<T>, sigma: SigmaOrder<T>) -> Result<T> {
    if !f.is_real(real_tol()) {
        return Err(Error::ComplexInput);
    }
    let c = gagliardo_constant(sigma)?;
    let g = gagliardo_double_integral(f, sigma);
    Ok((c * g / (lit::<T>(4.0) * T::PI())).max(T::zero()).sqrt())
}

/// `∬ (f(ξ) - f(η))² |ξ - η|^{-1-2σ} dξ dη` for real `f`.
pub fn gagliardo_double_integral<T: Real>(f: &SampledFunction<T>, sigma: SigmaOrder<T>) -> T {
    let n = f.grid().len();
    let h = f.grid().spacing();
    let two = lit::<T>(2.0);
    let two_s = two * sigma.value();
    let mut d = difference_energy(f);
    let s_energy = energy(f);
    d.push(two * s_energy);
    // [0, h]: D ≈ a z + b z²
    let bh2 = (d[2] - two * d[1]) / two;
    let ah = d[1] - bh2;
    let mut total = h.powf(-two_s) * (ah / (T::one() - two_s) + bh2 / (two - two_s));
    // [mh, (m+1)h], m = 1..N-1: D linear on the panel
    let panels: T = (1..n)
        .into_par_iter()
        .map(|m| {
            let (w0, w1) = panel_weights(m, h, two_s);
            let z0 = from_usize::<T>(m) * h;
            d[m] * w0 + (d[m + 1] - d[m]) / h * (w1 - z0 * w0)
        })
        .collect::<Vec<T>>()
        .into_iter()
        .fold(T::zero(), |a, b| a + b);
    total = total + panels;
    // z > Nh: D = 2S
    let z = from_usize::<T>(n) * h;
    total = total + two * s_energy * z.powf(-two_s) / two_s;
    two * total
}

/// Spectral versus Gagliardo seminorm; passes when the ratio is within
/// `tolerance` of 1 (`0/0 = 1`).
pub fn seminorm_identity_check<T: Real>(
    f: &SampledFunction<T>,
    sigma: SigmaOrder<T>,
    tolerance: f64,
) -> Result<VerificationReport> {
    let spectral = spectral_sigma_seminorm(f, sigma)?;
    let gagliardo = gagliardo_seminorm(f, sigma)?;
    Ok(VerificationReport::new(
        "identity",
        format!("sigma={}", to_f64(sigma.value())),
        gagliardo,
        spectral,
        tolerance,
        Rule::Ratio,
        f.grid(),
    )
    .with_detail("sigma", to_f64(sigma.value())))
}

/// Supremum of the Hölder quotient and where it was found.
#[derive(Debug, Clone, PartialEq)]
pub struct HolderEstimate<T> {
    pub value: T,
    /// Lag (in `ξ` units) attaining the supremum; zero if no pair qualified.
    pub argmax_gap: T,
    /// Lags scanned on the coarse log-spaced pass.
    pub gap_grid: Vec<T>,
}

fn lag_quotient<T: Real>(v: &[T], m: usize, h: T, gamma: T) -> T {
    let mut best = T::zero();
    for j in 0..v.len() - m {
        best = best.max((v[j + m] - v[j]).abs());
    }
    best / (from_usize::<T>(m) * h).powf(gamma)
}

/// Sup of `|f(ξ_i) - f(ξ_j)| / |ξ_i - ξ_j|^γ` over `0 < |ξ_i - ξ_j| ≤ max_gap`.
///
/// 64 log-spaced lags in `[h, max_gap]` are scanned over all aligned pairs,
/// then every lag between the neighbours of the best coarse lag.
pub fn holder_seminorm_detailed<T: Real>(
    f: &SampledFunction<T>,
    gamma: HolderExponent<T>,
    max_gap: T,
) -> Result<HolderEstimate<T>> {
    if !(max_gap > T::zero()) {
        return Err(Error::OutOfRange { name: "max_gap", value: to_f64(max_gap), range: "(0, inf]" });
    }
    if !f.is_real(real_tol()) {
        return Err(Error::ComplexInput);
    }
    let n = f.grid().len();
    let h = f.grid().spacing();
    let g = gamma.value();
    let v = f.real_values();
    let lag_max = if max_gap.is_finite() {
        ((max_gap / h) * (T::one() + lit(1e-12))).floor().to_usize().unwrap_or(0).min(n - 1)
    } else {
        n - 1
    };
    if lag_max == 0 {
        return Ok(HolderEstimate { value: T::zero(), argmax_gap: T::zero(), gap_grid: Vec::new() });
    }
    let count = 64usize;
    let mut lags: Vec<usize> = (0..count)
        .map(|i| {
            let t = if count > 1 { i as f64 / (count - 1) as f64 } else { 0.0 };
            ((lag_max as f64).powf(t).round() as usize).clamp(1, lag_max)
        })
        .collect();
    lags.dedup();
    let coarse: Vec<T> = lags.par_iter().map(|&m| lag_quotient(&v, m, h, g)).collect();
    let (best_i, _) = coarse
        .iter()
        .enumerate()
        .fold((0, T::neg_infinity()), |acc, (i, &q)| if q > acc.1 { (i, q) } else { acc });
    let lo = if best_i > 0 { lags[best_i - 1] } else { 1 };
    let hi = if best_i + 1 < lags.len() { lags[best_i + 1] } else { lag_max };
    let fine: Vec<(usize, T)> = (lo..=hi).into_par_iter().map(|m| (m, lag_quotient(&v, m, h, g))).collect();
    let (best_m, best) = fine
        .into_iter()
        .chain(lags.iter().copied().zip(coarse.iter().copied()))
        .fold((0usize, T::zero()), |acc, (m, q)| if q > acc.1 || (q == acc.1 && m < acc.0) { (m, q) } else { acc });
    Ok(HolderEstimate {
        value: best,
        argmax_gap: from_usize::<T>(best_m) * h,
        gap_grid: lags.iter().map(|&m| from_usize::<T>(m) * h).collect(),
    })
}

pub fn holder_seminorm<T: Real>(f: &SampledFunction<T>, gamma: HolderExponent<T>, max_gap: T) -> Result<T> {
    holder_seminorm_detailed(f, gamma, max_gap).map(|e| e.value)
}

/// `‖f‖_{L∞} + [f]_γ` with unrestricted gaps.
pub fn holder_norm<T: Real>(f: &SampledFunction<T>, gamma: HolderExponent<T>) -> Result<T> {
    Ok(linf_norm(f) + holder_seminorm(f, gamma, T::infinity())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conventions::{Grid, Jump};

    fn gaussian() -> SampledFunction<f64> {
        SampledFunction::from_fn(Grid::default_physical(), |x: f64| (-x * x / 2.0).exp()).unwrap()
    }

    /// e^{ξ-1} on [0, 1], zero elsewhere, with both jumps recorded.
    fn truncated_exponential() -> SampledFunction<f64> {
        let grid = Grid::new(32.0, 1 << 14).unwrap();
        let (a, _) = grid.snap(0.0);
        let (b, _) = grid.snap(1.0);
        let e = (-1.0_f64).exp();
        assert_eq!(grid.point(b), 1.0, "test grid must contain 1");
        SampledFunction::from_fn(grid, |x: f64| if (0.0..=1.0).contains(&x) { (x - 1.0).exp() } else { 0.0 })
            .unwrap()
            .with_jumps(vec![Jump::real(a, 0.0, e, 0.0, e), Jump::real(b, 1.0, 0.0, 1.0, 0.0)])
            .unwrap()
    }

    fn sigma(s: f64) -> SigmaOrder<f64> {
        SigmaOrder::new(s).unwrap()
    }

    #[test]
    fn order_validation() {
        assert!(SigmaOrder::new(0.5).is_err());
        assert!(SigmaOrder::new(0.0).is_err());
        assert!(SobolevOrder::embedding(0.3).is_err());
        assert!(SobolevOrder::new(-2.0).is_ok());
        assert!(HolderExponent::new(1.0).is_ok());
        assert!(HolderExponent::new(1.5).is_err());
    }

    #[test]
    fn gaussian_l2_and_linf() {
        let g = gaussian();
        assert!((l2_norm(&g) - std::f64::consts::PI.powf(0.25)).abs() < 1e-12);
        assert_eq!(linf_norm(&g), 1.0);
        assert_eq!(linf_norm(&g.scale(0.5)), 0.5);
        assert_eq!(l2_norm(&SampledFunction::zeros(Grid::<f64>::default_physical())), 0.0);
    }

    #[test]
    fn hs_norm_zero_order_is_l2() {
        for f in [gaussian(), truncated_exponential()] {
            let hs = hs_norm(&f, SobolevOrder::new(0.0).unwrap()).unwrap();
            let l2 = l2_norm(&f);
            assert!((hs - l2).abs() <= 1e-6 * l2, "{hs} vs {l2}");
        }
    }

    #[test]
    fn jumps_bound_sobolev_order() {
        let f = truncated_exponential();
        assert!(hs_norm(&f, SobolevOrder::new(0.45).unwrap()).is_ok());
        assert!(matches!(hs_norm(&f, SobolevOrder::new(0.5).unwrap()), Err(Error::Divergent(_))));
    }

    #[test]
    fn gaussian_hs_norm_against_spectrum_quadrature() {
        // 2π ∫ (1+k²)^{3/4} e^{-k²} / (2π) dk
        let oracle = 2.0 * gauss_kronrod(|k: f64| (1.0 + k * k).powf(0.75) * (-k * k).exp(), 0.0, 12.0, 1e-13).unwrap();
        let est = hs_norm_estimate(&gaussian(), SobolevOrder::new(0.75).unwrap()).unwrap();
        assert!(!est.edge_warning);
        assert!((est.value - oracle.sqrt()).abs() <= 1e-6 * oracle.sqrt());
    }

    #[test]
    fn constant_matches_gamma_closed_form() {
        for &s in &[0.05, 0.1, 0.25, 0.4, 0.45] {
            let c = gagliardo_constant(sigma(s)).unwrap();
            let g = statrs::function::gamma::gamma(-2.0 * s);
            let closed = 1.0 / (-2.0 * g * (std::f64::consts::PI * s).cos());
            assert!(((c - closed) / closed).abs() < 1e-9, "sigma={s}: {c} vs {closed}");
        }
    }

    #[test]
    fn constant_tail_within_bound() {
        let d = gagliardo_constant_detailed(sigma(0.05)).unwrap();
        assert!(d.tail > 0.0 && d.tail <= d.tail_bound);
    }

    #[test]
    fn identity_on_gaussian() {
        for &s in &[0.1, 0.25, 0.4] {
            let r = seminorm_identity_check(&gaussian(), sigma(s), 0.01).unwrap();
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn identity_on_discontinuous_function() {
        for &s in &[0.1, 0.25, 0.4] {
            let r = seminorm_identity_check(&truncated_exponential(), sigma(s), 0.02).unwrap();
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn identity_zero_function() {
        let z = SampledFunction::zeros(Grid::new(10.0, 512).unwrap());
        let r = seminorm_identity_check(&z, sigma(0.25), 0.01).unwrap();
        assert_eq!((r.lhs, r.rhs, r.ratio), (0.0, 0.0, 1.0));
        assert!(r.passed);
    }

    #[test]
    fn gagliardo_rejects_complex() {
        let g = gaussian().scale_complex(num_complex::Complex::new(0.0, 1.0));
        assert_eq!(gagliardo_seminorm(&g, sigma(0.25)), Err(Error::ComplexInput));
    }

    fn brute_force_holder(v: &[f64], h: f64, gamma: f64, max_gap: f64) -> f64 {
        let mut best = 0.0_f64;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                let d = (j - i) as f64 * h;
                if d > max_gap * (1.0 + 1e-12) {
                    break;
                }
                best = best.max((v[j] - v[i]).abs() / d.powf(gamma));
            }
        }
        best
    }

    #[test]
    fn holder_matches_exhaustive_scan() {
        let grid = Grid::new(10.0, 2000).unwrap();
        let g = SampledFunction::from_fn(grid, |x: f64| (-x * x / 2.0).exp()).unwrap();
        let h = grid.spacing();
        let v = g.real_values();
        let ours = holder_seminorm(&g, HolderExponent::new(0.4).unwrap(), 1.0).unwrap();
        let oracle = brute_force_holder(&v, h, 0.4, 1.0);
        assert!((ours - oracle).abs() <= 1e-3 * oracle, "{ours} vs {oracle}");
        let ours = holder_norm(&g, HolderExponent::new(0.25).unwrap()).unwrap();
        let oracle = 1.0 + brute_force_holder(&v, h, 0.25, f64::INFINITY);
        assert!((ours - oracle).abs() <= 1e-3 * oracle, "{ours} vs {oracle}");
    }

    #[test]
    fn holder_of_clamped_identity() {
        let grid = Grid::new(4.0, 256).unwrap();
        let f = SampledFunction::from_fn(grid, |x: f64| x.clamp(-1.0, 1.0)).unwrap();
        let q = holder_seminorm(&f, HolderExponent::new(1.0).unwrap(), f64::INFINITY).unwrap();
        assert!((q - 1.0).abs() < 1e-12);
    }

    #[test]
    fn holder_below_grid_spacing_is_zero() {
        let q = holder_seminorm(&gaussian(), HolderExponent::new(0.5).unwrap(), 1e-6).unwrap();
        assert_eq!(q, 0.0);
    }
}
