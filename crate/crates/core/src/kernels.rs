//! The exponential cut-off kernels
//!
//! ```text
//! E1(ξ; ξ1, ξ2) = e^{ξ-ξ1} - e^{ξ-ξ2}   for ξ ≤ ξ1,   0 otherwise
//! E2(ξ; ξ1, ξ2) = e^{ξ-ξ2}             for ξ1 ≤ ξ ≤ ξ2, 0 otherwise
//! ```
//!
//! with their transforms, `L²` norms, region splits of the Gagliardo double
//! integral, and the seminorm-to-gap ratios bounded by the two kernel
//! lemmas.

use num_complex::Complex;

use crate::conventions::{spectral_integral, Grid, Jump, JumpTerm, SampledFunction, SpectralWeight, SpectrumFunction};
use crate::error::{Error, Result};
use crate::norms::SigmaOrder;
use crate::quad::{gauss_kronrod, tanh_sinh};
use crate::scalar::{lit, quad_tol, to_f64, Real};

/// Kernel parameters `ξ1 ≤ ξ2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelParams<T> {
    xi1: T,
    xi2: T,
}

impl<T: Real> KernelParams<T> {
    pub fn new(xi1: T, xi2: T) -> Result<Self> {
        if !xi1.is_finite() || !xi2.is_finite() || xi1 > xi2 {
            return Err(Error::BadKernelParams { xi1: to_f64(xi1), xi2: to_f64(xi2) });
        }
        Ok(KernelParams { xi1, xi2 })
    }

    pub fn xi1(&self) -> T {
        self.xi1
    }

    pub fn xi2(&self) -> T {
        self.xi2
    }

    pub fn gap(&self) -> T {
        self.xi2 - self.xi1
    }

    /// `1 - e^{-(ξ2-ξ1)}`, the amplitude of `E1` at `ξ1`.
    pub fn amplitude(&self) -> T {
        -(self.xi1 - self.xi2).exp_m1()
    }

    /// Parameters moved to the nearest lattice points, with their indices.
    pub fn snap(&self, grid: &Grid<T>) -> Result<(Self, usize, usize)> {
        for x in [self.xi1, self.xi2] {
            if !grid.is_interior(x) {
                return Err(Error::OutsideInterior(to_f64(x)));
            }
        }
        let (i1, x1) = grid.snap(self.xi1);
        let (i2, x2) = grid.snap(self.xi2);
        Ok((KernelParams { xi1: x1, xi2: x2 }, i1, i2))
    }

    /// Rejects gaps outside `(0, 1]`.
    pub fn require_unit_gap(&self) -> Result<()> {
        let g = self.gap();
        if g > T::zero() && g <= T::one() {
            Ok(())
        } else {
            Err(Error::OutOfRange { name: "xi2 - xi1", value: to_f64(g), range: "(0, 1]" })
        }
    }
}

pub fn e1_eval<T: Real>(p: &KernelParams<T>, xi: T) -> T {
    if xi <= p.xi1 {
        (xi - p.xi1).exp() * p.amplitude()
    } else {
        T::zero()
    }
}

pub fn e2_eval<T: Real>(p: &KernelParams<T>, xi: T) -> T {
    if xi >= p.xi1 && xi <= p.xi2 {
        (xi - p.xi2).exp()
    } else {
        T::zero()
    }
}

fn inv_one_minus_ik<T: Real>(k: T) -> Complex<T> {
    Complex::new(T::one(), -k).inv()
}

fn phase<T: Real>(k: T, x: T) -> Complex<T> {
    let (s, c) = (k * x).sin_cos();
    Complex::new(c, -s)
}

/// `(1/2π) (e^{-ξ1} - e^{-ξ2}) e^{(1-ik)ξ1} / (1 - ik)`, evaluated as
/// `(1 - e^{ξ1-ξ2}) e^{-ikξ1} / (2π(1 - ik))` to avoid overflow.
pub fn e1_fourier_closed_form<T: Real>(p: &KernelParams<T>, k: T) -> Complex<T> {
    phase(k, p.xi1) * inv_one_minus_ik(k) * (p.amplitude() / (T::PI() + T::PI()))
}

/// `(1/2π) e^{-ξ2} (e^{(1-ik)ξ2} - e^{(1-ik)ξ1}) / (1 - ik)`.
pub fn e2_fourier_closed_form<T: Real>(p: &KernelParams<T>, k: T) -> Complex<T> {
    let lower = phase(k, p.xi1) * (p.xi1 - p.xi2).exp();
    (phase(k, p.xi2) - lower) * inv_one_minus_ik(k) / (T::PI() + T::PI())
}

/// `‖E1‖_{L²} = (1 - e^{ξ1-ξ2}) / √2`.
pub fn e1_l2_closed_form<T: Real>(p: &KernelParams<T>) -> T {
    p.amplitude() / lit::<T>(2.0).sqrt()
}

/// `‖E2‖_{L²} = ((1 - e^{-2(ξ2-ξ1)}) / 2)^{1/2}`.
pub fn e2_l2_closed_form<T: Real>(p: &KernelParams<T>) -> T {
    (-(-(p.gap() + p.gap())).exp_m1() * lit(0.5)).sqrt()
}

/// A kernel sampled on a grid with its parameters snapped to the lattice.
#[derive(Debug, Clone, PartialEq)]
pub struct SampledKernel<T> {
    pub function: SampledFunction<T>,
    pub params: KernelParams<T>,
}

/// Samples `E1` with `ξ1`, `ξ2` snapped; the jump at `ξ1` is recorded with
/// its one-sided limits (the point value there is the left limit).
pub fn sample_e1<T: Real>(p: &KernelParams<T>, grid: &Grid<T>) -> Result<SampledKernel<T>> {
    let (q, i1, _) = p.snap(grid)?;
    let f = SampledFunction::from_fn(*grid, |x| e1_eval(&q, x))?;
    let c = q.amplitude();
    let jumps = if c > T::zero() { vec![Jump::real(i1, c, T::zero(), c, T::zero())] } else { Vec::new() };
    Ok(SampledKernel { function: f.with_jumps(jumps)?, params: q })
}

/// Samples `E2` with `ξ1`, `ξ2` snapped and both jumps recorded.
pub fn sample_e2<T: Real>(p: &KernelParams<T>, grid: &Grid<T>) -> Result<SampledKernel<T>> {
    let (q, i1, i2) = p.snap(grid)?;
    if i2 == i1 {
        // a single point carries no mass
        return Ok(SampledKernel { function: SampledFunction::zeros(*grid), params: q });
    }
    let f = SampledFunction::from_fn(*grid, |x| e2_eval(&q, x))?;
    let jumps = if i2 > i1 {
        let low = (q.xi1 - q.xi2).exp();
        let z = T::zero();
        vec![Jump::real(i1, z, low, z, low), Jump::real(i2, T::one(), z, T::one(), z)]
    } else {
        Vec::new()
    };
    Ok(SampledKernel { function: f.with_jumps(jumps)?, params: q })
}

/// Exact spectrum of `E1` on `freq_grid`, with its jump asymptotics.
pub fn e1_spectrum<T: Real>(p: &KernelParams<T>, freq_grid: &Grid<T>) -> Result<SpectrumFunction<T>> {
    let c = Complex::new(-p.amplitude(), T::zero());
    let jumps = if p.gap() > T::zero() { vec![JumpTerm { position: p.xi1, value_jump: c, slope_jump: c }] } else { Vec::new() };
    SpectrumFunction::from_fn(*freq_grid, |k| e1_fourier_closed_form(p, k), jumps)
}

/// Exact spectrum of `E2` on `freq_grid`, with its jump asymptotics.
pub fn e2_spectrum<T: Real>(p: &KernelParams<T>, freq_grid: &Grid<T>) -> Result<SpectrumFunction<T>> {
    let jumps = if p.gap() > T::zero() {
        let low = Complex::new((p.xi1 - p.xi2).exp(), T::zero());
        let high = Complex::new(-T::one(), T::zero());
        vec![
            JumpTerm { position: p.xi1, value_jump: low, slope_jump: low },
            JumpTerm { position: p.xi2, value_jump: high, slope_jump: high },
        ]
    } else {
        Vec::new()
    };
    SpectrumFunction::from_fn(*freq_grid, |k| e2_fourier_closed_form(p, k), jumps)
}

fn closed_form_seminorm<T: Real>(spec: &SpectrumFunction<T>, sigma: SigmaOrder<T>) -> Result<T> {
    let w = SpectralWeight::AbsPower(lit::<T>(2.0) * sigma.value());
    Ok(spectral_integral(spec, spec, w)?.value.re.max(T::zero()).sqrt())
}

/// `(∫ |k|^{2σ} |F(E1)|² dk)^{1/2} / (ξ2 - ξ1)`.
///
/// The spectrum is the exact one, sampled on the dual of `grid`, so gaps
/// far below the lattice spacing are resolved.
pub fn lemma1_ratio<T: Real>(p: &KernelParams<T>, sigma: SigmaOrder<T>, grid: &Grid<T>) -> Result<T> {
    if !(p.gap() > T::zero()) {
        return Err(Error::DegenerateGap);
    }
    Ok(closed_form_seminorm(&e1_spectrum(p, &grid.dual())?, sigma)? / p.gap())
}

/// `(∫ |k|^{2σ} |F(E2)|² dk)^{1/2} / (ξ2 - ξ1)^{1/2-σ}` for gaps in `(0, 1]`.
pub fn lemma2_ratio<T: Real>(p: &KernelParams<T>, sigma: SigmaOrder<T>, grid: &Grid<T>) -> Result<T> {
    p.require_unit_gap()?;
    Ok(e2_seminorm(p, sigma, grid)? / p.gap().powf(lit::<T>(0.5) - sigma.value()))
}

/// `(∫ |k|^{2σ} |F(E2)|² dk)^{1/2}` from the exact spectrum.
pub fn e2_seminorm<T: Real>(p: &KernelParams<T>, sigma: SigmaOrder<T>, grid: &Grid<T>) -> Result<T> {
    closed_form_seminorm(&e2_spectrum(p, &grid.dual())?, sigma)
}

/// Distance below `ξ1` at which the `E1` integrals are truncated.
pub const E1_TRUNCATION: f64 = 40.0;

/// Region integrals of a Gagliardo double integral and the undecomposed
/// value they should sum to.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionSplit<T> {
    pub terms: Vec<T>,
    pub total: T,
}

impl<T: Real> RegionSplit<T> {
    pub fn sum(&self) -> T {
        self.terms.iter().fold(T::zero(), |a, &b| a + b)
    }

    fn zeros(n: usize) -> Self {
        RegionSplit { terms: vec![T::zero(); n], total: T::zero() }
    }
}

/// `2 ∫_0^∞ z^{-1-2σ} D(z) dz` where `D` is supplied numerically and equals
/// `plateau` for `z ≥ z_flat`.
///
/// Below `z0 = 10⁻⁴ z_flat` the lag is lost to rounding in `ξ + z`, so `D`
/// is replaced there by the quadratic `az + bz²` through `D(z0)` and
/// `D(2 z0)`.
fn lag_integral<T: Real>(d: impl Fn(T) -> Result<T>, z_flat: T, plateau: T, two_s: T) -> Result<T> {
    // D(z) carries quadrature noise, so ask the outer rules for less
    let tol = (quad_tol::<T>() * lit(1e3)).max(lit(1e-10));
    let p = -T::one() - two_s;
    let two = lit::<T>(2.0);
    let z0 = z_flat * lit(1e-4);
    let (d1, d2) = (d(z0)?, d(z0 + z0)?);
    let bz2 = (d2 - two * d1) / two;
    let az = d1 - bz2;
    let mut acc = z0.powf(-two_s) * (az / (T::one() - two_s) + bz2 / (two - two_s));
    let err = std::cell::RefCell::new(None);
    let guarded = |z: T| match d(z) {
        Ok(v) => v * z.powf(p),
        Err(e) => {
            err.borrow_mut().get_or_insert(e);
            T::zero()
        }
    };
    let split = z_flat.min(T::one()).max(z0);
    acc = acc + tanh_sinh(|z, _, _| guarded(z), z0, split, tol)?;
    if z_flat > split {
        acc = acc + gauss_kronrod(guarded, split, z_flat, tol * acc.abs().max(T::min_positive_value()))?;
    }
    if let Some(e) = err.into_inner() {
        return Err(e);
    }
    acc = acc + plateau * z_flat.powf(-two_s) / two_s;
    Ok(acc + acc)
}

/// `∫_a^b g` by Gauss–Kronrod with the interval broken at `breaks`, to a
/// relative tolerance set from a coarse first pass.
fn piecewise<T: Real>(g: impl Fn(T) -> T, a: T, b: T, breaks: &[T]) -> Result<T> {
    let mut pts: Vec<T> = breaks.iter().copied().filter(|&x| x > a && x < b).collect();
    pts.push(a);
    pts.push(b);
    pts.sort_by(|x, y| x.partial_cmp(y).unwrap_or(std::cmp::Ordering::Equal));
    let coarse_tol = lit::<T>(1e-3);
    let mut scale = T::zero();
    for w in pts.windows(2) {
        scale = scale + gauss_kronrod(&g, w[0], w[1], coarse_tol * (w[1] - w[0]))?.abs();
    }
    if scale == T::zero() {
        return Ok(T::zero());
    }
    let tol = quad_tol::<T>() * scale;
    let mut acc = T::zero();
    for w in pts.windows(2) {
        acc = acc + gauss_kronrod(&g, w[0], w[1], tol)?;
    }
    Ok(acc)
}

/// `Ĩ1, Ĩ2, Ĩ3` for `E1`: `ξ` on the support with `η > ξ1`, the mirror
/// region, and both points on the support.
///
/// `E1` is negligible (below `e^{-40}` relative) more than 40 units below
/// `ξ1`, so support integrals stop there; the far-field part of the kernel
/// `|ξ - η|^{-1-2σ}`, which does not decay exponentially, is integrated to
/// infinity.
pub fn e1_region_split<T: Real>(p: &KernelParams<T>, sigma: SigmaOrder<T>) -> Result<RegionSplit<T>> {
    if !(p.gap() > T::zero()) {
        return Ok(RegionSplit::zeros(3));
    }
    let two = lit::<T>(2.0);
    let two_s = two * sigma.value();
    let c = p.amplitude();
    let t = lit::<T>(E1_TRUNCATION);
    let tol = quad_tol::<T>();
    // ∫ E1(ξ)² (ξ1 - ξ)^{-2σ} / (2σ) over [ξ1 - T, ξ1], in u = ξ1 - ξ
    let outer = tanh_sinh(|_, u: T, _| c * c * (-(u + u)).exp() * u.powf(-two_s), T::zero(), t, tol)? / two_s;
    // c² ∫_0^∞ z^{-1-2σ} (1 - e^{-z})² dz
    let inner_density = |z: T| {
        let em = (-z).exp_m1();
        c * c * em * em * z.powf(-T::one() - two_s)
    };
    let inner = tanh_sinh(|z, _, _| inner_density(z), T::zero(), T::one(), tol)?
        + gauss_kronrod(inner_density, T::one(), t, tol * c * c)?
        + c * c * t.powf(-two_s) / two_s;
    // undecomposed: D(z) = ∫ (E1(ξ + z) - E1(ξ))² dξ, flat at 2‖E1‖² for z ≥ T
    let d = |z: T| piecewise(|x: T| (e1_eval(p, x + z) - e1_eval(p, x)).powi(2), p.xi1 - z - t, p.xi1, &[p.xi1 - z]);
    let plateau = two * e1_l2_closed_form(p).powi(2);
    let total = lag_integral(d, t, plateau, two_s)?;
    Ok(RegionSplit { terms: vec![outer, outer, inner], total })
}

/// `Ǐ1..Ǐ5` for `E2`: `η < ξ1` and `η > ξ2` against `ξ ∈ [ξ1, ξ2]`, the
/// two mirror regions, and both points in `[ξ1, ξ2]`.
pub fn e2_region_split<T: Real>(p: &KernelParams<T>, sigma: SigmaOrder<T>) -> Result<RegionSplit<T>> {
    if p.gap() == T::zero() {
        return Ok(RegionSplit::zeros(5));
    }
    p.require_unit_gap()?;
    let two = lit::<T>(2.0);
    let two_s = two * sigma.value();
    let g = p.gap();
    let tol = quad_tol::<T>();
    let sq = |x: T| (two * (x - p.xi2)).exp();
    let left = tanh_sinh(|x, da: T, _| sq(x) * da.powf(-two_s), p.xi1, p.xi2, tol)? / two_s;
    let right = tanh_sinh(|x, _, db: T| sq(x) * db.powf(-two_s), p.xi1, p.xi2, tol)? / two_s;
    // 2 ∫_0^g z^{-1-2σ} (e^z - 1)² (e^{-2z} - e^{-2g}) / 2 dz
    let square = tanh_sinh(
        |z: T, _, _| {
            let em = z.exp_m1();
            em * em * ((-(z + z)).exp() - (-(g + g)).exp()) * z.powf(-T::one() - two_s)
        },
        T::zero(),
        g,
        tol,
    )?;
    let d = |z: T| {
        piecewise(
            |x: T| (e2_eval(p, x + z) - e2_eval(p, x)).powi(2),
            p.xi1 - z,
            p.xi2,
            &[p.xi1, p.xi2 - z],
        )
    };
    let plateau = two * e2_l2_closed_form(p).powi(2);
    let total = lag_integral(d, g, plateau, two_s)?;
    Ok(RegionSplit { terms: vec![left, right, left, right, square], total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conventions::forward_transform;
    use crate::norms::{l2_norm, linf_norm, spectral_sigma_seminorm};
    use statrs::function::gamma::gamma;
    use std::f64::consts::PI;

    fn params(a: f64, b: f64) -> KernelParams<f64> {
        KernelParams::new(a, b).unwrap()
    }

    fn sigma(s: f64) -> SigmaOrder<f64> {
        SigmaOrder::new(s).unwrap()
    }

    #[test]
    fn point_values() {
        let p = params(0.0, 1.0);
        let e = (-1.0_f64).exp();
        assert!((e1_eval(&p, 0.0) - (1.0 - e)).abs() < 1e-15);
        assert_eq!(e1_eval(&p, 0.5), 0.0);
        assert_eq!(e1_eval(&params(0.3, 0.3), -2.0), 0.0);
        assert_eq!(e2_eval(&p, 1.0), 1.0);
        assert!((e2_eval(&p, 0.0) - e).abs() < 1e-15);
        assert_eq!(e2_eval(&p, -0.1), 0.0);
        assert!(KernelParams::new(1.0, 0.0).is_err());
    }

    #[test]
    fn transforms_at_zero_and_degenerate() {
        let p = params(0.0, 1.0);
        let want = (1.0 - (-1.0_f64).exp()) / (2.0 * PI);
        assert!((e1_fourier_closed_form(&p, 0.0).re - want).abs() < 1e-15);
        assert!((e2_fourier_closed_form(&p, 0.0).re - want).abs() < 1e-15);
        let d = params(2.0, 2.0);
        for k in [-3.0, 0.0, 7.5] {
            assert_eq!(e1_fourier_closed_form(&d, k).norm(), 0.0);
            assert!(e2_fourier_closed_form(&d, k).norm() < 1e-17);
        }
    }

    #[test]
    fn closed_forms_match_numerical_transforms() {
        let grid = Grid::default_physical();
        for (a, b) in [(0.0, 1.0), (0.0, 0.5), (-3.2, 6.8), (1.0, 1.01)] {
            let e1 = sample_e1(&params(a, b), &grid).unwrap();
            let e2 = sample_e2(&params(a, b), &grid).unwrap();
            for (k, (kernel, closed)) in [
                (0, (&e1, e1_fourier_closed_form as fn(&KernelParams<f64>, f64) -> Complex<f64>)),
                (1, (&e2, e2_fourier_closed_form as fn(&KernelParams<f64>, f64) -> Complex<f64>)),
            ] {
                let spec = forward_transform(&kernel.function, &grid.dual()).unwrap();
                let worst = spec
                    .grid()
                    .points()
                    .zip(spec.values())
                    .filter(|(k, _)| k.abs() <= 50.0)
                    .map(|(q, v)| (v - closed(&kernel.params, q)).norm())
                    .fold(0.0, f64::max);
                assert!(worst <= 1e-8, "kernel {k} ({a}, {b}): {worst}");
            }
        }
    }

    #[test]
    fn l2_closed_forms() {
        let grid = Grid::default_physical();
        for (a, b) in [(0.0, 1.0), (-5.0, -4.9), (2.0, 7.0)] {
            let e1 = sample_e1(&params(a, b), &grid).unwrap();
            let closed = e1_l2_closed_form(&e1.params);
            assert!(((l2_norm(&e1.function) - closed) / closed).abs() < 1e-4);
            assert!(closed <= e1.params.gap() / 2.0_f64.sqrt());
            let e2 = sample_e2(&params(a, b), &grid).unwrap();
            let closed = e2_l2_closed_form(&e2.params);
            assert!(((l2_norm(&e2.function) - closed) / closed).abs() < 1e-4);
            assert!(closed <= e2.params.gap().sqrt());
        }
        assert!((e1_l2_closed_form(&params(0.0, 1.0)) - (1.0 - (-1.0_f64).exp()) / 2.0_f64.sqrt()).abs() < 1e-15);
        assert!((e2_l2_closed_form(&params(0.0, 1.0)) - ((1.0 - (-2.0_f64).exp()) / 2.0).sqrt()).abs() < 1e-15);
        assert_eq!(e1_l2_closed_form(&params(3.0, 3.0)), 0.0);
    }

    #[test]
    fn e2_sup_is_one() {
        let e2 = sample_e2(&params(0.0, 0.5), &Grid::default_physical()).unwrap();
        assert_eq!(linf_norm(&e2.function), 1.0);
    }

    #[test]
    fn lemma1_ratio_matches_gamma_oracle() {
        // |F(E1)|² = c²/(4π²(1+k²)) ⇒ ∫|k|^{2σ}|F|² = c² / (4π cos πσ)
        let grid = Grid::default_physical();
        for &s in &[0.1, 0.25, 0.4] {
            for &(a, g) in &[(0.0, 1e-3), (-5.0, 0.3), (5.0, 10.0)] {
                let p = params(a, a + g);
                let c = p.amplitude();
                let oracle = c / (4.0 * PI * (PI * s).cos()).sqrt() / g;
                let r = lemma1_ratio(&p, sigma(s), &grid).unwrap();
                assert!(((r - oracle) / oracle).abs() < 1e-6, "s={s} gap={g}: {r} vs {oracle}");
            }
        }
        assert_eq!(lemma1_ratio(&params(1.0, 1.0), sigma(0.25), &grid), Err(Error::DegenerateGap));
    }

    #[test]
    fn e2_seminorm_reference_value() {
        // independent high-precision quadrature of the closed-form spectrum
        let v = e2_seminorm(&params(0.0, 1.0), sigma(0.4), &Grid::default_physical()).unwrap();
        assert!((v - 0.539_001_811_867_781).abs() < 1e-6, "{v}");
    }

    #[test]
    fn closed_form_and_sampled_seminorms_agree() {
        let grid = Grid::new(32.0, 1 << 14).unwrap();
        let p = params(0.0, 0.5);
        let sampled = sample_e2(&p, &grid).unwrap();
        for &s in &[0.1, 0.25, 0.4] {
            let a = spectral_sigma_seminorm(&sampled.function, sigma(s)).unwrap();
            let b = e2_seminorm(&sampled.params, sigma(s), &grid).unwrap();
            assert!(((a - b) / b).abs() < 1e-4, "{a} vs {b}");
        }
    }

    #[test]
    fn lemma2_gap_restriction() {
        let grid = Grid::default_physical();
        assert!(lemma2_ratio(&params(0.0, 1.5), sigma(0.25), &grid).is_err());
        assert!(lemma2_ratio(&params(0.0, 0.0), sigma(0.25), &grid).is_err());
        assert!(lemma2_ratio(&params(0.0, 1.0), sigma(0.25), &grid).unwrap().is_finite());
    }

    #[test]
    fn e1_split_matches_closed_forms() {
        let s = 0.25;
        let p = params(0.0, 0.5);
        let split = e1_region_split(&p, sigma(s)).unwrap();
        let c2 = p.amplitude().powi(2);
        let outer = c2 * gamma(1.0 - 2.0 * s) * 2f64.powf(2.0 * s - 1.0) / (2.0 * s);
        let inner = c2 * gamma(-2.0 * s) * (2f64.powf(2.0 * s) - 2.0);
        assert!(((split.terms[0] - outer) / outer).abs() < 1e-9);
        assert!(((split.terms[2] - inner) / inner).abs() < 1e-9);
        assert!(((split.sum() - split.total) / split.total).abs() < 1e-6);
    }

    #[test]
    fn e2_split_sums_to_total() {
        for &s in &[0.1, 0.25, 0.4] {
            let split = e2_region_split(&params(0.0, 0.5), sigma(s)).unwrap();
            assert!(((split.sum() - split.total) / split.total).abs() < 1e-6, "{split:?}");
        }
        assert_eq!(e2_region_split(&params(1.0, 1.0), sigma(0.25)).unwrap().sum(), 0.0);
        assert!(e2_region_split(&params(0.0, 2.0), sigma(0.25)).is_err());
    }

    #[test]
    fn splits_are_consistent_with_spectral_side() {
        // (C(σ)/4π) · total = ∫|k|^{2σ}|F(E2)|² dk
        let s = 0.3;
        let p = params(0.0, 0.5);
        let split = e2_region_split(&p, sigma(s)).unwrap();
        let c = 1.0 / (-2.0 * gamma(-2.0 * s) * (PI * s).cos());
        let spectral = e2_seminorm(&p, sigma(s), &Grid::default_physical()).unwrap().powi(2);
        assert!(((c * split.total / (4.0 * PI) - spectral) / spectral).abs() < 1e-6);
    }
}
