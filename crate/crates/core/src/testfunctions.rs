//! Catalog of test functions: smooth, compactly supported, oscillatory,
//! kinked, rough spectral probes, and the sampled kernels.
//!
//! Ids are the strings accepted by [`get`]:
//! `gaussian`, `modulated-gaussian`, `bump`, `hat`,
//! `probe:beta=<β>[,cutoff=<k>]`, `e1:xi1=<a>,xi2=<b>`, `e2:xi1=<a>,xi2=<b>`.

use num_complex::Complex;

use crate::conventions::{inverse_transform, Grid, Jump, SampledFunction, SpectrumFunction};
use crate::error::{Error, Result};
use crate::kernels::{e1_fourier_closed_form, e2_fourier_closed_form, sample_e1, sample_e2, KernelParams};
use crate::scalar::{lit, Real};

/// Default probe cutoff: the taper starts here and ends a decade higher.
pub const DEFAULT_PROBE_CUTOFF: f64 = 32.0;

/// Ids of the default catalog.
pub const DEFAULT_CATALOG: [&str; 9] = [
    "gaussian",
    "modulated-gaussian",
    "bump",
    "hat",
    "probe:beta=1.1",
    "probe:beta=1.3",
    "probe:beta=2",
    "e1:xi1=0,xi2=1",
    "e2:xi1=0,xi2=0.5",
];

#[derive(Debug, Clone, Copy, PartialEq)]
enum Kind {
    Gaussian,
    ModulatedGaussian,
    Bump,
    Hat,
    Probe { beta: f64, cutoff: f64 },
    E1 { xi1: f64, xi2: f64 },
    E2 { xi1: f64, xi2: f64 },
}

/// How a catalog derivative is produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivativeSource {
    Analytic,
    /// Multiply the spectrum by `ik` and invert.
    Spectral,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CatalogEntry {
    id: String,
    kind: Kind,
    regularity_note: String,
}

fn sinc_sq_hat<T: Real>(a: T, b: T, c: T, k: T) -> Complex<T> {
    // piecewise linear through (a,0), (b,1), (c,0): F = -(1/2π) Σ D_j e^{-ik x_j} / k²
    let two_pi = T::PI() + T::PI();
    if k.abs() < lit(1e-4) {
        let area = (c - a) * lit(0.5);
        let mean = (a + b + c) / lit(3.0);
        return Complex::new(area, -k * area * mean) / two_pi;
    }
    let slopes = [
        (a, (b - a).recip()),
        (b, -(c - b).recip() - (b - a).recip()),
        (c, (c - b).recip()),
    ];
    let mut acc = Complex::new(T::zero(), T::zero());
    for (x, d) in slopes {
        let (s, co) = (k * x).sin_cos();
        acc = acc + Complex::new(co, -s) * d;
    }
    -acc / (k * k * two_pi)
}

fn bump<T: Real>(x: T) -> T {
    if x.abs() < T::one() {
        (-(T::one() - x * x).recip()).exp()
    } else {
        T::zero()
    }
}

fn bump_prime<T: Real>(x: T) -> T {
    if x.abs() < T::one() {
        let q = T::one() - x * x;
        -lit::<T>(2.0) * x / (q * q) * bump(x)
    } else {
        T::zero()
    }
}

impl CatalogEntry {
    pub fn id(&self) -> &str {
        &self.id
    }

    /// Membership statement for `H^s`.
    pub fn regularity_note(&self) -> &str {
        &self.regularity_note
    }

    /// Supremum of the `s` for which the function lies in `H^s`.
    pub fn max_sobolev_order(&self) -> f64 {
        match self.kind {
            Kind::Gaussian | Kind::ModulatedGaussian | Kind::Bump => f64::INFINITY,
            Kind::Hat => 1.5,
            Kind::Probe { beta, .. } => beta - 0.5,
            Kind::E1 { .. } | Kind::E2 { .. } => 0.5,
        }
    }

    /// Smooth entries have `f' ∈ L²` uniformly in the discretization. Rough
    /// probes (`β ≤ 3/2`) still have a spectral derivative, but it grows
    /// without bound as the cutoff increases.
    pub fn is_smooth(&self) -> bool {
        match self.kind {
            Kind::Gaussian | Kind::ModulatedGaussian | Kind::Bump => true,
            Kind::Probe { beta, .. } => beta > 1.5,
            _ => false,
        }
    }

    pub fn is_kernel(&self) -> bool {
        matches!(self.kind, Kind::E1 { .. } | Kind::E2 { .. })
    }

    pub fn derivative_source(&self) -> Option<DerivativeSource> {
        match self.kind {
            Kind::Gaussian | Kind::ModulatedGaussian | Kind::Bump => Some(DerivativeSource::Analytic),
            Kind::Probe { .. } => Some(DerivativeSource::Spectral),
            _ => None,
        }
    }

    /// Probe cutoff actually used on `grid`: the taper must end inside the band.
    pub fn effective_cutoff<T: Real>(&self, grid: &Grid<T>) -> Option<f64> {
        match self.kind {
            Kind::Probe { cutoff, .. } => {
                let band = grid.dual().half_width().to_f64().unwrap_or(f64::INFINITY);
                Some(cutoff.min(band / 10.0))
            }
            _ => None,
        }
    }

    fn hat_vertices<T: Real>(grid: &Grid<T>) -> (usize, usize, usize, T, T, T) {
        let (ia, a) = grid.snap(-T::one());
        let (ib, b) = grid.snap(T::zero());
        let (ic, c) = grid.snap(T::one());
        (ia, ib, ic, a, b, c)
    }

    fn kernel_params<T: Real>(&self) -> Option<KernelParams<T>> {
        match self.kind {
            Kind::E1 { xi1, xi2 } | Kind::E2 { xi1, xi2 } => KernelParams::new(lit(xi1), lit(xi2)).ok(),
            _ => None,
        }
    }

    /// Exact `F(f)(k)` where a closed form exists; snapped entries use their
    /// snapped geometry on `grid`.
    pub fn spectrum<T: Real>(&self, grid: &Grid<T>, k: T) -> Option<Complex<T>> {
        let two_pi = T::PI() + T::PI();
        let gauss = |q: T| (-q * q * lit(0.5)).exp() / two_pi.sqrt();
        match self.kind {
            Kind::Gaussian => Some(Complex::new(gauss(k), T::zero())),
            Kind::ModulatedGaussian => {
                let w = lit::<T>(7.0);
                Some(Complex::new((gauss(k - w) + gauss(k + w)) * lit(0.5), T::zero()))
            }
            Kind::Bump => None,
            Kind::Hat => {
                let (_, _, _, a, b, c) = Self::hat_vertices(grid);
                Some(sinc_sq_hat(a, b, c, k))
            }
            Kind::Probe { beta, .. } => {
                let cut = lit::<T>(self.effective_cutoff(grid)?);
                Some(Complex::new(probe_spectrum(lit(beta), cut, k), T::zero()))
            }
            Kind::E1 { .. } => {
                let (q, _, _) = self.kernel_params::<T>()?.snap(grid).ok()?;
                Some(e1_fourier_closed_form(&q, k))
            }
            Kind::E2 { .. } => {
                let (q, _, _) = self.kernel_params::<T>()?.snap(grid).ok()?;
                Some(e2_fourier_closed_form(&q, k))
            }
        }
    }

    pub fn sample<T: Real>(&self, grid: &Grid<T>) -> Result<SampledFunction<T>> {
        match self.kind {
            Kind::Gaussian => SampledFunction::from_fn(*grid, |x| (-x * x * lit(0.5)).exp()),
            Kind::ModulatedGaussian => {
                SampledFunction::from_fn(*grid, |x| (-x * x * lit(0.5)).exp() * (x * lit(7.0)).cos())
            }
            Kind::Bump => SampledFunction::from_fn(*grid, bump),
            Kind::Hat => {
                let (ia, ib, ic, a, b, c) = Self::hat_vertices(grid);
                let f = SampledFunction::from_fn(*grid, |x| {
                    if x <= a || x >= c {
                        T::zero()
                    } else if x <= b {
                        (x - a) / (b - a)
                    } else {
                        (c - x) / (c - b)
                    }
                })?;
                let up = (b - a).recip();
                let down = -(c - b).recip();
                let z = T::zero();
                f.with_jumps(vec![
                    Jump::real(ia, z, z, z, up),
                    Jump::real(ib, T::one(), T::one(), up, down),
                    Jump::real(ic, z, z, down, z),
                ])
            }
            Kind::Probe { beta, .. } => {
                let cut = lit::<T>(self.effective_cutoff(grid).unwrap_or(DEFAULT_PROBE_CUTOFF));
                probe_samples(grid, lit(beta), cut, false)
            }
            Kind::E1 { .. } => sample_e1(&self.params_or_err()?, grid).map(|k| k.function),
            Kind::E2 { .. } => sample_e2(&self.params_or_err()?, grid).map(|k| k.function),
        }
    }

    fn params_or_err<T: Real>(&self) -> Result<KernelParams<T>> {
        match self.kind {
            Kind::E1 { xi1, xi2 } | Kind::E2 { xi1, xi2 } => KernelParams::new(lit(xi1), lit(xi2)),
            _ => Err(Error::UnknownFunction(self.id.clone())),
        }
    }

    /// Samples of `f'`; fails with [`Error::NoDerivative`] for nonsmooth entries.
    pub fn sample_derivative<T: Real>(&self, grid: &Grid<T>) -> Result<SampledFunction<T>> {
        match self.kind {
            Kind::Gaussian => SampledFunction::from_fn(*grid, |x| -x * (-x * x * lit(0.5)).exp()),
            Kind::ModulatedGaussian => SampledFunction::from_fn(*grid, |x| {
                let w = lit::<T>(7.0);
                let g = (-x * x * lit(0.5)).exp();
                -g * (x * (w * x).cos() + w * (w * x).sin())
            }),
            Kind::Bump => SampledFunction::from_fn(*grid, bump_prime),
            Kind::Probe { beta, .. } => {
                let cut = lit::<T>(self.effective_cutoff(grid).unwrap_or(DEFAULT_PROBE_CUTOFF));
                probe_samples(grid, lit(beta), cut, true)
            }
            _ => Err(Error::NoDerivative(self.id.clone())),
        }
    }
}

/// Cosine roll-off in `log10 |k|` from `cutoff` to `10·cutoff`.
fn taper<T: Real>(k: T, cutoff: T) -> T {
    let a = k.abs();
    if a <= cutoff {
        T::one()
    } else if a >= cutoff * lit(10.0) {
        T::zero()
    } else {
        let t = (a / cutoff).log10();
        (T::one() + (T::PI() * t).cos()) * lit(0.5)
    }
}

/// `(1 + k²)^{-β/2}`, tapered.
pub fn probe_spectrum<T: Real>(beta: T, cutoff: T, k: T) -> T {
    (T::one() + k * k).powf(-beta * lit(0.5)) * taper(k, cutoff)
}

fn probe_samples<T: Real>(grid: &Grid<T>, beta: T, cutoff: T, derivative: bool) -> Result<SampledFunction<T>> {
    let spec = SpectrumFunction::from_fn(
        grid.dual(),
        |k| {
            let v = probe_spectrum(beta, cutoff, k);
            if derivative {
                Complex::new(T::zero(), k * v)
            } else {
                Complex::new(v, T::zero())
            }
        },
        Vec::new(),
    )?;
    let f = inverse_transform(&spec, grid)?;
    // even real spectrum (odd imaginary for f'): the samples are real
    SampledFunction::from_real(*grid, f.real_values())
}

/// Spectral probe entry; `cutoff` is where the taper starts.
pub fn spectral_probe(beta: f64, cutoff: f64) -> Result<CatalogEntry> {
    if !(beta > 0.5) || !beta.is_finite() {
        return Err(Error::OutOfRange { name: "beta", value: beta, range: "(1/2, inf)" });
    }
    if !(cutoff > 0.0) || !cutoff.is_finite() {
        return Err(Error::OutOfRange { name: "cutoff", value: cutoff, range: "(0, inf)" });
    }
    let id = if cutoff == DEFAULT_PROBE_CUTOFF {
        format!("probe:beta={beta}")
    } else {
        format!("probe:beta={beta},cutoff={cutoff}")
    };
    Ok(CatalogEntry {
        id,
        kind: Kind::Probe { beta, cutoff },
        regularity_note: format!(
            "in H^s iff s < {} before tapering; cosine taper over |k| in [{cutoff}, {}]",
            beta - 0.5,
            10.0 * cutoff
        ),
    })
}

fn parse_pairs(body: &str, keys: &[&str]) -> Option<Vec<Option<f64>>> {
    let mut out = vec![None; keys.len()];
    for part in body.split(',') {
        let (k, v) = part.split_once('=')?;
        let i = keys.iter().position(|&key| key == k.trim())?;
        let v: f64 = v.trim().parse().ok()?;
        if !v.is_finite() || out[i].is_some() {
            return None;
        }
        out[i] = Some(v);
    }
    Some(out)
}

/// Looks up a catalog entry by id.
pub fn get(id: &str) -> Result<CatalogEntry> {
    let unknown = || Error::UnknownFunction(id.to_string());
    let simple = |kind: Kind, note: &str| Ok(CatalogEntry { id: id.to_string(), kind, regularity_note: note.into() });
    match id {
        "gaussian" => return simple(Kind::Gaussian, "Schwartz; in H^s for every s"),
        "modulated-gaussian" => return simple(Kind::ModulatedGaussian, "Schwartz; in H^s for every s"),
        "bump" => return simple(Kind::Bump, "smooth, compact support; in H^s for every s"),
        "hat" => return simple(Kind::Hat, "kinks at -1, 0, 1 (snapped); in H^s iff s < 3/2"),
        _ => {}
    }
    let (head, body) = id.split_once(':').ok_or_else(unknown)?;
    match head {
        "probe" => {
            let v = parse_pairs(body, &["beta", "cutoff"]).ok_or_else(unknown)?;
            let beta = v[0].ok_or_else(unknown)?;
            let entry = spectral_probe(beta, v[1].unwrap_or(DEFAULT_PROBE_CUTOFF))?;
            Ok(CatalogEntry { id: id.to_string(), ..entry })
        }
        "e1" | "e2" => {
            let v = parse_pairs(body, &["xi1", "xi2"]).ok_or_else(unknown)?;
            let (xi1, xi2) = (v[0].ok_or_else(unknown)?, v[1].ok_or_else(unknown)?);
            KernelParams::new(xi1, xi2)?;
            let kind = if head == "e1" { Kind::E1 { xi1, xi2 } } else { Kind::E2 { xi1, xi2 } };
            simple(kind, "jump discontinuity; in H^s iff s < 1/2; no derivative")
        }
        _ => Err(unknown()),
    }
}

/// Entries of [`DEFAULT_CATALOG`].
pub fn default_catalog() -> Vec<CatalogEntry> {
    DEFAULT_CATALOG.iter().map(|id| get(id).expect("default ids parse")).collect()
}
