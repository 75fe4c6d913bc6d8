//! One-dimensional quadrature primitives: adaptive Gauss–Kronrod for smooth
//! panels, tanh–sinh for integrable endpoint singularities, and
//! semi-analytic tails of power-law Fourier integrals.

use crate::error::{Error, Result};
use crate::scalar::{from_usize, lit, quad_tol, Real};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_728_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

fn gk15<T: Real, F: Fn(T) -> T>(f: &F, a: T, b: T) -> (T, T) {
    let half = (b - a) * lit(0.5);
    let mid = (a + b) * lit(0.5);
    let fc = f(mid);
    let mut kron = fc * lit(WGK[7]);
    let mut gauss = fc * lit(WG[3]);
    for i in 0..7 {
        let dx = half * lit(XGK[i]);
        let s = f(mid - dx) + f(mid + dx);
        kron = kron + s * lit(WGK[i]);
        if i % 2 == 1 {
            gauss = gauss + s * lit(WG[i / 2]);
        }
    }
    (kron * half, ((kron - gauss) * half).abs())
}

/// Adaptive Gauss–Kronrod (7/15) integration of a smooth integrand.
pub fn gauss_kronrod<T: Real, F: Fn(T) -> T>(f: F, a: T, b: T, tol: T) -> Result<T> {
    if a == b {
        return Ok(T::zero());
    }
    let (whole, err) = gk15(&f, a, b);
    let mut stack = vec![(a, b, whole, err, 0u32)];
    let mut total = T::zero();
    let floor = tol * lit(1e-3);
    let mut evals = 0usize;
    while let Some((lo, hi, val, err, depth)) = stack.pop() {
        let budget = (tol * (hi - lo) / (b - a)).abs().max(floor * lit(1e-6));
        // accept at rounding level too, or noisy integrands never settle
        if err <= budget || err <= T::epsilon() * lit(50.0) * val.abs() || depth >= 48 {
            total = total + val;
            continue;
        }
        evals += 30;
        if evals > 4_000_000 {
            return Err(Error::Quadrature("Gauss-Kronrod evaluation budget exhausted".into()));
        }
        let mid = (lo + hi) * lit(0.5);
        let (v1, e1) = gk15(&f, lo, mid);
        let (v2, e2) = gk15(&f, mid, hi);
        stack.push((lo, mid, v1, e1, depth + 1));
        stack.push((mid, hi, v2, e2, depth + 1));
    }
    Ok(total)
}

/// Tanh–sinh integration over `[a, b]`.
///
/// The integrand receives `(x, x - a, b - x)` with both distances computed
/// without cancellation, so singular factors like `(x - a)^(-0.9)` can be
/// evaluated accurately right up to the endpoint.
pub fn tanh_sinh<T: Real, F: Fn(T, T, T) -> T>(f: F, a: T, b: T, tol: T) -> Result<T> {
    if a == b {
        return Ok(T::zero());
    }
    let half = (b - a) * lit(0.5);
    let mid = (a + b) * lit(0.5);
    let pi_2 = T::FRAC_PI_2();
    let t_max = lit::<T>(6.5);
    // value of the transformed integrand at abscissa t (both mirror points)
    let node = |t: T| -> T {
        let u = pi_2 * t.sinh();
        let cu = u.cosh();
        let w = pi_2 * t.cosh() / (cu * cu);
        // 1 - tanh(u) = 2 / (exp(2u) + 1)
        let tail = half * lit::<T>(2.0) / ((u + u).exp() + T::one());
        let mut acc = T::zero();
        if t == T::zero() {
            return f(mid, mid - a, b - mid) * w;
        }
        if tail > T::zero() {
            let right = f(b - tail, b - a - tail, tail);
            let left = f(a + tail, tail, b - a - tail);
            if right.is_finite() {
                acc = acc + right;
            }
            if left.is_finite() {
                acc = acc + left;
            }
        }
        acc * w
    };
    let mut step = T::one();
    let mut sum = node(T::zero());
    let mut k = 1usize;
    loop {
        let t = from_usize::<T>(k) * step;
        if t > t_max {
            break;
        }
        sum = sum + node(t);
        k += 1;
    }
    let mut estimate = sum * step * half;
    for _level in 0..12 {
        step = step * lit(0.5);
        let mut fresh = T::zero();
        let mut k = 1usize;
        loop {
            let t = from_usize::<T>(k) * step;
            if t > t_max {
                break;
            }
            fresh = fresh + node(t);
            k += 2;
        }
        sum = sum + fresh;
        let next = sum * step * half;
        let delta = (next - estimate).abs();
        estimate = next;
        if delta <= tol * estimate.abs().max(T::min_positive_value()) {
            return Ok(estimate);
        }
    }
    Ok(estimate)
}

/// `∫_x0^∞ u^p (cos u, sin u) du` for `p < 0`, `x0 > 0`.
///
/// Panels up to a switch point are integrated numerically; beyond it the
/// repeated integration-by-parts expansion is summed until its terms stop
/// decreasing.
pub fn power_trig_tail<T: Real>(p: T, x0: T) -> Result<(T, T)> {
    if !(p < T::zero()) || !(x0 > T::zero()) {
        return Err(Error::Quadrature(format!(
            "power_trig_tail needs p < 0 and x0 > 0 (p = {p}, x0 = {x0})"
        )));
    }
    let switch = lit::<T>(120.0);
    let tol = quad_tol::<T>();
    let mut c = T::zero();
    let mut s = T::zero();
    let mut lo = x0;
    if x0 < switch {
        // geometric panels while u < π/2, then quarter periods
        let quarter = T::FRAC_PI_2();
        while lo < switch {
            let hi = if lo < quarter { (lo + lo).min(switch) } else { (lo + quarter).min(switch) };
            let scale = lo.powf(p).abs().max(T::min_positive_value());
            c = c + gauss_kronrod(|u: T| u.powf(p) * u.cos(), lo, hi, tol * scale)?;
            s = s + gauss_kronrod(|u: T| u.powf(p) * u.sin(), lo, hi, tol * scale)?;
            lo = hi;
        }
    }
    let (ac, as_) = asymptotic_power_exp(p, lo);
    Ok((c + ac, s + as_))
}

// ∫_X^∞ u^p e^{iu} du = i e^{iX} Σ_m i^m (p)_m X^{p-m}, (p)_m falling factorial.
fn asymptotic_power_exp<T: Real>(p: T, x: T) -> (T, T) {
    let mut re = T::zero();
    let mut im = T::zero();
    let mut coef = x.powf(p);
    let mut last = T::infinity();
    // i^(m+1) cycles through i, -1, -i, 1
    for m in 0..200usize {
        let mag = coef.abs();
        if mag > last || mag <= T::epsilon() * lit(1e-3) * x.powf(p).abs() {
            break;
        }
        last = mag;
        match m % 4 {
            0 => im = im + coef,
            1 => re = re - coef,
            2 => im = im - coef,
            _ => re = re + coef,
        }
        coef = coef * (p - from_usize(m)) / x;
    }
    let (sx, cx) = x.sin_cos();
    // (re + i im) * (cos x + i sin x)
    (re * cx - im * sx, re * sx + im * cx)
}

/// `(∫_k0^∞ k^p cos(kΔ) dk, ∫_k0^∞ k^p sin(kΔ) dk)` for `p < -1` when
/// `Δ = 0`, and `p < 0` otherwise.
pub fn fourier_power_tail<T: Real>(p: T, k0: T, delta: T) -> Result<(T, T)> {
    if delta == T::zero() {
        if !(p < -T::one()) {
            return Err(Error::Divergent(format!("∫ k^{p} dk diverges at infinity")));
        }
        return Ok((k0.powf(p + T::one()) / (-p - T::one()), T::zero()));
    }
    let d = delta.abs();
    let scale = d.powf(-T::one() - p);
    let (c, s) = power_trig_tail(p, k0 * d)?;
    Ok((c * scale, s * scale * delta.signum()))
}
