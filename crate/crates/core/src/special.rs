//! Gamma and Riemann zeta on the real line.

use crate::scalar::{from_usize, lit, Real};

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma function via the Lanczos approximation, reflected below 1/2.
///
/// Returns NaN at the poles (non-positive integers).
pub fn gamma<T: Real>(x: T) -> T {
    let half = lit::<T>(0.5);
    if x < half {
        if x == x.floor() {
            return T::nan();
        }
        let pi = T::PI();
        return pi / ((pi * x).sin() * gamma(T::one() - x));
    }
    let x = x - T::one();
    let mut acc = lit::<T>(LANCZOS[0]);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        acc = acc + lit::<T>(c) / (x + from_usize(i));
    }
    let t = x + lit::<T>(LANCZOS_G) + half;
    (T::PI() + T::PI()).sqrt() * t.powf(x + half) * (-t).exp() * acc
}

// B_{2j} / (2j)!
const BERNOULLI_OVER_FACT: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30_240.0,
    -1.0 / 1_209_600.0,
    1.0 / 47_900_160.0,
    -691.0 / 1_307_674_368_000.0,
    1.0 / 74_724_249_600.0,
    -3617.0 / 10_670_622_842_880_000.0,
];

/// Riemann zeta by Euler–Maclaurin summation. Accurate to near machine
/// precision for `-10 < s < 30`, `s != 1`.
pub fn zeta<T: Real>(s: T) -> T {
    if s == T::one() {
        return T::infinity();
    }
    let cut = 24usize;
    let n = from_usize::<T>(cut);
    let mut sum = T::zero();
    for k in 1..cut {
        sum = sum + from_usize::<T>(k).powf(-s);
    }
    sum = sum + n.powf(T::one() - s) / (s - T::one()) + n.powf(-s) * lit(0.5);
    // rising factorial s (s+1) ... (s+2j-2)
    let mut rising = s;
    let mut npow = n.powf(-s - T::one());
    for (j, &b) in BERNOULLI_OVER_FACT.iter().enumerate() {
        sum = sum + lit::<T>(b) * rising * npow;
        let a = s + from_usize(2 * j + 1);
        rising = rising * a * (a + T::one());
        npow = npow / (n * n);
    }
    sum
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gamma_known_values() {
        assert!((gamma(5.0_f64) - 24.0).abs() < 1e-12);
        assert!((gamma(0.5_f64) - std::f64::consts::PI.sqrt()).abs() < 1e-14);
        // Γ(-0.5) = -2√π
        assert!((gamma(-0.5_f64) + 2.0 * std::f64::consts::PI.sqrt()).abs() < 1e-13);
        assert!(gamma(-2.0_f64).is_nan());
    }

    #[test]
    fn gamma_matches_statrs() {
        for i in 1..200 {
            let x = -2.95 + 0.037 * i as f64;
            if (x - x.round()).abs() < 1e-9 {
                continue;
            }
            let ours = gamma(x);
            let theirs = statrs::function::gamma::gamma(x);
            assert!(((ours - theirs) / theirs).abs() < 1e-12, "x={x}: {ours} vs {theirs}");
        }
    }

    #[test]
    fn zeta_known_values() {
        let pi = std::f64::consts::PI;
        assert!((zeta(2.0_f64) - pi * pi / 6.0).abs() < 1e-14);
        assert!((zeta(4.0_f64) - pi.powi(4) / 90.0).abs() < 1e-14);
        assert!((zeta(0.0_f64) + 0.5).abs() < 1e-14);
        assert!((zeta(-1.0_f64) + 1.0 / 12.0).abs() < 1e-14);
        assert!((zeta(-0.5_f64) + 0.207_886_224_977_354_57).abs() < 1e-13);
        assert!((zeta(1.5_f64) - 2.612_375_348_685_488).abs() < 1e-13);
        assert!((zeta(-2.5_f64) - 0.008_516_928_777_850_33).abs() < 1e-11);
    }
}
