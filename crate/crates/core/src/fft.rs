//! In-place complex DFT: iterative radix-2 for powers of two, direct sum
//! otherwise.

use num_complex::Complex;

use crate::scalar::{from_usize, Real};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// `X_m = Σ_j x_j e^{-2πi jm/N}`
    Forward,
    /// `x_j = Σ_m X_m e^{+2πi jm/N}` (no normalisation)
    Backward,
}

/// `e^{∓2πi r/N}` evaluated from the exact angle of residue `r mod N`.
pub(crate) fn root_of_unity<T: Real>(r: usize, n: usize, dir: Direction) -> Complex<T> {
    let r = r % n;
    let angle = (T::PI() + T::PI()) * from_usize::<T>(r) / from_usize::<T>(n);
    let (s, c) = angle.sin_cos();
    match dir {
        Direction::Forward => Complex::new(c, -s),
        Direction::Backward => Complex::new(c, s),
    }
}

pub fn dft<T: Real>(data: &mut [Complex<T>], dir: Direction) {
    let n = data.len();
    if n <= 1 {
        return;
    }
    if n.is_power_of_two() {
        radix2(data, dir);
    } else {
        direct(data, dir);
    }
}

fn direct<T: Real>(data: &mut [Complex<T>], dir: Direction) {
    let n = data.len();
    let out: Vec<Complex<T>> = (0..n)
        .map(|m| {
            data.iter()
                .enumerate()
                .fold(Complex::new(T::zero(), T::zero()), |acc, (j, &x)| {
                    acc + x * root_of_unity::<T>(j * m, n, dir)
                })
        })
        .collect();
    data.copy_from_slice(&out);
}

fn radix2<T: Real>(data: &mut [Complex<T>], dir: Direction) {
    let n = data.len();
    let bits = n.trailing_zeros();
    for i in 0..n {
        let j = i.reverse_bits() >> (usize::BITS - bits);
        if j > i {
            data.swap(i, j);
        }
    }
    let twiddles: Vec<Complex<T>> = (0..n / 2).map(|r| root_of_unity(r, n, dir)).collect();
    let mut len = 2;
    while len <= n {
        let stride = n / len;
        for start in (0..n).step_by(len) {
            for k in 0..len / 2 {
                let w = twiddles[k * stride];
                let a = data[start + k];
                let b = data[start + k + len / 2] * w;
                data[start + k] = a + b;
                data[start + k + len / 2] = a - b;
            }
        }
        len <<= 1;
    }
}
