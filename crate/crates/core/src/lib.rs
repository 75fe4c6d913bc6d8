//! Fractional Sobolev norms, real-space fractional seminorms and the
//! kernel decomposition behind a Sobolev-to-Hölder embedding on the line.

// `!(x > 0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod conventions;
pub mod embedding;
pub mod error;
pub mod fft;
pub mod kernels;
pub mod norms;
pub mod quad;
pub mod report;
pub mod scalar;
pub mod special;
pub mod testfunctions;

pub use conventions::{Grid, Jump, JumpTerm, SampledFunction, SpectrumFunction};
pub use report::{EmbeddingReport, Rule, Tolerances, VerificationReport};
pub use testfunctions::CatalogEntry;
pub use error::{Error, Result};
pub use scalar::Real;

pub type GridF64 = Grid<f64>;
pub type GridF32 = Grid<f32>;
pub type SampledFunctionF64 = SampledFunction<f64>;
pub type SampledFunctionF32 = SampledFunction<f32>;
pub type SpectrumFunctionF64 = SpectrumFunction<f64>;
pub type SpectrumFunctionF32 = SpectrumFunction<f32>;
pub type KernelParamsF64 = kernels::KernelParams<f64>;
pub type KernelParamsF32 = kernels::KernelParams<f32>;
pub type SobolevOrderF64 = norms::SobolevOrder<f64>;
pub type SobolevOrderF32 = norms::SobolevOrder<f32>;
pub type SigmaOrderF64 = norms::SigmaOrder<f64>;
pub type SigmaOrderF32 = norms::SigmaOrder<f32>;
pub type HolderExponentF64 = norms::HolderExponent<f64>;
pub type HolderExponentF32 = norms::HolderExponent<f32>;
pub type DecompositionResultF64 = embedding::DecompositionResult<f64>;
pub type DecompositionResultF32 = embedding::DecompositionResult<f32>;
