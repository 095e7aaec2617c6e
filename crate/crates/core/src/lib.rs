//! Vertical-shift experiments with the Riemann and Hurwitz zeta-functions.
//!
//! The crate evaluates `zeta(s)` and `zeta(s; alpha)` in and around the strip
//! `1/2 < Re s < 1`, measures grid sup-norm errors between shifted zeta values
//! and target functions, and turns sweeps over the shift into hit densities.
//!
//! Everything numerical is generic over [`Scalar`] (`f32` or `f64`); the
//! aliases below fix `f64`, which is what the tolerances are calibrated for.

pub mod error;
pub mod experiments;
pub mod kernels;
pub mod orbit;
pub mod parallel;
pub mod scalar;
pub mod space;

pub use error::{Error, ErrorClass, Result};
pub use scalar::{shift_up, Scalar};

pub use num_complex::Complex;

pub type Complex64 = Complex<f64>;
pub type Precision = kernels::EvalPrecision<f64>;
pub type Hurwitz = kernels::HurwitzParams<f64>;
pub type Subject = orbit::Subject<f64>;
pub type ShiftSpec = orbit::ShiftSpec<f64>;
pub type ErrorProfile = orbit::ErrorProfile<f64>;
pub type DensityEstimate = orbit::DensityEstimate<f64>;
pub type CompactPatch = space::CompactPatch<f64>;
pub type PatchShape = space::PatchShape<f64>;
pub type StripDomain = space::StripDomain<f64>;
pub type TargetFunction = space::TargetFunction<f64>;
