//! Numerical kernels: `zeta(s)`, `zeta(s; alpha)`, branch-tracked `log zeta(s)`
//! and exponential-polynomial targets.
//!
//! All kernels are pure functions; the Bernoulli table and the prime list are
//! built once and never mutated.

pub mod alternating;
pub mod bernoulli;
pub mod log_zeta;
pub mod precision;
pub mod rational_poly;
pub mod zeta;

pub use alternating::zeta_alternating;
pub use log_zeta::log_zeta_tracked;
pub use precision::EvalPrecision;
pub use rational_poly::{exp_poly_eval, GaussianRational, RationalPolynomial};
pub use zeta::{euler_maclaurin, hurwitz_zeta, riemann_zeta, Evaluation, HurwitzParams};
