//! The function space side: strips, compact patches with grids, the compact
//! exhaustion, grid sup-norms and the Fréchet metric, target functions, the
//! least-squares polynomial surrogate and the countable base enumeration.

pub mod base;
pub mod exhaustion;
pub mod fit;
pub mod metric;
pub mod patch;
pub mod strip;
pub mod target;

pub use base::{encode_base, enumerate_base, BaseElement};
pub use exhaustion::Exhaustion;
pub use fit::{mergelyan_fit, Polynomial, PolynomialFit};
pub use metric::{frechet_distance, sup_distance, FrechetDistance};
pub use patch::{build_patch, CompactPatch, PatchShape};
pub use strip::StripDomain;
pub use target::{BoundTarget, Evaluable, TargetFunction};
