//! Vertical translations, error profiles, sweeps and hit densities.

mod density;
mod profile;
mod search;
mod shift;
mod subject;
mod sweep;
mod translate;

pub use density::{density_curve, hit_density, DensityEstimate, DensityMode};
pub use profile::{Component, ErrorProfile, ProfileSource, Sample, SampleFailure};
pub use search::{
    coarse_minimum, golden_section, search_best_shift, BestShift, ShiftMinimum,
    GOLDEN_MAX_ITERATIONS,
};
pub use shift::ShiftSpec;
pub use subject::Subject;
pub use sweep::{continuous_sweep, discrete_orbit, error_at, sweep_source};
pub use translate::{translate, Translated};
pub(crate) use density::density_prefix;
pub(crate) use profile::PreparedSource;
