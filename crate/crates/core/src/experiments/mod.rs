//! Experiments assembled from the orbit engine.

mod comparison;
mod gdelta;
mod joint;
mod recurrence;

pub use comparison::{density_comparison, ComparisonEntry, ComparisonReport, CURVE_POINTS};
pub use gdelta::{
    base_patch, gdelta_scan, gdelta_scan_pairs, plant_base, verify_hit, GdeltaEntry,
    GdeltaScanResult, PlantedBase,
};
pub use joint::{joint_sweep, JointSpec};
pub use recurrence::{
    discrete_horizon, local_minima, self_recurrence, step_multiple, DiscreteRun,
    RecurrenceReport, BEST_SHIFT_COUNT, BEST_SHIFT_FLOOR,
};
