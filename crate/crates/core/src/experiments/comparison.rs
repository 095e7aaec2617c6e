use crate::error::{Error, Result};
use crate::experiments::recurrence::{discrete_horizon, discrete_run, DiscreteRun};
use crate::kernels::EvalPrecision;
use crate::orbit::{
    continuous_sweep, density_curve, density_prefix, hit_density, DensityEstimate, ErrorProfile, ShiftSpec,
    Subject,
};
use crate::scalar::Scalar;
use crate::space::{CompactPatch, TargetFunction};

/// Points on the continuous density-versus-horizon curve.
pub const CURVE_POINTS: usize = 50;

/// Continuous and h-discrete hit fractions at a matching horizon.
#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonEntry<T> {
    pub h: T,
    /// `N_max = floor(t_max / h)`.
    pub n_max: usize,
    /// Continuous density over `[0, N_max h)`.
    pub continuous: DensityEstimate<T>,
    pub discrete: DensityEstimate<T>,
    /// `false` when the orbit points were freshly evaluated because `h` is not
    /// a multiple of the sweep step.
    pub subsampled: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ComparisonReport<T> {
    pub epsilon: T,
    pub entries: Vec<ComparisonEntry<T>>,
    pub curve: Vec<DensityEstimate<T>>,
    pub profile: ErrorProfile<T>,
    pub discrete_runs: Vec<DiscreteRun<T>>,
}

/// Finite-scale comparison of continuous and h-discrete hit densities of one
/// orbit. No limit is claimed; the curve shows the fraction against horizon.
#[allow(clippy::too_many_arguments)]
pub fn density_comparison<T: Scalar>(
    subject: Subject<T>,
    target: TargetFunction<T>,
    patch: CompactPatch<T>,
    epsilon: T,
    t_max: T,
    step: T,
    h_list: &[T],
    prec: &EvalPrecision<T>,
    threads: usize,
) -> Result<ComparisonReport<T>> {
    if !(epsilon > T::zero()) {
        return Err(Error::invalid(format!("epsilon must be positive, got {epsilon}")));
    }
    if h_list.is_empty() {
        return Err(Error::invalid("h_list must not be empty"));
    }
    let spec = ShiftSpec::continuous(t_max, step)?;
    let profile = continuous_sweep(subject, target, patch, spec, prec, threads)?;
    let weighted = profile.samples.len() - 1;
    let mut entries = Vec::with_capacity(h_list.len());
    let mut discrete_runs = Vec::with_capacity(h_list.len());
    for &h in h_list {
        let n_max = discrete_horizon(t_max, h);
        if n_max == 0 {
            return Err(Error::invalid(format!("h = {h} exceeds t_max = {t_max}")));
        }
        let run = discrete_run(&profile, h, n_max, threads)?;
        let matching = discrete_horizon(T::from_usize_lossy(n_max) * h, step).min(weighted);
        let continuous = density_prefix(&profile, epsilon, matching)?;
        entries.push(ComparisonEntry {
            h,
            n_max,
            continuous,
            discrete: hit_density(&run.profile, epsilon)?,
            subsampled: run.subsampled,
        });
        discrete_runs.push(run);
    }
    let curve = density_curve(&profile, epsilon, CURVE_POINTS)?;
    Ok(ComparisonReport {
        epsilon,
        entries,
        curve,
        profile,
        discrete_runs,
    })
}
