use crate::error::{Error, Result};
use crate::kernels::EvalPrecision;
use crate::orbit::{
    continuous_sweep, discrete_orbit, hit_density, DensityEstimate, ErrorProfile, Sample,
    ShiftMinimum, ShiftSpec, Subject,
};
use crate::scalar::Scalar;
use crate::space::CompactPatch;

/// Number of self-approximating shifts reported.
pub const BEST_SHIFT_COUNT: usize = 10;

/// Self-approximating shifts below this `tau` are trivial and not reported.
pub const BEST_SHIFT_FLOOR: f64 = 1.0;

const MULTIPLE_SLACK: f64 = 1e-9;

/// The h-discrete orbit next to a continuous sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteRun<T> {
    pub h: T,
    /// `true` when `h` is an integer multiple of the sweep step and the
    /// orbit samples were copied from the continuous sweep.
    pub subsampled: bool,
    pub profile: ErrorProfile<T>,
}

/// `Some(k)` when `h = k * step` for an integer `k >= 1`.
pub fn step_multiple<T: Scalar>(h: T, step: T) -> Option<usize> {
    let ratio = h / step;
    let k = ratio.round();
    if k >= T::one() && (ratio - k).abs() <= T::lit(MULTIPLE_SLACK) * k {
        k.to_usize()
    } else {
        None
    }
}

/// `N_max = floor(t_max / h)`.
pub fn discrete_horizon<T: Scalar>(t_max: T, h: T) -> usize {
    (t_max / h + T::lit(MULTIPLE_SLACK)).floor().to_usize().unwrap_or(0)
}

/// The orbit `tau = n h`, `n = 0..=n_max`, either taken from `continuous`
/// (when `h` is a multiple of its step) or freshly evaluated.
pub(crate) fn discrete_run<T: Scalar>(
    continuous: &ErrorProfile<T>,
    h: T,
    n_max: usize,
    threads: usize,
) -> Result<DiscreteRun<T>> {
    let spec = ShiftSpec::discrete(h, n_max)?;
    let step = continuous.spec.spacing();
    let component = &continuous.source.components()[0];
    match step_multiple(h, step) {
        Some(k) if n_max * k < continuous.samples.len() => {
            // Copied samples keep the continuous tau at which they were evaluated.
            let samples = (0..=n_max).map(|n| continuous.samples[n * k]).collect();
            Ok(DiscreteRun {
                h,
                subsampled: true,
                profile: ErrorProfile {
                    spec,
                    source: continuous.source.clone(),
                    prec: continuous.prec,
                    samples,
                },
            })
        }
        _ => Ok(DiscreteRun {
            h,
            subsampled: false,
            profile: discrete_orbit(
                component.subject,
                component.target.clone(),
                component.patch.clone(),
                spec,
                &continuous.prec,
                threads,
            )?,
        }),
    }
}

/// Local minima of the ok samples with `tau >= floor`, best first, ties by `tau`.
pub fn local_minima<T: Scalar>(profile: &ErrorProfile<T>, floor: T, count: usize) -> Vec<ShiftMinimum<T>> {
    let samples = &profile.samples;
    let at = |j: usize| samples.get(j).and_then(Sample::error);
    let mut minima: Vec<ShiftMinimum<T>> = samples
        .iter()
        .enumerate()
        .filter_map(|(j, s)| {
            let e = s.error()?;
            if s.tau < floor {
                return None;
            }
            let left = j.checked_sub(1).and_then(at);
            let right = at(j + 1);
            let is_min = left.map_or(true, |l| e <= l) && right.map_or(true, |r| e < r);
            is_min.then_some(ShiftMinimum { tau: s.tau, error: e })
        })
        .collect();
    minima.sort_by(|a, b| {
        a.error
            .partial_cmp(&b.error)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.tau.partial_cmp(&b.tau).unwrap_or(std::cmp::Ordering::Equal))
    });
    minima.truncate(count);
    minima
}

/// Bagchi-style self-approximation of a subject on `K`.
#[derive(Debug, Clone, PartialEq)]
pub struct RecurrenceReport<T> {
    pub patch: CompactPatch<T>,
    pub epsilon: T,
    pub horizon: T,
    pub step: T,
    pub continuous_density: DensityEstimate<T>,
    pub discrete_densities: Vec<(T, DensityEstimate<T>)>,
    pub discrete_runs: Vec<DiscreteRun<T>>,
    pub best_self_shifts: Vec<ShiftMinimum<T>>,
    pub profile: ErrorProfile<T>,
}

/// `E_self(tau) = max_K |subject(s + i tau) - subject(s)|`, its continuous
/// density and the density of each h-discrete orbit up to the same horizon.
#[allow(clippy::too_many_arguments)]
pub fn self_recurrence<T: Scalar>(
    subject: Subject<T>,
    patch: CompactPatch<T>,
    epsilon: T,
    t_max: T,
    step: T,
    h_list: &[T],
    prec: &EvalPrecision<T>,
    threads: usize,
) -> Result<RecurrenceReport<T>> {
    if !(epsilon > T::zero()) {
        return Err(Error::invalid(format!("epsilon must be positive, got {epsilon}")));
    }
    let spec = ShiftSpec::continuous(t_max, step)?;
    let profile = continuous_sweep(subject, subject.as_target(T::zero()), patch.clone(), spec, prec, threads)?;
    let continuous_density = hit_density(&profile, epsilon)?;
    let mut discrete_runs = Vec::with_capacity(h_list.len());
    let mut discrete_densities = Vec::with_capacity(h_list.len());
    for &h in h_list {
        let run = discrete_run(&profile, h, discrete_horizon(t_max, h), threads)?;
        discrete_densities.push((h, hit_density(&run.profile, epsilon)?));
        discrete_runs.push(run);
    }
    let best_self_shifts = local_minima(&profile, T::lit(BEST_SHIFT_FLOOR), BEST_SHIFT_COUNT);
    Ok(RecurrenceReport {
        patch,
        epsilon,
        horizon: t_max,
        step,
        continuous_density,
        discrete_densities,
        discrete_runs,
        best_self_shifts,
        profile,
    })
}
