use crate::error::{Error, Result};
use crate::kernels::EvalPrecision;
use crate::orbit::profile::{Component, ErrorProfile, PreparedSource, ProfileSource, Sample};
use crate::orbit::shift::ShiftSpec;
use crate::orbit::subject::Subject;
use crate::parallel::map_indexed;
use crate::scalar::Scalar;
use crate::space::{CompactPatch, TargetFunction};

/// `E(tau) = max_{s in K} |subject(s + i tau) - f(s)|` on the grid of `K`.
///
/// Kernel failures come back wrapped in [`Error::AtPoint`] with the grid point.
pub fn error_at<T: Scalar>(
    subject: Subject<T>,
    target: &TargetFunction<T>,
    patch: &CompactPatch<T>,
    tau: T,
    prec: &EvalPrecision<T>,
) -> Result<T> {
    if !(tau >= T::zero() && tau.is_finite()) {
        return Err(Error::invalid(format!("shift tau must be >= 0, got {tau}")));
    }
    let source = ProfileSource::Single(Component::new(subject, target.clone(), patch.clone()));
    PreparedSource::new(&source, prec)?.error_at(tau)
}

/// Evaluate every shift of `spec` for `source`.
///
/// Samples are independent; with `threads > 1` the index range is split
/// across a rayon pool and reassembled in index order, so the result does not
/// depend on the thread count.
pub fn sweep_source<T: Scalar>(
    source: ProfileSource<T>,
    spec: ShiftSpec<T>,
    prec: &EvalPrecision<T>,
    threads: usize,
) -> Result<ErrorProfile<T>> {
    spec.validate()?;
    let samples: Vec<Sample<T>> = {
        let prepared = PreparedSource::new(&source, prec)?;
        map_indexed(spec.sample_count(), threads, |j| prepared.sample(spec.tau(j)))?
    };
    Ok(ErrorProfile {
        spec,
        source,
        prec: *prec,
        samples,
    })
}

/// Samples at `tau = j * step`, `j = 0..=floor(t_max / step)`.
pub fn continuous_sweep<T: Scalar>(
    subject: Subject<T>,
    target: TargetFunction<T>,
    patch: CompactPatch<T>,
    spec: ShiftSpec<T>,
    prec: &EvalPrecision<T>,
    threads: usize,
) -> Result<ErrorProfile<T>> {
    if !spec.is_continuous() {
        return Err(Error::invalid("continuous_sweep needs a continuous shift spec"));
    }
    sweep_source(
        ProfileSource::Single(Component::new(subject, target, patch)),
        spec,
        prec,
        threads,
    )
}

/// Samples at `tau = n * h`, `n = 0..=n_max`.
///
/// Sample `n` is evaluated exactly like the continuous sample at the same
/// `tau`, so `T_h^n = T_{hn}` holds sample by sample.
pub fn discrete_orbit<T: Scalar>(
    subject: Subject<T>,
    target: TargetFunction<T>,
    patch: CompactPatch<T>,
    spec: ShiftSpec<T>,
    prec: &EvalPrecision<T>,
    threads: usize,
) -> Result<ErrorProfile<T>> {
    if spec.is_continuous() {
        return Err(Error::invalid("discrete_orbit needs a discrete shift spec"));
    }
    sweep_source(
        ProfileSource::Single(Component::new(subject, target, patch)),
        spec,
        prec,
        threads,
    )
}
