use crate::error::{Error, Result};
use crate::orbit::profile::ErrorProfile;
use crate::orbit::shift::ShiftSpec;
use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DensityMode {
    Continuous,
    Discrete,
}

impl DensityMode {
    pub fn as_str(self) -> &'static str {
        match self {
            DensityMode::Continuous => "continuous",
            DensityMode::Discrete => "discrete",
        }
    }
}

/// Finite-horizon proxy for a lower density of `{tau : E(tau) < epsilon}`.
///
/// Continuous: left Riemann sum of the indicator over `[0, horizon)` with
/// weight `step`, so `hit_fraction * horizon = step * hit_count`.
/// Discrete: `hit_count / n_max` over `n = 0..n_max`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityEstimate<T> {
    pub epsilon: T,
    pub mode: DensityMode,
    /// `T_max` (continuous) or `N_max` (discrete, stored as a real).
    pub horizon: T,
    pub hit_count: usize,
    /// Number of weighted samples.
    pub counted: usize,
    /// Weighted samples that errored; they are also misses.
    pub error_count: usize,
    pub hit_fraction: T,
}

/// Number of samples that carry weight for a given spec.
fn weighted_samples<T: Scalar>(spec: &ShiftSpec<T>) -> usize {
    match *spec {
        ShiftSpec::Continuous { .. } => spec.sample_count() - 1,
        ShiftSpec::Discrete { n_max, .. } => n_max,
    }
}

/// Hit density of `profile` at threshold `epsilon` (strict `E < epsilon`).
pub fn hit_density<T: Scalar>(profile: &ErrorProfile<T>, epsilon: T) -> Result<DensityEstimate<T>> {
    density_prefix(profile, epsilon, weighted_samples(&profile.spec))
}

/// Density over the first `counted` weighted samples only.
pub(crate) fn density_prefix<T: Scalar>(
    profile: &ErrorProfile<T>,
    epsilon: T,
    counted: usize,
) -> Result<DensityEstimate<T>> {
    if !(epsilon > T::zero()) {
        return Err(Error::invalid(format!("epsilon must be positive, got {epsilon}")));
    }
    if counted > weighted_samples(&profile.spec) {
        return Err(Error::invalid("density horizon exceeds the profile"));
    }
    let mut hit_count = 0;
    let mut error_count = 0;
    for sample in &profile.samples[..counted] {
        match sample.outcome {
            Ok(e) if e < epsilon => hit_count += 1,
            Ok(_) => {}
            Err(_) => error_count += 1,
        }
    }
    let (mode, horizon) = match profile.spec {
        ShiftSpec::Continuous { step, .. } => {
            (DensityMode::Continuous, T::from_usize_lossy(counted) * step)
        }
        ShiftSpec::Discrete { .. } => (DensityMode::Discrete, T::from_usize_lossy(counted)),
    };
    let hit_fraction = if counted == 0 {
        T::zero()
    } else {
        T::from_usize_lossy(hit_count) / T::from_usize_lossy(counted)
    };
    Ok(DensityEstimate {
        epsilon,
        mode,
        horizon,
        hit_count,
        counted,
        error_count,
        hit_fraction,
    })
}

/// Hit fraction as a function of growing horizon, at `points` evenly spaced
/// prefixes (the last one is the full profile).
pub fn density_curve<T: Scalar>(
    profile: &ErrorProfile<T>,
    epsilon: T,
    points: usize,
) -> Result<Vec<DensityEstimate<T>>> {
    if points == 0 {
        return Err(Error::invalid("density curve needs at least one point"));
    }
    let total = weighted_samples(&profile.spec);
    let points = points.min(total.max(1));
    (1..=points)
        .map(|k| density_prefix(profile, epsilon, total * k / points))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernels::EvalPrecision;
    use crate::orbit::profile::{Component, ProfileSource, Sample, SampleFailure};
    use crate::orbit::subject::Subject;
    use crate::space::{CompactPatch, PatchShape, TargetFunction};
    use crate::ErrorClass;

    fn profile(spec: ShiftSpec<f64>, errors: &[Option<f64>]) -> ErrorProfile<f64> {
        let patch = CompactPatch::in_critical_strip(PatchShape::disc(num_complex::Complex::new(0.75, 0.0), 0.01), 0.01).unwrap();
        ErrorProfile {
            spec,
            source: ProfileSource::Single(Component::new(
                Subject::Riemann,
                TargetFunction::ZetaShift { tau: 0.0 },
                patch,
            )),
            prec: EvalPrecision::default(),
            samples: errors
                .iter()
                .enumerate()
                .map(|(j, e)| Sample {
                    tau: spec.tau(j),
                    outcome: e.ok_or(SampleFailure {
                        class: ErrorClass::Pole,
                        point: None,
                        component: None,
                    }),
                })
                .collect(),
        }
    }

    #[test]
    fn hand_count() {
        let p = profile(ShiftSpec::continuous(2.0, 1.0).unwrap(), &[Some(0.1), Some(0.3), Some(0.5)]);
        let d = hit_density(&p, 0.4).unwrap();
        assert_eq!(d.hit_count, 2);
        assert_eq!(d.hit_fraction, 1.0);
        assert_eq!(d.horizon, 2.0);
    }

    #[test]
    fn strict_inequality_and_errors() {
        let p = profile(
            ShiftSpec::continuous(4.0, 1.0).unwrap(),
            &[Some(0.5), None, Some(0.2), Some(0.7), Some(0.0)],
        );
        let d = hit_density(&p, 0.5).unwrap();
        assert_eq!((d.hit_count, d.error_count), (1, 1));
        assert_eq!(d.hit_fraction, 0.25);
        assert_eq!(hit_density(&p, 10.0).unwrap().hit_fraction, 0.75);
        assert!(hit_density(&p, 0.0).is_err());
    }

    #[test]
    fn discrete_counts() {
        let p = profile(ShiftSpec::discrete(0.5, 3).unwrap(), &[Some(0.1), Some(2.0), Some(0.1), Some(0.1)]);
        let d = hit_density(&p, 1.0).unwrap();
        assert_eq!(d.mode, DensityMode::Discrete);
        assert_eq!(d.hit_count, 2);
        assert!((d.hit_fraction - 2.0 / 3.0).abs() < 1e-15);
        let empty = profile(ShiftSpec::discrete(0.5, 0).unwrap(), &[Some(0.1)]);
        assert_eq!(hit_density(&empty, 1.0).unwrap().hit_fraction, 0.0);
    }

    #[test]
    fn curve_ends_at_full_density() {
        let errors: Vec<_> = (0..=20).map(|j| Some((j % 3) as f64)).collect();
        let p = profile(ShiftSpec::continuous(20.0, 1.0).unwrap(), &errors);
        let curve = density_curve(&p, 0.5, 4).unwrap();
        assert_eq!(curve.len(), 4);
        assert_eq!(curve[3], hit_density(&p, 0.5).unwrap());
        assert_eq!(curve[0].horizon, 5.0);
    }
}
