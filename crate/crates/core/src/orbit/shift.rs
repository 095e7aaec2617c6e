use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Slack in `floor(t_max / step)` so that `1 / 0.1` counts ten steps.
const COUNT_SLACK: f64 = 1e-9;

/// Which shifts `tau` an orbit visits.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ShiftSpec<T> {
    /// `tau = j * step` for `j = 0..=floor(t_max / step)`.
    Continuous { t_max: T, step: T },
    /// `tau = n * h` for `n = 0..=n_max`.
    Discrete { h: T, n_max: usize },
}

impl<T: Scalar> ShiftSpec<T> {
    pub fn continuous(t_max: T, step: T) -> Result<Self> {
        let spec = ShiftSpec::Continuous { t_max, step };
        spec.validate()?;
        Ok(spec)
    }

    pub fn discrete(h: T, n_max: usize) -> Result<Self> {
        let spec = ShiftSpec::Discrete { h, n_max };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            ShiftSpec::Continuous { t_max, step } => {
                if !(t_max > T::zero() && t_max.is_finite()) {
                    return Err(Error::invalid(format!("t_max must be positive, got {t_max}")));
                }
                if !(step > T::zero() && step <= t_max) {
                    return Err(Error::invalid(format!(
                        "step must satisfy 0 < step <= t_max, got {step}"
                    )));
                }
                if (t_max / step).as_f64() > 1e8 {
                    return Err(Error::invalid("sweep would exceed 1e8 samples"));
                }
            }
            ShiftSpec::Discrete { h, n_max } => {
                if !(h > T::zero() && h.is_finite()) {
                    return Err(Error::invalid(format!("h must be positive, got {h}")));
                }
                if n_max > 100_000_000 {
                    return Err(Error::invalid("orbit would exceed 1e8 samples"));
                }
            }
        }
        Ok(())
    }

    /// Number of samples, including `tau = 0`.
    pub fn sample_count(&self) -> usize {
        match *self {
            ShiftSpec::Continuous { t_max, step } => {
                (t_max / step + T::lit(COUNT_SLACK)).floor().to_usize().unwrap_or(0) + 1
            }
            ShiftSpec::Discrete { n_max, .. } => n_max + 1,
        }
    }

    /// Spacing between consecutive shifts.
    pub fn spacing(&self) -> T {
        match *self {
            ShiftSpec::Continuous { step, .. } => step,
            ShiftSpec::Discrete { h, .. } => h,
        }
    }

    /// The `j`-th shift, computed as one product `j * spacing`.
    pub fn tau(&self, j: usize) -> T {
        T::from_usize_lossy(j) * self.spacing()
    }

    pub fn is_continuous(&self) -> bool {
        matches!(self, ShiftSpec::Continuous { .. })
    }
}
