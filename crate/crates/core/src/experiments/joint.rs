use crate::error::{Error, Result};
use crate::kernels::EvalPrecision;
use crate::orbit::{sweep_source, Component, ErrorProfile, ProfileSource, ShiftSpec};
use crate::scalar::Scalar;

/// Components `(subject_n, K_n, f_n)` with shift rates `h_n`.
///
/// Each component's strip is the domain of its patch.
#[derive(Debug, Clone, PartialEq)]
pub struct JointSpec<T> {
    pub components: Vec<Component<T>>,
    pub epsilon: Option<T>,
}

impl<T: Scalar> JointSpec<T> {
    pub fn new(components: Vec<Component<T>>) -> Result<Self> {
        let spec = Self {
            components,
            epsilon: None,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.components.is_empty() {
            return Err(Error::invalid("joint spec needs at least one component"));
        }
        for (i, c) in self.components.iter().enumerate() {
            if !(c.rate > T::zero() && c.rate.is_finite()) {
                return Err(Error::invalid(format!(
                    "shift rate h_{} must be positive, got {}",
                    i + 1,
                    c.rate
                )));
            }
        }
        if let Some(eps) = self.epsilon {
            if !(eps > T::zero()) {
                return Err(Error::invalid(format!("epsilon must be positive, got {eps}")));
            }
        }
        Ok(())
    }
}

/// `E_joint(tau) = max_n max_{K_n} |subject_n(s + i h_n tau) - f_n(s)|` over
/// `tau = j * step`.
pub fn joint_sweep<T: Scalar>(
    spec: &JointSpec<T>,
    t_max: T,
    step: T,
    prec: &EvalPrecision<T>,
    threads: usize,
) -> Result<ErrorProfile<T>> {
    spec.validate()?;
    sweep_source(
        ProfileSource::Joint(spec.components.clone()),
        ShiftSpec::continuous(t_max, step)?,
        prec,
        threads,
    )
}
