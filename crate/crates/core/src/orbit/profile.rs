use num_complex::Complex;

use crate::error::{Error, ErrorClass, Result};
use crate::kernels::EvalPrecision;
use crate::orbit::shift::ShiftSpec;
use crate::orbit::subject::Subject;
use crate::scalar::{shift_up, Scalar};
use crate::space::{CompactPatch, TargetFunction};

/// One `(subject, K, f)` triple of an error functional, shifted at rate `h`.
#[derive(Debug, Clone, PartialEq)]
pub struct Component<T> {
    pub subject: Subject<T>,
    pub target: TargetFunction<T>,
    pub patch: CompactPatch<T>,
    /// Shift rate: the component is evaluated at `s + i h tau`.
    pub rate: T,
}

impl<T: Scalar> Component<T> {
    pub fn new(subject: Subject<T>, target: TargetFunction<T>, patch: CompactPatch<T>) -> Self {
        Self {
            subject,
            target,
            patch,
            rate: T::one(),
        }
    }

    pub fn with_rate(mut self, rate: T) -> Self {
        self.rate = rate;
        self
    }
}

/// Where a profile's error values come from.
#[derive(Debug, Clone, PartialEq)]
pub enum ProfileSource<T> {
    /// `E(tau) = max_K |subject(s + i tau) - f(s)|`.
    Single(Component<T>),
    /// `E(tau) = max_n max_{K_n} |subject_n(s + i h_n tau) - f_n(s)|`.
    Joint(Vec<Component<T>>),
}

impl<T: Scalar> ProfileSource<T> {
    pub fn components(&self) -> &[Component<T>] {
        match self {
            ProfileSource::Single(c) => std::slice::from_ref(c),
            ProfileSource::Joint(cs) => cs,
        }
    }

    /// Finest grid resolution among the components.
    pub fn grid_step(&self) -> T {
        self.components()
            .iter()
            .map(|c| c.patch.grid_step())
            .fold(T::infinity(), T::min)
    }
}

/// Why a sample has no error value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SampleFailure<T> {
    pub class: ErrorClass,
    /// Grid point (unshifted) at which evaluation failed.
    pub point: Option<Complex<T>>,
    /// Component index, for profiles with more than one component.
    pub component: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample<T> {
    pub tau: T,
    pub outcome: std::result::Result<T, SampleFailure<T>>,
}

impl<T: Scalar> Sample<T> {
    pub fn error(&self) -> Option<T> {
        self.outcome.ok()
    }

    pub fn is_ok(&self) -> bool {
        self.outcome.is_ok()
    }
}

/// A sampled map `tau_j -> E(tau_j)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorProfile<T> {
    pub spec: ShiftSpec<T>,
    pub source: ProfileSource<T>,
    pub prec: EvalPrecision<T>,
    pub samples: Vec<Sample<T>>,
}

impl<T: Scalar> ErrorProfile<T> {
    pub fn ok_count(&self) -> usize {
        self.samples.iter().filter(|s| s.is_ok()).count()
    }

    pub fn error_count(&self) -> usize {
        self.samples.len() - self.ok_count()
    }

    pub fn max_error(&self) -> Option<T> {
        self.samples.iter().filter_map(Sample::error).reduce(T::max)
    }
}

/// A component with its target values cached on the grid.
pub(crate) struct Prepared<'a, T> {
    component: &'a Component<T>,
    target_values: Vec<Complex<T>>,
}

impl<'a, T: Scalar> Prepared<'a, T> {
    pub(crate) fn new(component: &'a Component<T>, prec: &EvalPrecision<T>) -> Result<Self> {
        Ok(Self {
            target_values: component.target.grid_values(&component.patch, prec)?,
            component,
        })
    }

    /// `max_K |subject(s + i rate tau) - f(s)|`, failing at the first bad grid point.
    pub(crate) fn error_at(
        &self,
        tau: T,
        prec: &EvalPrecision<T>,
    ) -> std::result::Result<T, (Error, Complex<T>)> {
        let rate = self.component.rate;
        let shift = if rate == T::one() { tau } else { rate * tau };
        let mut sup = T::zero();
        for (&s, &f) in self
            .component
            .patch
            .grid_points()
            .iter()
            .zip(self.target_values.iter())
        {
            let z = self
                .component
                .subject
                .eval(shift_up(s, shift), prec)
                .map_err(|e| (e, s))?;
            sup = sup.max((z - f).norm());
        }
        Ok(sup)
    }
}

/// Evaluator for a whole profile source.
pub(crate) struct PreparedSource<'a, T> {
    parts: Vec<Prepared<'a, T>>,
    joint: bool,
    prec: EvalPrecision<T>,
}

impl<'a, T: Scalar> PreparedSource<'a, T> {
    pub(crate) fn new(source: &'a ProfileSource<T>, prec: &EvalPrecision<T>) -> Result<Self> {
        prec.validate()?;
        let parts = source
            .components()
            .iter()
            .map(|c| Prepared::new(c, prec))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            parts,
            joint: source.components().len() > 1,
            prec: *prec,
        })
    }

    pub(crate) fn sample(&self, tau: T) -> Sample<T> {
        let mut worst = T::zero();
        for (idx, part) in self.parts.iter().enumerate() {
            match part.error_at(tau, &self.prec) {
                Ok(e) => worst = worst.max(e),
                Err((err, point)) => {
                    return Sample {
                        tau,
                        outcome: Err(SampleFailure {
                            class: err.class(),
                            point: Some(point),
                            component: self.joint.then_some(idx),
                        }),
                    }
                }
            }
        }
        Sample {
            tau,
            outcome: Ok(worst),
        }
    }

    /// `E(tau)` with kernel errors annotated by the offending grid point.
    pub(crate) fn error_at(&self, tau: T) -> Result<T> {
        let mut worst = T::zero();
        for part in &self.parts {
            let e = part
                .error_at(tau, &self.prec)
                .map_err(|(err, p)| err.at_point(p.re.as_f64(), p.im.as_f64()))?;
            worst = worst.max(e);
        }
        Ok(worst)
    }
}
