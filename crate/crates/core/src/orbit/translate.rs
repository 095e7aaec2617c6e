use num_complex::Complex;

use crate::error::Result;
use crate::scalar::{shift_up, Scalar};
use crate::space::Evaluable;

/// `T_tau f = f(. + i tau)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Translated<F, T> {
    inner: F,
    tau: T,
}

/// Translate `f` vertically by `tau`.
pub fn translate<T: Scalar, F: Evaluable<T>>(f: F, tau: T) -> Translated<F, T> {
    Translated { inner: f, tau }
}

impl<F, T: Scalar> Translated<F, T> {
    /// `T_b T_a = T_{a+b}`: the shifts are added once, never nested.
    pub fn translate(self, tau: T) -> Self {
        Translated {
            inner: self.inner,
            tau: self.tau + tau,
        }
    }

    pub fn shift(&self) -> T {
        self.tau
    }

    pub fn inner(&self) -> &F {
        &self.inner
    }
}

impl<T: Scalar, F: Evaluable<T>> Evaluable<T> for Translated<F, T> {
    fn eval(&self, s: Complex<T>) -> Result<Complex<T>> {
        self.inner.eval(shift_up(s, self.tau))
    }
}
