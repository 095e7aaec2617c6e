use num_complex::Complex;

use crate::error::Result;
use crate::kernels::{hurwitz_zeta, log_zeta_tracked, riemann_zeta, EvalPrecision, HurwitzParams};
use crate::scalar::Scalar;
use crate::space::TargetFunction;

/// The function whose vertical shifts form the orbit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Subject<T> {
    Riemann,
    Hurwitz(HurwitzParams<T>),
    /// Branch-tracked `log zeta`.
    LogRiemann,
}

impl<T: Scalar> Subject<T> {
    pub fn eval(&self, s: Complex<T>, prec: &EvalPrecision<T>) -> Result<Complex<T>> {
        match self {
            Subject::Riemann => riemann_zeta(s, prec),
            Subject::Hurwitz(params) => hurwitz_zeta(s, *params, prec),
            Subject::LogRiemann => log_zeta_tracked(s, prec),
        }
    }

    /// The subject itself shifted by `tau`, as a target.
    pub fn as_target(&self, tau: T) -> TargetFunction<T> {
        match self {
            Subject::Riemann => TargetFunction::ZetaShift { tau },
            Subject::Hurwitz(params) => TargetFunction::HurwitzShift {
                params: *params,
                tau,
            },
            Subject::LogRiemann => TargetFunction::LogZetaShift { tau },
        }
    }
}
