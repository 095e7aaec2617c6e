use num_complex::Complex;

use crate::error::Result;
use crate::kernels::{
    exp_poly_eval, hurwitz_zeta, log_zeta_tracked, riemann_zeta, EvalPrecision, HurwitzParams,
    RationalPolynomial,
};
use crate::scalar::{shift_up, Scalar};
use crate::space::fit::Polynomial;
use crate::space::patch::CompactPatch;

/// Anything that can be evaluated pointwise on a patch grid.
pub trait Evaluable<T: Scalar> {
    fn eval(&self, s: Complex<T>) -> Result<Complex<T>>;
}

impl<T, F> Evaluable<T> for F
where
    T: Scalar,
    F: Fn(Complex<T>) -> Result<Complex<T>>,
{
    fn eval(&self, s: Complex<T>) -> Result<Complex<T>> {
        self(s)
    }
}

impl<T: Scalar> Evaluable<T> for Polynomial<T> {
    fn eval(&self, s: Complex<T>) -> Result<Complex<T>> {
        Ok(Polynomial::eval(self, s))
    }
}

/// The function `f` of an approximation problem `(K, f, eps)`.
#[derive(Debug, Clone, PartialEq)]
pub enum TargetFunction<T> {
    Polynomial(Polynomial<T>),
    /// `e^{P(s)}`, nowhere zero.
    ExpPolynomial(RationalPolynomial),
    /// `zeta(s + i tau)`.
    ZetaShift { tau: T },
    /// `zeta(s + i tau; alpha)`.
    HurwitzShift { params: HurwitzParams<T>, tau: T },
    /// Branch-tracked `log zeta(s + i tau)`.
    LogZetaShift { tau: T },
}

impl<T: Scalar> TargetFunction<T> {
    pub fn eval(&self, s: Complex<T>, prec: &EvalPrecision<T>) -> Result<Complex<T>> {
        match self {
            TargetFunction::Polynomial(p) => Ok(p.eval(s)),
            TargetFunction::ExpPolynomial(p) => exp_poly_eval(p, s),
            TargetFunction::ZetaShift { tau } => riemann_zeta(shift_up(s, *tau), prec),
            TargetFunction::HurwitzShift { params, tau } => {
                hurwitz_zeta(shift_up(s, *tau), *params, prec)
            }
            TargetFunction::LogZetaShift { tau } => log_zeta_tracked(shift_up(s, *tau), prec),
        }
    }

    /// Fix the kernel precision, giving a plain [`Evaluable`].
    pub fn bind<'a>(&'a self, prec: &'a EvalPrecision<T>) -> BoundTarget<'a, T> {
        BoundTarget { target: self, prec }
    }

    /// Whether the variant is nonvanishing by construction.
    pub fn is_nonvanishing_by_construction(&self) -> bool {
        matches!(self, TargetFunction::ExpPolynomial(_))
    }

    /// `true` when no grid value of the target is exactly zero.
    ///
    /// Exponential polynomials are always nonvanishing; other variants are
    /// checked on the grid of `patch`.
    pub fn nonvanishing_on(&self, patch: &CompactPatch<T>, prec: &EvalPrecision<T>) -> Result<bool> {
        if self.is_nonvanishing_by_construction() {
            return Ok(true);
        }
        for &s in patch.grid_points() {
            if self.eval(s, prec)?.norm() == T::zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Values on the grid of `patch`, in grid order.
    pub fn grid_values(
        &self,
        patch: &CompactPatch<T>,
        prec: &EvalPrecision<T>,
    ) -> Result<Vec<Complex<T>>> {
        patch
            .grid_points()
            .iter()
            .map(|&s| {
                self.eval(s, prec)
                    .map_err(|e| e.at_point(s.re.as_f64(), s.im.as_f64()))
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy)]
pub struct BoundTarget<'a, T> {
    target: &'a TargetFunction<T>,
    prec: &'a EvalPrecision<T>,
}

impl<T: Scalar> Evaluable<T> for BoundTarget<'_, T> {
    fn eval(&self, s: Complex<T>) -> Result<Complex<T>> {
        self.target.eval(s, self.prec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::space::patch::PatchShape;

    type C = Complex<f64>;

    #[test]
    fn zeta_shift_is_shifted_zeta() {
        let prec = EvalPrecision::default();
        let t = TargetFunction::ZetaShift { tau: 3.0 };
        let s = C::new(0.7, 0.25);
        assert_eq!(
            t.eval(s, &prec).unwrap(),
            riemann_zeta(C::new(0.7, 3.25), &prec).unwrap()
        );
    }

    #[test]
    fn nonvanishing_flags() {
        let prec = EvalPrecision::default();
        let patch =
            CompactPatch::in_critical_strip(PatchShape::rectangle(0.6, 0.8, 0.0, 0.2), 0.1).unwrap();
        let e = TargetFunction::<f64>::ExpPolynomial(RationalPolynomial::x());
        assert!(e.nonvanishing_on(&patch, &prec).unwrap());
        // p(s) = s - 0.6 vanishes at the grid corner
        let p = TargetFunction::Polynomial(Polynomial::new(C::new(0.6, 0.0), vec![C::new(0.0, 0.0), C::new(1.0, 0.0)]));
        assert!(!p.nonvanishing_on(&patch, &prec).unwrap());
        let z = TargetFunction::ZetaShift { tau: 0.0 };
        assert!(z.nonvanishing_on(&patch, &prec).unwrap());
    }
}
