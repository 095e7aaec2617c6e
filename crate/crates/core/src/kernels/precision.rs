use crate::error::{Error, Result};
use crate::kernels::bernoulli::MAX_BERNOULLI_ORDER;
use crate::scalar::Scalar;

/// Truncation parameters of the Euler–Maclaurin continuation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPrecision<T> {
    /// Number of directly summed terms `M`; `None` picks `max(32, ceil(1.3 (|t| + 10)))`.
    pub shift_terms: Option<usize>,
    /// Number of Bernoulli correction terms `K`.
    pub bernoulli_order: usize,
    /// Largest accepted internal error estimate.
    pub target_tol: T,
}

impl<T: Scalar> Default for EvalPrecision<T> {
    fn default() -> Self {
        Self {
            shift_terms: None,
            bernoulli_order: 12,
            target_tol: T::lit(1e-10),
        }
    }
}

impl<T: Scalar> EvalPrecision<T> {
    pub fn new(shift_terms: Option<usize>, bernoulli_order: usize, target_tol: T) -> Result<Self> {
        let prec = Self {
            shift_terms,
            bernoulli_order,
            target_tol,
        };
        prec.validate()?;
        Ok(prec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.shift_terms == Some(0) {
            return Err(Error::invalid("shift_terms must be at least 1"));
        }
        if self.bernoulli_order == 0 || self.bernoulli_order > MAX_BERNOULLI_ORDER {
            return Err(Error::invalid(format!(
                "bernoulli_order must lie in 1..={MAX_BERNOULLI_ORDER}"
            )));
        }
        if !(self.target_tol > T::zero() && self.target_tol.is_finite()) {
            return Err(Error::invalid("target_tol must be a positive finite number"));
        }
        Ok(())
    }

    /// Number of directly summed terms used at height `t`.
    pub fn shift_terms_for(&self, t: T) -> usize {
        self.shift_terms.unwrap_or_else(|| {
            let auto = (T::lit(1.3) * (t.abs() + T::lit(10.0))).ceil();
            auto.to_usize().unwrap_or(usize::MAX).max(32)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_terms() {
        let p = EvalPrecision::<f64>::default();
        assert_eq!(p.shift_terms_for(0.0), 32);
        assert_eq!(p.shift_terms_for(100.0), 143);
        assert_eq!(p.shift_terms_for(-1000.0), 1313);
        assert_eq!(p.bernoulli_order, 12);
        assert_eq!(p.target_tol, 1e-10);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(EvalPrecision::<f64>::new(Some(0), 12, 1e-10).is_err());
        assert!(EvalPrecision::<f64>::new(None, 0, 1e-10).is_err());
        assert!(EvalPrecision::<f64>::new(None, 31, 1e-10).is_err());
        assert!(EvalPrecision::<f64>::new(None, 12, 0.0).is_err());
        assert!(EvalPrecision::<f64>::new(None, 12, f64::NAN).is_err());
        assert!(EvalPrecision::<f64>::new(Some(50), 8, 1e-8).is_ok());
    }
}
