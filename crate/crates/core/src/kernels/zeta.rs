//! Riemann and Hurwitz zeta-functions by Euler–Maclaurin summation.
//!
//! For `a > 0` and a cut-off `N = a + M`,
//!
//! ```text
//! zeta(s; a) = sum_{n<M} (n + a)^{-s} + N^{1-s}/(s - 1) + N^{-s}/2
//!            + sum_{k=1}^{K} B_{2k}/(2k)! * s(s+1)...(s+2k-2) * N^{-s-2k+1} + R
//! ```
//!
//! The magnitude of the last correction term is the error estimate.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::kernels::bernoulli::em_coefficient;
use crate::kernels::precision::EvalPrecision;
use crate::scalar::{is_finite, real_pow_neg, Scalar};

/// Distance from `s = 1` below which the pole is reported.
pub const POLE_RADIUS: f64 = 1e-12;

/// Hurwitz parameter `alpha` in `(0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct HurwitzParams<T> {
    alpha: T,
}

impl<T: Scalar> HurwitzParams<T> {
    pub fn new(alpha: T) -> Result<Self> {
        if alpha > T::zero() && alpha <= T::one() {
            Ok(Self { alpha })
        } else {
            Err(Error::invalid(format!(
                "Hurwitz parameter alpha = {alpha} outside (0, 1]"
            )))
        }
    }

    pub fn alpha(&self) -> T {
        self.alpha
    }
}

/// A kernel value together with its truncation error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluation<T> {
    pub value: Complex<T>,
    pub error_estimate: T,
}

pub(crate) fn check_pole<T: Scalar>(s: Complex<T>) -> Result<()> {
    let gap = (s - Complex::new(T::one(), T::zero())).norm();
    if gap < T::lit(POLE_RADIUS) {
        return Err(Error::Pole {
            re: s.re.as_f64(),
            im: s.im.as_f64(),
        });
    }
    Ok(())
}

/// Euler–Maclaurin evaluation of `sum_{n>=0} (n + a)^{-s}` for any `a > 0`.
///
/// This is the shared core of [`riemann_zeta`] and [`hurwitz_zeta`]; it also
/// accepts shifted parameters `a > 1`, which the Hurwitz recurrence
/// `zeta(s; a) = a^{-s} + zeta(s; a + 1)` needs.
pub fn euler_maclaurin<T: Scalar>(
    s: Complex<T>,
    a: T,
    prec: &EvalPrecision<T>,
) -> Result<Evaluation<T>> {
    prec.validate()?;
    if !is_finite(s) {
        return Err(Error::Domain(format!("non-finite argument {s}")));
    }
    if !(a > T::zero() && a.is_finite()) {
        return Err(Error::invalid(format!("shift parameter a = {a} must be positive")));
    }
    check_pole(s)?;

    let m = prec.shift_terms_for(s.im);
    let mut head = Complex::new(T::zero(), T::zero());
    for n in 0..m {
        head = head + real_pow_neg(T::from_usize_lossy(n) + a, s);
    }

    let cutoff = T::from_usize_lossy(m) + a;
    let one = Complex::new(T::one(), T::zero());
    let cut_pow = real_pow_neg(cutoff, s);
    let tail = cut_pow.scale(cutoff) / (s - one);
    let half = cut_pow.scale(T::lit(0.5));

    // rising factorial s(s+1)...(s+2k-2) times N^{-s-2k+1}
    let inv_sq = (cutoff * cutoff).recip();
    let mut rising = s;
    let mut power = cut_pow.unscale(cutoff);
    let mut corrections = Complex::new(T::zero(), T::zero());
    let mut last = T::zero();
    for k in 1..=prec.bernoulli_order {
        if k > 1 {
            let j = T::from_usize_lossy(2 * k - 3);
            rising = rising * (s + j) * (s + j + T::one());
            power = power.scale(inv_sq);
        }
        let term = (rising * power).scale(T::lit(em_coefficient(k)));
        corrections = corrections + term;
        last = term.norm();
    }

    let value = head + tail + half + corrections;
    if !is_finite(value) || !last.is_finite() {
        return Err(Error::Precision {
            estimate: f64::INFINITY,
            target: prec.target_tol.as_f64(),
        });
    }
    if last > prec.target_tol {
        return Err(Error::Precision {
            estimate: last.as_f64(),
            target: prec.target_tol.as_f64(),
        });
    }
    Ok(Evaluation {
        value,
        error_estimate: last,
    })
}

/// Riemann zeta-function `zeta(s)`, continued to `s != 1`.
pub fn riemann_zeta<T: Scalar>(s: Complex<T>, prec: &EvalPrecision<T>) -> Result<Complex<T>> {
    euler_maclaurin(s, T::one(), prec).map(|e| e.value)
}

/// Hurwitz zeta-function `zeta(s; alpha)`; `alpha = 1` dispatches to [`riemann_zeta`].
pub fn hurwitz_zeta<T: Scalar>(
    s: Complex<T>,
    params: HurwitzParams<T>,
    prec: &EvalPrecision<T>,
) -> Result<Complex<T>> {
    if params.alpha == T::one() {
        return riemann_zeta(s, prec);
    }
    euler_maclaurin(s, params.alpha, prec).map(|e| e.value)
}
