//! Branch-tracked logarithm of `zeta(s)`.
//!
//! The branch at `2 + it` is the one closest to the logarithm of the Euler
//! product (principal there, since `Re zeta > 0` on `sigma >= 2`). It is then
//! carried along the horizontal segment to `s`, choosing at each step the
//! branch of `log zeta` nearest to the previous value. Steps are halved when
//! the argument jumps by more than `MAX_ARG_JUMP`.

use std::f64::consts::PI;
use std::sync::LazyLock;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::kernels::precision::EvalPrecision;
use crate::kernels::zeta::riemann_zeta;
use crate::scalar::{real_pow_neg, Scalar};

/// Abscissa where continuation starts.
pub const START_SIGMA: f64 = 2.0;
/// Nominal continuation step in `sigma`.
pub const BASE_STEP: f64 = 0.05;
/// `|zeta|` below this aborts the continuation.
pub const ZERO_PROXIMITY: f64 = 1e-6;
/// Largest accepted change of `arg zeta` between consecutive steps.
pub const MAX_ARG_JUMP: f64 = PI / 4.0;
/// Step halvings allowed before giving up.
const MAX_HALVINGS: u32 = 24;
/// Total evaluation budget along one path.
const MAX_STEPS: usize = 20_000;

const EULER_PRIME_BOUND: usize = 10_000;

static PRIMES: LazyLock<Vec<usize>> = LazyLock::new(|| {
    let mut composite = vec![false; EULER_PRIME_BOUND + 1];
    let mut primes = Vec::new();
    for n in 2..=EULER_PRIME_BOUND {
        if !composite[n] {
            primes.push(n);
            let mut m = n * n;
            while m <= EULER_PRIME_BOUND {
                composite[m] = true;
                m += n;
            }
        }
    }
    primes
});

/// Truncated `sum_p -Log(1 - p^{-s})` for `Re s > 1`.
///
/// With primes up to 10^4 the truncation error at `sigma = 2` is below `1e-5`,
/// which is more than enough to select a branch.
pub fn log_euler_product<T: Scalar>(s: Complex<T>) -> Complex<T> {
    let one = Complex::new(T::one(), T::zero());
    PRIMES.iter().fold(Complex::new(T::zero(), T::zero()), |acc, &p| {
        acc - (one - real_pow_neg(T::from_usize_lossy(p), s)).ln()
    })
}

/// The logarithm of `w` whose imaginary part is closest to `reference`.
fn nearest_branch<T: Scalar>(w: Complex<T>, reference: T) -> Complex<T> {
    let principal = w.ln();
    let two_pi = T::lit(2.0 * PI);
    let turns = ((reference - principal.im) / two_pi).round();
    Complex::new(principal.re, principal.im + turns * two_pi)
}

fn zeta_checked<T: Scalar>(s: Complex<T>, prec: &EvalPrecision<T>) -> Result<Complex<T>> {
    let w = riemann_zeta(s, prec)?;
    let modulus = w.norm();
    if modulus < T::lit(ZERO_PROXIMITY) {
        return Err(Error::ZeroProximity {
            re: s.re.as_f64(),
            im: s.im.as_f64(),
            modulus: modulus.as_f64(),
        });
    }
    Ok(w)
}

/// `log zeta(s)` on the branch obtained by horizontal continuation from `sigma = 2`.
///
/// Accepts `Re s > 1/2`. Fails with [`Error::ZeroProximity`] when `|zeta|`
/// drops below `1e-6` on the path, with [`Error::Pole`] when the path runs
/// through `s = 1`, and with [`Error::Precision`] when the step budget is
/// exhausted.
pub fn log_zeta_tracked<T: Scalar>(s: Complex<T>, prec: &EvalPrecision<T>) -> Result<Complex<T>> {
    if !(s.re.is_finite() && s.im.is_finite()) {
        return Err(Error::Domain(format!("non-finite argument {s}")));
    }
    if s.re <= T::lit(0.5) {
        return Err(Error::Domain(format!(
            "log zeta is tracked only for Re s > 1/2, got {s}"
        )));
    }
    if s.im == T::zero() && s.re <= T::one() {
        return Err(Error::Pole {
            re: s.re.as_f64(),
            im: s.im.as_f64(),
        });
    }

    let t = s.im;
    let start = Complex::new(T::lit(START_SIGMA), t);
    let w0 = zeta_checked(start, prec)?;
    let mut log = nearest_branch(w0, log_euler_product(start).im);

    let target = s.re;
    let direction = if target < start.re { -T::one() } else { T::one() };
    let base = T::lit(BASE_STEP);
    let mut sigma = start.re;
    let min_step = base * T::lit(0.5).powi(MAX_HALVINGS as i32);
    let mut step = base;
    let mut evaluations = 0usize;

    while sigma != target {
        evaluations += 1;
        if evaluations > MAX_STEPS {
            return Err(Error::Precision {
                estimate: f64::INFINITY,
                target: prec.target_tol.as_f64(),
            });
        }
        let remaining = (target - sigma).abs();
        let (next, is_last) = if remaining <= step {
            (target, true)
        } else {
            (sigma + direction * step, false)
        };
        let w = zeta_checked(Complex::new(next, t), prec)?;
        let candidate = nearest_branch(w, log.im);
        if (candidate.im - log.im).abs() > T::lit(MAX_ARG_JUMP) {
            step = step * T::lit(0.5);
            if step < min_step {
                return Err(Error::Precision {
                    estimate: (candidate.im - log.im).abs().as_f64(),
                    target: MAX_ARG_JUMP,
                });
            }
            continue;
        }
        log = candidate;
        sigma = if is_last { target } else { next };
        step = (step * T::lit(2.0)).min(base);
    }
    Ok(log)
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Complex<f64>;

    #[test]
    fn euler_product_matches_zeta_at_two() {
        let l = log_euler_product(C::new(2.0, 0.0));
        assert!((l.re - (PI * PI / 6.0).ln()).abs() < 1e-5);
        assert!(l.im.abs() < 1e-15);
    }

    #[test]
    fn real_axis_right_of_pole() {
        let p = EvalPrecision::default();
        let l = log_zeta_tracked(C::new(3.0, 0.0), &p).unwrap();
        assert!((l.re - 1.202_056_903_159_594_3_f64.ln()).abs() < 1e-13);
        assert_eq!(l.im, 0.0);
    }

    #[test]
    fn real_axis_left_of_pole_is_rejected() {
        let p = EvalPrecision::default();
        let err = log_zeta_tracked(C::new(0.75, 0.0), &p).unwrap_err();
        assert!(matches!(err, Error::Pole { .. }));
    }

    #[test]
    fn outside_half_plane_is_rejected() {
        let p = EvalPrecision::default();
        let err = log_zeta_tracked(C::new(0.5, 3.0), &p).unwrap_err();
        assert!(matches!(err, Error::Domain(_)));
    }

    #[test]
    fn continuation_is_continuous_in_sigma() {
        // Im log zeta along a horizontal line varies slowly away from zeros,
        // so the tracked branch must not jump between nearby abscissae.
        let p = EvalPrecision::default();
        let mut prev: Option<C> = None;
        for k in 0..40 {
            let s = C::new(0.55 + 0.01 * k as f64, 21.0);
            let l = log_zeta_tracked(s, &p).unwrap();
            if let Some(q) = prev {
                assert!((l.im - q.im).abs() < 0.5, "jump at {s}: {q} -> {l}");
            }
            prev = Some(l);
        }
    }
}
