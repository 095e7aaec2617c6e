use crate::error::{Error, Result};
use crate::orbit::profile::{ErrorProfile, PreparedSource};
use crate::scalar::Scalar;

pub const GOLDEN_MAX_ITERATIONS: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShiftMinimum<T> {
    pub tau: T,
    pub error: T,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BestShift<T> {
    /// Best ok sample; ties go to the smallest `tau`.
    pub coarse: ShiftMinimum<T>,
    /// Golden-section result within one sample spacing of `coarse`, never worse than it.
    pub refined: Option<ShiftMinimum<T>>,
}

impl<T: Scalar> BestShift<T> {
    pub fn best(&self) -> ShiftMinimum<T> {
        self.refined.unwrap_or(self.coarse)
    }
}

/// Argmin of the ok samples of `profile`.
pub fn coarse_minimum<T: Scalar>(profile: &ErrorProfile<T>) -> Result<ShiftMinimum<T>> {
    let mut best: Option<ShiftMinimum<T>> = None;
    for sample in &profile.samples {
        if let Ok(error) = sample.outcome {
            if best.map_or(true, |b| error < b.error) {
                best = Some(ShiftMinimum {
                    tau: sample.tau,
                    error,
                });
            }
        }
    }
    best.ok_or(Error::NoValidSample)
}

/// Coarse argmin, optionally refined by golden-section search on `E(tau)`.
pub fn search_best_shift<T: Scalar>(profile: &ErrorProfile<T>, refine: bool) -> Result<BestShift<T>> {
    let coarse = coarse_minimum(profile)?;
    if !refine {
        return Ok(BestShift {
            coarse,
            refined: None,
        });
    }
    let source = PreparedSource::new(&profile.source, &profile.prec)?;
    let objective = |tau: T| source.error_at(tau).unwrap_or(T::infinity());
    let delta = profile.spec.spacing();
    let lo = (coarse.tau - delta).max(T::zero());
    let hi = coarse.tau + delta;
    let candidate = golden_section(objective, lo, hi, GOLDEN_MAX_ITERATIONS);
    let refined = if candidate.error < coarse.error {
        candidate
    } else {
        coarse
    };
    Ok(BestShift {
        coarse,
        refined: Some(refined),
    })
}

/// Golden-section minimisation of `f` on `[lo, hi]`.
pub fn golden_section<T: Scalar, F: Fn(T) -> T>(
    f: F,
    lo: T,
    hi: T,
    iterations: usize,
) -> ShiftMinimum<T> {
    let inv_phi = (T::lit(5.0).sqrt() - T::one()) / T::lit(2.0);
    let (mut a, mut b) = (lo, hi);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..iterations {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    if fc <= fd {
        ShiftMinimum { tau: c, error: fc }
    } else {
        ShiftMinimum { tau: d, error: fd }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_finds_parabola_minimum() {
        let m = golden_section(|x: f64| (x - 0.3).powi(2) + 1.0, 0.0, 1.0, 40);
        assert!((m.tau - 0.3).abs() < 1e-7);
        assert!((m.error - 1.0).abs() < 1e-14);
    }

    #[test]
    fn golden_handles_abs() {
        let m = golden_section(|x: f64| (x - 50.0).abs(), 49.99, 50.01, 40);
        assert!((m.tau - 50.0).abs() < 1e-9);
    }
}
