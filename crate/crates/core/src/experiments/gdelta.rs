use num_complex::Complex;

use crate::error::{Error, ErrorClass, Result};
use crate::kernels::{log_zeta_tracked, EvalPrecision, RationalPolynomial};
use crate::orbit::{error_at, Component, PreparedSource, ProfileSource, Subject};
use crate::parallel::map_indexed;
use crate::scalar::{shift_up, Scalar};
use crate::space::{encode_base, enumerate_base, mergelyan_fit, CompactPatch, Exhaustion, StripDomain, TargetFunction};

/// One base element `(K_N, e^P, 1/N)` scanned along `t0 * n`.
#[derive(Debug, Clone, PartialEq)]
pub struct GdeltaEntry<T> {
    /// Base index, when `(N, P)` has one that fits in 64 bits.
    pub m: Option<u64>,
    pub n: u64,
    pub poly: RationalPolynomial,
    /// Smallest `n` with `E(n t0) < 1/N`.
    pub first_hit_n: Option<u64>,
    /// Smallest error seen and where; the scan stops at the first hit.
    pub best_error: Option<T>,
    pub best_n: Option<u64>,
    /// Number of `n` actually evaluated.
    pub scanned: u64,
    /// Shifts whose evaluation failed.
    pub failures: Vec<(u64, ErrorClass)>,
    /// Set when `e^P` itself could not be evaluated on `K_N`.
    pub target_failure: Option<ErrorClass>,
}

impl<T: Scalar> GdeltaEntry<T> {
    pub fn threshold(&self) -> T {
        T::one() / T::from_usize_lossy(self.n as usize)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GdeltaScanResult<T> {
    pub t0: T,
    pub n_max: u64,
    pub grid_step: T,
    pub entries: Vec<GdeltaEntry<T>>,
}

/// The sets `K_N` of the classical strip, gridded at `grid_step`.
pub fn base_patch<T: Scalar>(n: u64, grid_step: T) -> Result<CompactPatch<T>> {
    let ex = Exhaustion::new(StripDomain::classical(), grid_step)?;
    ex.patch(usize::try_from(n).map_err(|_| Error::invalid("N too large"))?)
}

fn scan_entry<T: Scalar>(
    m: Option<u64>,
    n: u64,
    poly: RationalPolynomial,
    t0: T,
    n_max: u64,
    grid_step: T,
    prec: &EvalPrecision<T>,
) -> Result<GdeltaEntry<T>> {
    let patch = base_patch(n, grid_step)?;
    let mut entry = GdeltaEntry {
        m,
        n,
        poly,
        first_hit_n: None,
        best_error: None,
        best_n: None,
        scanned: 0,
        failures: Vec::new(),
        target_failure: None,
    };
    let source = ProfileSource::Single(Component::new(
        Subject::Riemann,
        TargetFunction::ExpPolynomial(entry.poly.clone()),
        patch,
    ));
    let prepared = match PreparedSource::new(&source, prec) {
        Ok(p) => p,
        Err(e) => {
            entry.target_failure = Some(e.class());
            return Ok(entry);
        }
    };
    let threshold = entry.threshold();
    for k in 1..=n_max {
        entry.scanned = k;
        let tau = T::from_usize_lossy(k as usize) * t0;
        match prepared.sample(tau).outcome {
            Ok(e) => {
                if entry.best_error.map_or(true, |b| e < b) {
                    entry.best_error = Some(e);
                    entry.best_n = Some(k);
                }
                if e < threshold {
                    entry.first_hit_n = Some(k);
                    break;
                }
            }
            Err(f) => entry.failures.push((k, f.class)),
        }
    }
    Ok(entry)
}

fn check_scan<T: Scalar>(t0: T, n_max: u64, grid_step: T) -> Result<()> {
    if !(t0 > T::zero() && t0.is_finite()) {
        return Err(Error::invalid(format!("t0 must be positive, got {t0}")));
    }
    if n_max == 0 {
        return Err(Error::invalid("n_max must be at least 1"));
    }
    if !(grid_step > T::zero() && grid_step.is_finite()) {
        return Err(Error::invalid(format!("grid_step must be positive, got {grid_step}")));
    }
    Ok(())
}

/// Scan `m = 1..=m_max` of the base enumeration for membership of `t0` in `J_m`.
pub fn gdelta_scan<T: Scalar>(
    t0: T,
    m_max: u64,
    n_max: u64,
    grid_step: T,
    prec: &EvalPrecision<T>,
    threads: usize,
) -> Result<GdeltaScanResult<T>> {
    if m_max == 0 {
        return Err(Error::invalid("m_max must be at least 1"));
    }
    let pairs: Vec<(u64, RationalPolynomial)> = (1..=m_max)
        .map(|m| {
            let b = enumerate_base(m);
            (b.n, b.poly)
        })
        .collect();
    gdelta_scan_pairs(t0, &pairs, n_max, grid_step, prec, threads)
}

/// Scan explicitly given `(N, P)` pairs.
pub fn gdelta_scan_pairs<T: Scalar>(
    t0: T,
    pairs: &[(u64, RationalPolynomial)],
    n_max: u64,
    grid_step: T,
    prec: &EvalPrecision<T>,
    threads: usize,
) -> Result<GdeltaScanResult<T>> {
    check_scan(t0, n_max, grid_step)?;
    prec.validate()?;
    if pairs.iter().any(|(n, _)| *n == 0) {
        return Err(Error::invalid("N must be at least 1"));
    }
    let entries = map_indexed(pairs.len(), threads, |i| {
        let (n, poly) = &pairs[i];
        scan_entry(encode_base(*n, poly), *n, poly.clone(), t0, n_max, grid_step, prec)
    })?
    .into_iter()
    .collect::<Result<Vec<_>>>()?;
    Ok(GdeltaScanResult {
        t0,
        n_max,
        grid_step,
        entries,
    })
}

/// Re-evaluate the error of a recorded hit from scratch.
pub fn verify_hit<T: Scalar>(
    entry: &GdeltaEntry<T>,
    t0: T,
    grid_step: T,
    prec: &EvalPrecision<T>,
) -> Result<Option<T>> {
    let Some(k) = entry.first_hit_n else {
        return Ok(None);
    };
    let patch = base_patch(entry.n, grid_step)?;
    let tau = T::from_usize_lossy(k as usize) * t0;
    let target = TargetFunction::ExpPolynomial(entry.poly.clone());
    error_at(Subject::Riemann, &target, &patch, tau, prec).map(Some)
}

/// A base element built so that `e^P` approximates `zeta(s + i n0 t0)` on `K_N`.
#[derive(Debug, Clone, PartialEq)]
pub struct PlantedBase<T> {
    pub n: u64,
    pub poly: RationalPolynomial,
    pub m: Option<u64>,
    /// Residual of the floating-point fit to `log zeta(s + i n0 t0)`.
    pub fit_residual: T,
    /// Residual after rounding the coefficients to rationals.
    pub rational_residual: T,
}

/// Fit `P` of the given degree to branch-tracked `log zeta(s + i n0 t0)` on
/// the grid of `K_N`, then round it to Gaussian-rational coefficients.
pub fn plant_base<T: Scalar>(
    n: u64,
    t0: T,
    n0: u64,
    degree: usize,
    grid_step: T,
    prec: &EvalPrecision<T>,
) -> Result<PlantedBase<T>> {
    check_scan(t0, n0.max(1), grid_step)?;
    let patch = base_patch(n, grid_step)?;
    let tau = T::from_usize_lossy(n0 as usize) * t0;
    let samples = patch
        .grid_points()
        .iter()
        .map(|&s| Ok((s, log_zeta_tracked(shift_up(s, tau), prec)?)))
        .collect::<Result<Vec<(Complex<T>, Complex<T>)>>>()?;
    let fit = mergelyan_fit(&samples, degree)?;
    let poly = RationalPolynomial::approximate(&fit.polynomial.to_monomial())?;
    let rational_residual = samples
        .iter()
        .map(|&(s, v)| (poly.eval(s) - v).norm())
        .fold(T::zero(), T::max);
    Ok(PlantedBase {
        n,
        m: encode_base(n, &poly),
        poly,
        fit_residual: fit.residual,
        rational_residual,
    })
}
