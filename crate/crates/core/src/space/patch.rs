//! Compact patches of a strip and their evaluation grids.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::space::strip::StripDomain;

/// Grids larger than this are rejected.
pub const MAX_GRID_POINTS: usize = 4_000_000;

/// Slack for lattice counts, so that `(0.9 - 0.6) / 0.1` counts as 3 steps.
const LATTICE_SLACK: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PatchShape<T> {
    /// `[sigma_lo, sigma_hi] x [t_lo, t_hi]`; degenerate sides are allowed.
    Rectangle {
        sigma_lo: T,
        sigma_hi: T,
        t_lo: T,
        t_hi: T,
    },
    Disc { center: Complex<T>, radius: T },
}

impl<T: Scalar> PatchShape<T> {
    pub fn rectangle(sigma_lo: T, sigma_hi: T, t_lo: T, t_hi: T) -> Self {
        PatchShape::Rectangle {
            sigma_lo,
            sigma_hi,
            t_lo,
            t_hi,
        }
    }

    pub fn disc(center: Complex<T>, radius: T) -> Self {
        PatchShape::Disc { center, radius }
    }

    /// Closed-set membership, with a relative slack of `1e-12` on the boundary.
    pub fn contains(&self, s: Complex<T>) -> bool {
        let slack = T::lit(1e-12);
        match *self {
            PatchShape::Rectangle {
                sigma_lo,
                sigma_hi,
                t_lo,
                t_hi,
            } => {
                let tol_s = slack * (T::one() + sigma_hi.abs().max(sigma_lo.abs()));
                let tol_t = slack * (T::one() + t_hi.abs().max(t_lo.abs()));
                s.re >= sigma_lo - tol_s
                    && s.re <= sigma_hi + tol_s
                    && s.im >= t_lo - tol_t
                    && s.im <= t_hi + tol_t
            }
            PatchShape::Disc { center, radius } => {
                (s - center).norm() <= radius * (T::one() + slack) + slack
            }
        }
    }

    /// Real-part extent of the closed shape.
    pub fn sigma_range(&self) -> (T, T) {
        match *self {
            PatchShape::Rectangle {
                sigma_lo, sigma_hi, ..
            } => (sigma_lo, sigma_hi),
            PatchShape::Disc { center, radius } => (center.re - radius, center.re + radius),
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            PatchShape::Rectangle {
                sigma_lo,
                sigma_hi,
                t_lo,
                t_hi,
            } => {
                let finite = [sigma_lo, sigma_hi, t_lo, t_hi].iter().all(|v| v.is_finite());
                if !finite || sigma_lo > sigma_hi || t_lo > t_hi {
                    return Err(Error::Geometry(format!(
                        "rectangle needs finite sides with sigma_lo <= sigma_hi and t_lo <= t_hi, \
                         got [{sigma_lo}, {sigma_hi}] x [{t_lo}, {t_hi}]"
                    )));
                }
            }
            PatchShape::Disc { center, radius } => {
                if !(center.re.is_finite() && center.im.is_finite() && radius.is_finite())
                    || radius < T::zero()
                {
                    return Err(Error::Geometry(format!(
                        "disc needs a finite center and radius >= 0, got center {center}, radius {radius}"
                    )));
                }
            }
        }
        Ok(())
    }
}

/// A compact set `K` inside a strip, represented by a finite grid.
#[derive(Debug, Clone, PartialEq)]
pub struct CompactPatch<T> {
    shape: PatchShape<T>,
    domain: StripDomain<T>,
    grid_step: T,
    grid_points: Vec<Complex<T>>,
}

fn lattice_len<T: Scalar>(extent: T, step: T) -> Result<usize> {
    let count = (extent / step + T::lit(LATTICE_SLACK)).floor();
    let count = count
        .to_usize()
        .filter(|&c| c < MAX_GRID_POINTS)
        .ok_or_else(|| Error::invalid(format!("grid_step {step} too fine for extent {extent}")))?;
    Ok(count + 1)
}

impl<T: Scalar> CompactPatch<T> {
    /// Build the grid of `shape`, which must sit strictly inside `domain`.
    ///
    /// Rectangles use the lattice `(sigma_lo + i h, t_lo + j h)`; discs keep
    /// the points of the bounding-square lattice that fall inside the disc.
    pub fn build(shape: PatchShape<T>, grid_step: T, domain: StripDomain<T>) -> Result<Self> {
        if !(grid_step > T::zero() && grid_step.is_finite()) {
            return Err(Error::invalid(format!("grid_step must be positive, got {grid_step}")));
        }
        shape.validate()?;
        let (lo, hi) = shape.sigma_range();
        if !domain.contains_interval(lo, hi) {
            return Err(Error::Geometry(format!(
                "patch with sigma range [{lo}, {hi}] is not strictly inside the strip ({}, {})",
                domain.sigma_lo(),
                domain.sigma_hi()
            )));
        }

        let grid_points = match shape {
            PatchShape::Rectangle {
                sigma_lo,
                sigma_hi,
                t_lo,
                t_hi,
            } => {
                let ns = lattice_len(sigma_hi - sigma_lo, grid_step)?;
                let nt = lattice_len(t_hi - t_lo, grid_step)?;
                if ns.saturating_mul(nt) > MAX_GRID_POINTS {
                    return Err(Error::invalid("rectangle grid has too many points"));
                }
                let mut pts = Vec::with_capacity(ns * nt);
                for i in 0..ns {
                    let re = (sigma_lo + T::from_usize_lossy(i) * grid_step).min(sigma_hi);
                    for j in 0..nt {
                        let im = (t_lo + T::from_usize_lossy(j) * grid_step).min(t_hi);
                        pts.push(Complex::new(re, im));
                    }
                }
                pts
            }
            PatchShape::Disc { center, radius } => {
                let n = lattice_len(radius + radius, grid_step)?;
                if n.saturating_mul(n) > MAX_GRID_POINTS {
                    return Err(Error::invalid("disc grid has too many points"));
                }
                let corner = Complex::new(center.re - radius, center.im - radius);
                let mut pts = Vec::new();
                for i in 0..n {
                    let re = corner.re + T::from_usize_lossy(i) * grid_step;
                    for j in 0..n {
                        let p = Complex::new(re, corner.im + T::from_usize_lossy(j) * grid_step);
                        if shape.contains(p) {
                            pts.push(p);
                        }
                    }
                }
                pts
            }
        };
        if grid_points.is_empty() {
            return Err(Error::Geometry("patch grid is empty".into()));
        }
        Ok(Self {
            shape,
            domain,
            grid_step,
            grid_points,
        })
    }

    /// [`CompactPatch::build`] in the classical strip `1/2 < Re s < 1`.
    pub fn in_critical_strip(shape: PatchShape<T>, grid_step: T) -> Result<Self> {
        Self::build(shape, grid_step, StripDomain::classical())
    }

    pub fn shape(&self) -> &PatchShape<T> {
        &self.shape
    }

    pub fn domain(&self) -> &StripDomain<T> {
        &self.domain
    }

    pub fn grid_step(&self) -> T {
        self.grid_step
    }

    pub fn grid_points(&self) -> &[Complex<T>] {
        &self.grid_points
    }

    pub fn len(&self) -> usize {
        self.grid_points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid_points.is_empty()
    }
}

/// `build_patch` with an explicit strip.
pub fn build_patch<T: Scalar>(
    shape: PatchShape<T>,
    grid_step: T,
    domain: StripDomain<T>,
) -> Result<CompactPatch<T>> {
    CompactPatch::build(shape, grid_step, domain)
}
