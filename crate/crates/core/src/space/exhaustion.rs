use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::space::patch::{CompactPatch, PatchShape};
use crate::space::strip::StripDomain;

/// Compact exhaustion `K_1 ⊆ K_2 ⊆ ...` of a strip by rectangles.
///
/// `K_n = [lo + w/(n+1), hi - w/(n+1)] x [-n, n]` with `w = hi - lo`. For the
/// classical strip the margin is `1/(2n+2)`; `K_1` degenerates to the
/// segment `Re s = 3/4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Exhaustion<T> {
    domain: StripDomain<T>,
    grid_step: T,
}

impl<T: Scalar> Exhaustion<T> {
    pub fn new(domain: StripDomain<T>, grid_step: T) -> Result<Self> {
        if !(grid_step > T::zero() && grid_step.is_finite()) {
            return Err(Error::invalid(format!("grid_step must be positive, got {grid_step}")));
        }
        Ok(Self { domain, grid_step })
    }

    pub fn domain(&self) -> &StripDomain<T> {
        &self.domain
    }

    pub fn grid_step(&self) -> T {
        self.grid_step
    }

    pub fn shape(&self, n: usize) -> Result<PatchShape<T>> {
        if n == 0 {
            return Err(Error::invalid("exhaustion index starts at 1"));
        }
        let nf = T::from_usize_lossy(n);
        let margin = self.domain.width() / (nf + T::one());
        Ok(PatchShape::rectangle(
            self.domain.sigma_lo() + margin,
            self.domain.sigma_hi() - margin,
            -nf,
            nf,
        ))
    }

    /// `K_n` with its grid.
    pub fn patch(&self, n: usize) -> Result<CompactPatch<T>> {
        CompactPatch::build(self.shape(n)?, self.grid_step, self.domain)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex;

    #[test]
    fn classical_margins() {
        let ex = Exhaustion::new(StripDomain::<f64>::classical(), 0.1).unwrap();
        match ex.shape(1).unwrap() {
            PatchShape::Rectangle { sigma_lo, sigma_hi, t_lo, t_hi } => {
                assert_eq!((sigma_lo, sigma_hi, t_lo, t_hi), (0.75, 0.75, -1.0, 1.0));
            }
            _ => unreachable!(),
        }
        match ex.shape(3).unwrap() {
            PatchShape::Rectangle { sigma_lo, sigma_hi, .. } => {
                assert!((sigma_lo - (0.5 + 1.0 / 8.0)).abs() < 1e-15);
                assert!((sigma_hi - (1.0 - 1.0 / 8.0)).abs() < 1e-15);
            }
            _ => unreachable!(),
        }
        assert_eq!(ex.patch(1).unwrap().len(), 21);
        assert!(ex.shape(0).is_err());
    }

    #[test]
    fn nested() {
        let ex = Exhaustion::new(StripDomain::<f64>::classical(), 0.05).unwrap();
        for n in 1..=20 {
            let inner = ex.patch(n).unwrap();
            let outer = ex.shape(n + 1).unwrap();
            assert!(inner.grid_points().iter().all(|&s| outer.contains(s)), "n = {n}");
        }
        assert!(!ex.shape(2).unwrap().contains(Complex::new(0.75, 2.5)));
    }
}
