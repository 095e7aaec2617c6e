use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Open vertical strip `sigma_lo < Re s < sigma_hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StripDomain<T> {
    sigma_lo: T,
    sigma_hi: T,
}

impl<T: Scalar> StripDomain<T> {
    pub fn new(sigma_lo: T, sigma_hi: T) -> Result<Self> {
        if !(sigma_lo.is_finite() && sigma_hi.is_finite() && sigma_lo < sigma_hi) {
            return Err(Error::Geometry(format!(
                "strip needs finite sigma_lo < sigma_hi, got ({sigma_lo}, {sigma_hi})"
            )));
        }
        Ok(Self { sigma_lo, sigma_hi })
    }

    /// The critical half-strip `1/2 < Re s < 1`.
    pub fn classical() -> Self {
        Self {
            sigma_lo: T::lit(0.5),
            sigma_hi: T::one(),
        }
    }

    pub fn sigma_lo(&self) -> T {
        self.sigma_lo
    }

    pub fn sigma_hi(&self) -> T {
        self.sigma_hi
    }

    pub fn width(&self) -> T {
        self.sigma_hi - self.sigma_lo
    }

    pub fn is_classical(&self) -> bool {
        *self == Self::classical()
    }

    /// `[a, b]` lies strictly inside `(sigma_lo, sigma_hi)`.
    pub fn contains_interval(&self, a: T, b: T) -> bool {
        a > self.sigma_lo && b < self.sigma_hi
    }
}

impl<T: Scalar> Default for StripDomain<T> {
    fn default() -> Self {
        Self::classical()
    }
}
