use std::fmt::{Debug, Display, LowerExp};

use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, ToPrimitive};

/// Real scalar type used by every kernel: f32 or f64.
pub trait Scalar:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + Debug
    + Display
    + LowerExp
    + Default
    + Send
    + Sync
    + 'static
{
    /// Lossy conversion from an f64 literal.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("f64 literal representable in scalar type")
    }

    #[inline]
    fn from_usize_lossy(n: usize) -> Self {
        Self::from_usize(n).expect("usize representable in scalar type")
    }

    #[inline]
    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// `x^{-s}` for real `x > 0`, written so that conjugating `s` conjugates the result bit-for-bit.
#[inline]
pub(crate) fn real_pow_neg<T: Scalar>(x: T, s: Complex<T>) -> Complex<T> {
    let ln = x.ln();
    let modulus = (-s.re * ln).exp();
    let phase = -s.im * ln;
    Complex::new(modulus * phase.cos(), modulus * phase.sin())
}

/// Shift a point vertically: `s + i·tau`.
#[inline]
pub fn shift_up<T: Scalar>(s: Complex<T>, tau: T) -> Complex<T> {
    Complex::new(s.re, s.im + tau)
}

#[inline]
pub(crate) fn is_finite<T: Scalar>(z: Complex<T>) -> bool {
    z.re.is_finite() && z.im.is_finite()
}
