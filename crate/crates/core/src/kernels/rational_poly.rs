//! Polynomials with Gaussian-rational coefficients and the `e^{P(s)}` target.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex;
use num_rational::Rational64;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A Gaussian rational `a + b i` with `a, b` in `Q`.
pub type GaussianRational = Complex<Rational64>;

/// Polynomial in `Q(i)[X]`, coefficients in increasing degree.
///
/// Trailing zero coefficients are stripped; the zero polynomial is a single
/// zero constant of degree 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RationalPolynomial {
    coeffs: Vec<GaussianRational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(GaussianRational::zero());
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::new(Vec::new())
    }

    /// The identity polynomial `X`.
    pub fn x() -> Self {
        Self::new(vec![
            GaussianRational::zero(),
            Complex::new(Rational64::from_integer(1), Rational64::zero()),
        ])
    }

    /// Real integer coefficients.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| Complex::new(Rational64::from_integer(c), Rational64::zero()))
                .collect(),
        )
    }

    /// Nearest rational coefficients (continued fractions) to floating-point ones.
    pub fn approximate<T: Scalar>(coeffs: &[Complex<T>]) -> Result<Self> {
        let convert = |x: T| {
            Rational64::approximate_float(x.as_f64()).ok_or_else(|| {
                Error::invalid(format!("coefficient {x} has no 64-bit rational approximation"))
            })
        };
        let coeffs = coeffs
            .iter()
            .map(|c| Ok(Complex::new(convert(c.re)?, convert(c.im)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    /// Horner evaluation of `P(s)` in the scalar type.
    pub fn eval<T: Scalar>(&self, s: Complex<T>) -> Complex<T> {
        self.coeffs
            .iter()
            .rev()
            .fold(Complex::new(T::zero(), T::zero()), |acc, c| {
                acc * s + Complex::new(rational_to::<T>(c.re), rational_to::<T>(c.im))
            })
    }
}

fn rational_to<T: Scalar>(r: Rational64) -> T {
    T::lit(r.to_f64().unwrap_or(f64::NAN))
}

/// Largest `|Re P(s)|` accepted by [`exp_poly_eval`].
pub fn exp_exponent_limit<T: Scalar>() -> T {
    T::lit(700.0).min(T::max_value().ln() * T::lit(0.99))
}

/// `e^{P(s)}`, never zero.
///
/// Fails with [`Error::Overflow`] when `|Re P(s)|` exceeds 700 (so the result
/// neither overflows nor underflows to zero).
pub fn exp_poly_eval<T: Scalar>(poly: &RationalPolynomial, s: Complex<T>) -> Result<Complex<T>> {
    let exponent = poly.eval(s);
    let limit = exp_exponent_limit::<T>();
    if !(exponent.re.abs() <= limit) || !exponent.im.is_finite() {
        return Err(Error::Overflow {
            re_exponent: exponent.re.as_f64(),
        });
    }
    Ok(exponent.exp())
}

fn fmt_rational(r: &Rational64) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for RationalPolynomial {
    /// Comma-separated Gaussian rationals `a+bi`, lowest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.coeffs.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            let im = fmt_rational(&c.im);
            let sep = if im.starts_with('-') { "" } else { "+" };
            write!(f, "{}{sep}{im}i", fmt_rational(&c.re))?;
        }
        Ok(())
    }
}

/// Split a complex literal `a+bi`, `a-bi`, `a`, or `bi` into its two parts.
pub fn split_complex_literal(text: &str) -> Option<(&str, &str)> {
    let text = text.trim();
    if let Some(body) = text.strip_suffix('i') {
        // the sign separating real and imaginary parts is the last +/- not
        // at the start and not following an exponent marker
        let bytes = body.as_bytes();
        let mut split = None;
        for idx in (1..bytes.len()).rev() {
            let b = bytes[idx];
            if (b == b'+' || b == b'-') && !matches!(bytes[idx - 1], b'e' | b'E') {
                split = Some(idx);
                break;
            }
        }
        match split {
            Some(idx) => Some((&body[..idx], &body[idx..])),
            None => Some(("0", body)),
        }
    } else {
        Some((text, "0"))
    }
}

fn parse_rational(text: &str) -> Option<Rational64> {
    let text = text.trim().trim_start_matches('+');
    if text.is_empty() {
        return None;
    }
    if let Some((p, q)) = text.split_once('/') {
        let p: i64 = p.trim().parse().ok()?;
        let q: i64 = q.trim().parse().ok()?;
        if q == 0 {
            return None;
        }
        Some(Rational64::new(p, q))
    } else {
        text.parse::<i64>().ok().map(Rational64::from_integer)
    }
}

fn parse_gaussian(text: &str) -> Option<GaussianRational> {
    let (re, im) = split_complex_literal(text)?;
    let im = match im.trim() {
        "" | "+" => "1",
        "-" => "-1",
        other => other,
    };
    Some(Complex::new(parse_rational(re)?, parse_rational(im)?))
}

impl FromStr for RationalPolynomial {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let coeffs = text
            .split(',')
            .map(|part| {
                parse_gaussian(part)
                    .ok_or_else(|| Error::invalid(format!("bad Gaussian rational '{part}'")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(coeffs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Complex<f64>;

    #[test]
    fn zero_polynomial_exponential_is_one() {
        let p = RationalPolynomial::zero();
        assert_eq!(p.degree(), 0);
        for s in [C::new(0.75, 0.0), C::new(-3.0, 12.5), C::new(100.0, -1.0)] {
            assert_eq!(exp_poly_eval(&p, s).unwrap(), C::new(1.0, 0.0));
        }
    }

    #[test]
    fn euler_identity() {
        let v = exp_poly_eval(&RationalPolynomial::x(), C::new(0.0, std::f64::consts::PI)).unwrap();
        assert!((v - C::new(-1.0, 0.0)).norm() <= 1e-12);
    }

    #[test]
    fn affine_exponent() {
        // P(X) = 1 + X/2 at s = 0.75: e^{1.375}
        let p: RationalPolynomial = "1+0i,1/2+0i".parse().unwrap();
        let v = exp_poly_eval(&p, C::new(0.75, 0.0)).unwrap();
        let oracle = 1.375_f64.exp();
        assert!((v.re - oracle).abs() < 1e-14 * oracle);
        assert_eq!(v.im, 0.0);
        assert!((v.re - 3.955_076_722_920_577).abs() < 1e-14);
    }

    #[test]
    fn overflow_guard() {
        let p = RationalPolynomial::from_integers(&[701]);
        assert!(matches!(
            exp_poly_eval(&p, C::new(0.0, 0.0)),
            Err(Error::Overflow { .. })
        ));
        let p = RationalPolynomial::from_integers(&[-701]);
        assert!(exp_poly_eval(&p, C::new(0.0, 0.0)).is_err());
        let p = RationalPolynomial::from_integers(&[699]);
        assert!(exp_poly_eval(&p, C::new(0.0, 0.0)).is_ok());
    }

    #[test]
    fn normalises_trailing_zeros() {
        let p = RationalPolynomial::from_integers(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), 1);
        let z = RationalPolynomial::from_integers(&[0, 0]);
        assert!(z.is_zero());
        assert_eq!(z, RationalPolynomial::zero());
    }

    #[test]
    fn text_round_trip() {
        let p: RationalPolynomial = "-1/2-3/4i,0+1i,7+0i".parse().unwrap();
        assert_eq!(p.degree(), 2);
        assert_eq!(p.to_string(), "-1/2-3/4i,0+1i,7+0i");
        assert_eq!(p.to_string().parse::<RationalPolynomial>().unwrap(), p);
        assert!("1/0+0i".parse::<RationalPolynomial>().is_err());
        assert!("x".parse::<RationalPolynomial>().is_err());
    }

    #[test]
    fn approximates_floats() {
        let p = RationalPolynomial::approximate(&[C::new(0.5, -0.25), C::new(1.0 / 3.0, 0.0)]).unwrap();
        assert_eq!(p.coeffs()[0], Complex::new(Rational64::new(1, 2), Rational64::new(-1, 4)));
        let v = p.eval(C::new(3.0, 0.0));
        assert!((v - C::new(1.5, -0.25)).norm() < 1e-15);
    }

    #[test]
    fn split_literals() {
        assert_eq!(split_complex_literal("0.75+0i"), Some(("0.75", "+0")));
        assert_eq!(split_complex_literal("1e-3-2.5e+2i"), Some(("1e-3", "-2.5e+2")));
        assert_eq!(split_complex_literal("2"), Some(("2", "0")));
        assert_eq!(split_complex_literal("-3i"), Some(("0", "-3")));
    }
}
