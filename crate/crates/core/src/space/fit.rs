//! Least-squares polynomial fits on grid samples, standing in for Mergelyan's
//! theorem: the fit is only as good as its reported residual.

use std::collections::HashSet;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Condition estimates above this are treated as numerically singular.
pub const MAX_CONDITION: f64 = 1e12;

/// `P(s) = sum_k c_k (s - center)^k`.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial<T> {
    center: Complex<T>,
    coeffs: Vec<Complex<T>>,
}

impl<T: Scalar> Polynomial<T> {
    pub fn new(center: Complex<T>, coeffs: Vec<Complex<T>>) -> Self {
        let coeffs = if coeffs.is_empty() {
            vec![Complex::new(T::zero(), T::zero())]
        } else {
            coeffs
        };
        Self { center, coeffs }
    }

    /// Coefficients in powers of `s` itself.
    pub fn monomial(coeffs: Vec<Complex<T>>) -> Self {
        Self::new(Complex::new(T::zero(), T::zero()), coeffs)
    }

    pub fn constant(c: Complex<T>) -> Self {
        Self::monomial(vec![c])
    }

    pub fn center(&self) -> Complex<T> {
        self.center
    }

    pub fn coeffs(&self) -> &[Complex<T>] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn eval(&self, s: Complex<T>) -> Complex<T> {
        let z = s - self.center;
        self.coeffs
            .iter()
            .rev()
            .fold(Complex::new(T::zero(), T::zero()), |acc, &c| acc * z + c)
    }

    /// Re-expand around `0`: `sum_m s^m sum_{k>=m} c_k C(k, m) (-center)^{k-m}`.
    pub fn to_monomial(&self) -> Vec<Complex<T>> {
        let n = self.coeffs.len();
        let shift = -self.center;
        let mut out = vec![Complex::new(T::zero(), T::zero()); n];
        for (k, &c) in self.coeffs.iter().enumerate() {
            // binomial(k, m) * shift^{k-m}, built from m = k downwards
            let mut binom = T::one();
            let mut power = Complex::new(T::one(), T::zero());
            for m in (0..=k).rev() {
                out[m] = out[m] + c * power.scale(binom);
                power = power * shift;
                if m > 0 {
                    binom = binom * T::from_usize_lossy(m) / T::from_usize_lossy(k - m + 1);
                }
            }
        }
        out
    }
}

/// Result of [`mergelyan_fit`].
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialFit<T> {
    pub polynomial: Polynomial<T>,
    /// `max_j |P(s_j) - v_j|` over the samples.
    pub residual: T,
    /// `max |R_kk| / min |R_kk|` of the scaled design matrix.
    pub condition: T,
}

/// Least-squares polynomial of the given degree through `(s_j, v_j)` samples.
///
/// The basis is `((s - c)/r)^k` with `c` the centre of the sample bounding box
/// and `r` the largest sample distance from `c`; the system is solved by
/// Householder QR and the result is returned in powers of `s - c`.
pub fn mergelyan_fit<T: Scalar>(
    samples: &[(Complex<T>, Complex<T>)],
    degree: usize,
) -> Result<PolynomialFit<T>> {
    let cols = degree + 1;
    let rows = samples.len();
    if rows < cols {
        return Err(Error::invalid(format!(
            "degree {degree} fit needs at least {cols} samples, got {rows}"
        )));
    }
    let mut seen = HashSet::with_capacity(rows);
    for (s, v) in samples {
        if !(s.re.is_finite() && s.im.is_finite() && v.re.is_finite() && v.im.is_finite()) {
            return Err(Error::invalid("non-finite sample"));
        }
        if !seen.insert((s.re.as_f64().to_bits(), s.im.as_f64().to_bits())) {
            return Err(Error::invalid(format!("duplicate sample point {s}")));
        }
    }

    let (mut lo, mut hi) = (samples[0].0, samples[0].0);
    for (s, _) in samples {
        lo = Complex::new(lo.re.min(s.re), lo.im.min(s.im));
        hi = Complex::new(hi.re.max(s.re), hi.im.max(s.im));
    }
    let center = (lo + hi).scale(T::lit(0.5));
    let mut radius = samples
        .iter()
        .map(|(s, _)| (*s - center).norm())
        .fold(T::zero(), T::max);
    if radius == T::zero() {
        radius = T::one();
    }

    // column-major design matrix
    let mut a: Vec<Vec<Complex<T>>> = vec![Vec::with_capacity(rows); cols];
    for (s, _) in samples {
        let z = (*s - center).unscale(radius);
        let mut p = Complex::new(T::one(), T::zero());
        for col in a.iter_mut() {
            col.push(p);
            p = p * z;
        }
    }
    let mut b: Vec<Complex<T>> = samples.iter().map(|(_, v)| *v).collect();

    let diag = householder_qr(&mut a, &mut b);
    let largest = diag.iter().copied().fold(T::zero(), T::max);
    let smallest = diag.iter().copied().fold(T::infinity(), T::min);
    let condition = if smallest > T::zero() {
        largest / smallest
    } else {
        T::infinity()
    };
    if !(condition <= T::lit(MAX_CONDITION)) {
        return Err(Error::Conditioning {
            estimate: condition.as_f64(),
        });
    }

    // back substitution on the upper triangle stored in a[col][row]
    let mut x = vec![Complex::new(T::zero(), T::zero()); cols];
    for k in (0..cols).rev() {
        let mut acc = b[k];
        for j in k + 1..cols {
            acc = acc - a[j][k] * x[j];
        }
        x[k] = acc / a[k][k];
    }

    let mut scale = T::one();
    let coeffs = x
        .into_iter()
        .map(|c| {
            let out = c.unscale(scale);
            scale = scale * radius;
            out
        })
        .collect();
    let polynomial = Polynomial::new(center, coeffs);
    let residual = samples
        .iter()
        .map(|(s, v)| (polynomial.eval(*s) - *v).norm())
        .fold(T::zero(), T::max);
    Ok(PolynomialFit {
        polynomial,
        residual,
        condition,
    })
}

/// In-place Householder QR of the column-major `a`, applying the reflections
/// to `b`. Returns `|R_kk|`.
fn householder_qr<T: Scalar>(a: &mut [Vec<Complex<T>>], b: &mut [Complex<T>]) -> Vec<T> {
    let rows = b.len();
    let cols = a.len();
    let mut diag = Vec::with_capacity(cols);
    for k in 0..cols {
        let norm = a[k][k..].iter().map(|z| z.norm_sqr()).fold(T::zero(), |x, y| x + y).sqrt();
        if norm == T::zero() {
            diag.push(T::zero());
            continue;
        }
        let head = a[k][k];
        let phase = if head.norm() == T::zero() {
            Complex::new(T::one(), T::zero())
        } else {
            head.unscale(head.norm())
        };
        let alpha = -phase.scale(norm);
        let mut v: Vec<Complex<T>> = a[k][k..].to_vec();
        v[0] = v[0] - alpha;
        let vnorm = v.iter().map(|z| z.norm_sqr()).fold(T::zero(), |x, y| x + y).sqrt();
        if vnorm > T::zero() {
            for z in v.iter_mut() {
                *z = z.unscale(vnorm);
            }
            let reflect = |col: &mut [Complex<T>]| {
                let dot = v
                    .iter()
                    .zip(col.iter())
                    .fold(Complex::new(T::zero(), T::zero()), |acc, (vi, ci)| acc + vi.conj() * ci);
                for (ci, vi) in col.iter_mut().zip(v.iter()) {
                    *ci = *ci - vi * dot.scale(T::lit(2.0));
                }
            };
            for col in a.iter_mut().skip(k) {
                reflect(&mut col[k..rows]);
            }
            reflect(&mut b[k..rows]);
        }
        diag.push(a[k][k].norm());
    }
    diag
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Complex<f64>;

    fn rect_points() -> Vec<C> {
        let mut pts = Vec::new();
        for i in 0..4 {
            for j in 0..11 {
                pts.push(C::new(0.6 + 0.1 * i as f64, 0.1 * j as f64));
            }
        }
        pts
    }

    #[test]
    fn recovers_quadratic() {
        let truth = [C::new(1.0, -2.0), C::new(0.5, 0.25), C::new(-3.0, 1.0)];
        let samples: Vec<(C, C)> = rect_points()
            .into_iter()
            .map(|s| (s, truth[0] + truth[1] * s + truth[2] * s * s))
            .collect();
        let fit = mergelyan_fit(&samples, 2).unwrap();
        assert!(fit.residual <= 1e-8);
        let mono = fit.polynomial.to_monomial();
        for (c, t) in mono.iter().zip(truth.iter()) {
            assert!((c - t).norm() <= 1e-8, "{c} vs {t}");
        }
    }

    #[test]
    fn single_sample_constant() {
        let v = C::new(2.5, -1.0);
        let fit = mergelyan_fit(&[(C::new(0.7, 3.0), v)], 0).unwrap();
        assert_eq!(fit.polynomial.degree(), 0);
        assert!((fit.polynomial.coeffs()[0] - v).norm() < 1e-15);
        assert_eq!(fit.residual, 0.0);
    }

    #[test]
    fn preconditions() {
        let s = [(C::new(0.7, 0.0), C::new(1.0, 0.0)), (C::new(0.8, 0.0), C::new(2.0, 0.0))];
        assert!(mergelyan_fit(&s, 2).is_err());
        let dup = [(C::new(0.7, 0.0), C::new(1.0, 0.0)), (C::new(0.7, 0.0), C::new(2.0, 0.0))];
        assert!(mergelyan_fit(&dup, 1).is_err());
    }

    #[test]
    fn collinear_points_are_fine_for_complex_polynomials() {
        // distinct points on a line still determine a complex polynomial
        let samples: Vec<(C, C)> = (0..9)
            .map(|j| {
                let s = C::new(0.75, -1.0 + 0.25 * j as f64);
                (s, s * s)
            })
            .collect();
        let fit = mergelyan_fit(&samples, 4).unwrap();
        assert!(fit.residual < 1e-12);
    }

    #[test]
    fn ill_conditioned_system_is_reported() {
        // two well-separated clusters, degree far beyond what they resolve
        let mut samples = Vec::new();
        for j in 0..20 {
            let eps = 1e-9 * j as f64;
            samples.push((C::new(0.6 + eps, 0.0), C::new(1.0, 0.0)));
            samples.push((C::new(0.9 + eps, 0.0), C::new(2.0, 0.0)));
        }
        let err = mergelyan_fit(&samples, 12).unwrap_err();
        assert!(matches!(err, Error::Conditioning { .. }));
    }

    #[test]
    fn to_monomial_matches_eval() {
        let p = Polynomial::new(C::new(0.75, 2.0), vec![C::new(1.0, 0.0), C::new(0.0, 1.0), C::new(2.0, -1.0), C::new(0.5, 0.5)]);
        let mono = Polynomial::monomial(p.to_monomial());
        for s in rect_points() {
            assert!((p.eval(s) - mono.eval(s)).norm() < 1e-12);
        }
    }
}
