//! Bijective enumeration `m <-> (N, P)` of the countable base indexed by
//! `N >= 1` and `P` in `Q(i)[X]`.
//!
//! Ordering, fixed once and for all:
//!
//! * rationals by height `max(|p|, q)` (0 has height 0), then by value;
//! * Gaussian rationals `a + bi` by `max(ht a, ht b)`, then lexicographically
//!   by the ranks of `(a, b)`;
//! * polynomials by weight `deg P + max height of coefficients`, then by
//!   degree, then lexicographically by coefficient ranks (constant term first);
//! * pairs by the Cantor diagonal on `(N - 1, rank P)`.
//!
//! So `m = 1` is `(1, 0)`, and each weight block is finite.

use num_complex::Complex;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::Zero;

use crate::kernels::{GaussianRational, RationalPolynomial};

/// Largest coefficient height handled; beyond it ranks would not fit in `u128`
/// for any useful degree anyway.
pub const MAX_HEIGHT: i64 = 4096;

/// A decoded base element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BaseElement {
    pub n: u64,
    pub poly: RationalPolynomial,
}

fn height(r: &Rational64) -> i64 {
    if r.is_zero() {
        return 0;
    }
    r.numer().abs().max(*r.denom())
}

fn gaussian_height(z: &GaussianRational) -> i64 {
    height(&z.re).max(height(&z.im))
}

/// Rationals of height exactly `h`, in increasing order.
fn rational_level(h: i64) -> Vec<Rational64> {
    if h == 0 {
        return vec![Rational64::zero()];
    }
    let mut pos = Vec::new();
    for q in 1..=h {
        if h.gcd(&q) == 1 {
            pos.push(Rational64::new(h, q));
        }
    }
    for p in 1..h {
        if p.gcd(&h) == 1 {
            pos.push(Rational64::new(p, h));
        }
    }
    pos.sort();
    let mut level: Vec<Rational64> = pos.iter().rev().map(|r| -*r).collect();
    level.extend(pos);
    level
}

/// `r(h)`: number of rationals of height `<= h`.
fn rationals_up_to(h: i64) -> u128 {
    if h < 0 {
        return 0;
    }
    let mut count = 1u128;
    for k in 1..=h {
        count += rational_level(k).len() as u128;
    }
    count
}

fn rational_rank(r: &Rational64) -> u128 {
    let h = height(r);
    let level = rational_level(h);
    let pos = level.binary_search(r).expect("rational lies in its own height level");
    rationals_up_to(h - 1) + pos as u128
}

/// Rational with the given global rank.
fn rational_at(rank: u128) -> Rational64 {
    let mut before = 0u128;
    let mut h = 0i64;
    loop {
        let level = rational_level(h);
        let len = level.len() as u128;
        if rank < before + len {
            return level[(rank - before) as usize];
        }
        before += len;
        h += 1;
    }
}

/// `G(h)`: number of Gaussian rationals of height `<= h`.
fn gaussians_up_to(h: i64) -> u128 {
    let r = rationals_up_to(h);
    r * r
}

/// Global rank of a Gaussian rational.
fn gaussian_rank(z: &GaussianRational) -> u128 {
    let k = gaussian_height(z);
    let below = rationals_up_to(k - 1);
    let ra = rational_rank(&z.re);
    let rb = rational_rank(&z.im);
    let r = rationals_up_to(k);
    // pairs (x, y) in [0, r)^2 with max(x, y) >= below, ordered lexicographically
    let mut offset = 0u128;
    for x in 0..ra {
        offset += if x >= below { r } else { r - below };
    }
    offset += if ra >= below { rb } else { rb - below };
    gaussians_up_to(k - 1) + offset
}

fn gaussian_at(rank: u128) -> GaussianRational {
    let mut k = 0i64;
    while gaussians_up_to(k) <= rank {
        k += 1;
    }
    let below = rationals_up_to(k - 1);
    let r = rationals_up_to(k);
    let mut offset = rank - gaussians_up_to(k - 1);
    let mut x = 0u128;
    loop {
        let width = if x >= below { r } else { r - below };
        if offset < width {
            let y = if x >= below { offset } else { below + offset };
            return Complex::new(rational_at(x), rational_at(y));
        }
        offset -= width;
        x += 1;
    }
}

fn pow_sat(base: u128, exp: usize) -> u128 {
    let mut acc = 1u128;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
    }
    acc
}

/// Digit-tuple bookkeeping for degree `d` and height `h`.
struct Block {
    d: usize,
    /// `G(h)`
    all: u128,
    /// `G(h - 1)`: digits below this have height `< h`
    low: u128,
}

impl Block {
    fn new(d: usize, h: i64) -> Self {
        Self {
            d,
            all: gaussians_up_to(h),
            low: gaussians_up_to(h - 1),
        }
    }

    /// Valid completions of `len` further digits; the final digit (if any) is
    /// nonzero and some digit must reach height `h` unless `has_top`.
    fn completions(&self, len: usize, has_top: bool) -> u128 {
        if len == 0 {
            return u128::from(has_top);
        }
        let total = pow_sat(self.all, len - 1).saturating_mul(self.all - 1);
        if has_top {
            return total;
        }
        let low = if self.low == 0 {
            0
        } else {
            pow_sat(self.low, len - 1).saturating_mul(self.low - 1)
        };
        total - low
    }

    fn size(&self) -> u128 {
        if self.d == 0 {
            self.all - self.low
        } else {
            self.completions(self.d + 1, false)
        }
    }

    /// Number of digits in `from..to` that keep `has_top` as given, and the number that set it.
    fn split(&self, from: u128, to: u128) -> (u128, u128) {
        if to <= from {
            return (0, 0);
        }
        let below = to.min(self.low).saturating_sub(from);
        (below, to - from - below)
    }

    fn rank(&self, digits: &[u128]) -> u128 {
        if self.d == 0 {
            return digits[0] - self.low;
        }
        let mut rank = 0u128;
        let mut has_top = false;
        for (i, &digit) in digits.iter().enumerate() {
            let remaining = self.d - i;
            let first = if i == self.d { 1 } else { 0 };
            let (keep, set) = self.split(first, digit);
            let per_keep = self.completions(remaining, has_top);
            let per_set = self.completions(remaining, true);
            if remaining == 0 {
                // final position: each smaller digit is a complete tuple
                rank += if has_top { keep + set } else { set };
            } else {
                rank += keep * per_keep + set * per_set;
            }
            has_top |= digit >= self.low;
        }
        rank
    }

    fn unrank(&self, mut rank: u128) -> Vec<u128> {
        if self.d == 0 {
            return vec![self.low + rank];
        }
        let mut digits = Vec::with_capacity(self.d + 1);
        let mut has_top = false;
        for i in 0..=self.d {
            let remaining = self.d - i;
            let first = if i == self.d { 1 } else { 0 };
            let mut chosen = None;
            // digits below `low` first, then the rest, all in increasing order
            let ranges = [(first, self.low.max(first)), (self.low.max(first), self.all)];
            for (from, to) in ranges {
                if to <= from {
                    continue;
                }
                let top_after = has_top || from >= self.low;
                let per = if remaining == 0 {
                    u128::from(top_after)
                } else {
                    self.completions(remaining, top_after)
                };
                if per == 0 {
                    continue;
                }
                let span = (to - from).saturating_mul(per);
                if rank < span {
                    chosen = Some(from + rank / per);
                    rank %= per;
                    break;
                }
                rank -= span;
            }
            let digit = chosen.expect("rank within block");
            has_top |= digit >= self.low;
            digits.push(digit);
        }
        digits
    }
}

fn weight_blocks(w: usize) -> impl Iterator<Item = Block> {
    (0..=w).map(move |d| Block::new(d, (w - d) as i64))
}

/// Rank of `P` in the polynomial order, `None` if a coefficient exceeds
/// [`MAX_HEIGHT`] or the rank overflows.
pub fn polynomial_rank(poly: &RationalPolynomial) -> Option<u128> {
    let coeffs = poly.coeffs();
    let h = coeffs.iter().map(gaussian_height).max().unwrap_or(0);
    if h > MAX_HEIGHT {
        return None;
    }
    let d = poly.degree();
    let w = d + h as usize;
    let mut rank = 0u128;
    for v in 0..w {
        for block in weight_blocks(v) {
            rank = rank.checked_add(block.size())?;
            if rank == u128::MAX {
                return None;
            }
        }
    }
    for block in weight_blocks(w).take(d) {
        rank = rank.checked_add(block.size())?;
    }
    let block = Block::new(d, h);
    let digits: Vec<u128> = coeffs.iter().map(gaussian_rank).collect();
    rank.checked_add(block.rank(&digits))
}

/// Polynomial with the given rank.
pub fn polynomial_at(mut rank: u128) -> RationalPolynomial {
    let mut w = 0usize;
    loop {
        for block in weight_blocks(w) {
            let size = block.size();
            if rank < size {
                let digits = block.unrank(rank);
                return RationalPolynomial::new(digits.into_iter().map(gaussian_at).collect());
            }
            rank -= size;
        }
        w += 1;
    }
}

fn cantor_unpair(z: u128) -> (u128, u128) {
    // largest w with w(w+1)/2 <= z
    let mut w = ((8.0 * z as f64 + 1.0).sqrt() as u128).saturating_sub(1) / 2;
    while (w + 1) * (w + 2) / 2 <= z {
        w += 1;
    }
    while w * (w + 1) / 2 > z {
        w -= 1;
    }
    let y = z - w * (w + 1) / 2;
    (w - y, y)
}

fn cantor_pair(x: u128, y: u128) -> Option<u128> {
    let w = x.checked_add(y)?;
    w.checked_mul(w.checked_add(1)?)
        .map(|t| t / 2)
        .and_then(|t| t.checked_add(y))
}

/// Decode the `m`-th base element, `m >= 1`.
pub fn enumerate_base(m: u64) -> BaseElement {
    assert!(m >= 1, "base indices start at 1");
    let (x, y) = cantor_unpair(u128::from(m) - 1);
    BaseElement {
        n: (x + 1) as u64,
        poly: polynomial_at(y),
    }
}

/// Index `m` of `(N, P)`, or `None` when it does not fit in `u64`.
pub fn encode_base(n: u64, poly: &RationalPolynomial) -> Option<u64> {
    if n == 0 {
        return None;
    }
    let z = cantor_pair(u128::from(n - 1), polynomial_rank(poly)?)?;
    u64::try_from(z.checked_add(1)?).ok()
}
