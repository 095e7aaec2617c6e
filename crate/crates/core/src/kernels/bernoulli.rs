//! Exact Bernoulli numbers and the Euler–Maclaurin coefficient table.

use std::sync::LazyLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// Largest correction order `K` supported by the Euler–Maclaurin kernel.
pub const MAX_BERNOULLI_ORDER: usize = 30;

/// `B_n` as an exact rational, via the Akiyama–Tanigawa transform.
///
/// Uses the convention `B_1 = +1/2`; only even indices matter to callers here.
pub fn bernoulli(n: usize) -> BigRational {
    let mut row: Vec<BigRational> = Vec::with_capacity(n + 1);
    for m in 0..=n {
        row.push(BigRational::new(BigInt::one(), BigInt::from(m + 1)));
        for j in (1..=m).rev() {
            let diff = &row[j - 1] - &row[j];
            row[j - 1] = diff * BigRational::from_integer(BigInt::from(j));
        }
    }
    row[0].clone()
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `B_{2k} / (2k)!` for `k = 1..=MAX_BERNOULLI_ORDER`, rounded once from the exact value.
static EM_COEFFICIENTS: LazyLock<Vec<f64>> = LazyLock::new(|| {
    (1..=MAX_BERNOULLI_ORDER)
        .map(|k| {
            let exact = bernoulli(2 * k) / BigRational::from_integer(factorial(2 * k));
            debug_assert!(!exact.is_zero());
            exact.to_f64().expect("Bernoulli ratio representable in f64")
        })
        .collect()
});

/// Coefficient `B_{2k}/(2k)!` for `k >= 1`.
pub(crate) fn em_coefficient(k: usize) -> f64 {
    EM_COEFFICIENTS[k - 1]
}
